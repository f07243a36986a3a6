// Shapes of the service's JSON responses (see /api/* in the Python package).

export interface PointOut {
  name: string;
  x: number;
  y: number;
}

export interface StepOut {
  kind: string;
  defined: string;
  args: string[];
}

export interface ParseResponse {
  points: PointOut[];
  steps: StepOut[];
  goals: string[];
}

export interface Candidate {
  index: number;
  fact: string;
}

export interface DetectResponse {
  candidates: Candidate[];
}

export type RenderMode = "flat" | "tree" | "dot";

export interface ProveRequest {
  source: string;
  goal?: string | null;
  lang?: string;
  render?: RenderMode;
  structure?: boolean;
  backend?: "gdd" | "wu";
  seed?: number;
}

export interface DagNode {
  index: number;
  fact: string;
  reason: string;
  antecedents: number[];
}

export interface ProveResponse {
  status: "proved" | "not_proved" | "error";
  rendering: string;
  dag: DagNode[];
  ndgs: string[];
  diagnostics: string;
}

export interface CatalogEntry {
  id: number;
  key: string;
  text: string;
  tooltip: string | null;
}

export interface CatalogResponse {
  language: string;
  entries: CatalogEntry[];
}
