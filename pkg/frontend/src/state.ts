// Session state for the three-step workflow and its pure transitions.
// Step 1: edit/load a construction.  Step 2: pick a detected property.
// Step 3: read the proof.  Rendering is done elsewhere; everything here is
// plain data so the flow is testable without a browser.

import { Candidate, ParseResponse, ProveResponse, RenderMode } from "./types";

export interface SessionState {
  source: string;
  parse: ParseResponse | null;
  parseError: string | null;
  candidates: Candidate[];
  selectedGoal: string | null; // a candidate fact or a declared goal
  proof: ProveResponse | null;
  lang: string;
  languages: string[]; // catalogs the service confirmed it serves
  render: "tree" | "flat";
  structure: boolean;
  banner: string | null; // blocking message when the service is unreachable
}

export function initialState(): SessionState {
  return {
    source: "",
    parse: null,
    parseError: null,
    candidates: [],
    selectedGoal: null,
    proof: null,
    lang: "en",
    languages: ["en"],
    render: "tree",
    structure: true,
    banner: null,
  };
}

export function currentStep(s: SessionState): 1 | 2 | 3 {
  if (s.proof !== null) return 3;
  if (s.parse !== null && s.parseError === null) return 2;
  return 1;
}

// Editing invalidates everything downstream but keeps the user's settings.
export function withSource(s: SessionState, source: string): SessionState {
  return {
    ...s,
    source,
    parse: null,
    parseError: null,
    candidates: [],
    selectedGoal: null,
    proof: null,
  };
}

export function withParse(s: SessionState, parse: ParseResponse): SessionState {
  return { ...s, parse, parseError: null };
}

export function withParseError(s: SessionState, message: string): SessionState {
  return { ...s, parse: null, parseError: message, candidates: [], proof: null };
}

export function withCandidates(s: SessionState, candidates: Candidate[]): SessionState {
  return { ...s, candidates };
}

// The goal must be something the user can actually point at: a detected
// candidate or a goal declared in the construction itself.
export function selectGoal(s: SessionState, goal: string): SessionState {
  const declared = s.parse?.goals ?? [];
  const detected = s.candidates.map((c) => c.fact);
  if (!detected.includes(goal) && !declared.includes(goal)) {
    return s;
  }
  return { ...s, selectedGoal: goal, proof: null };
}

export function withProof(s: SessionState, proof: ProveResponse): SessionState {
  return { ...s, proof };
}

export function setLanguage(s: SessionState, lang: string): SessionState {
  if (!s.languages.includes(lang)) return s;
  return { ...s, lang };
}

export function setLanguages(s: SessionState, languages: string[]): SessionState {
  const lang = languages.includes(s.lang) ? s.lang : languages[0] ?? "en";
  return { ...s, languages, lang };
}

export function setRender(s: SessionState, render: "tree" | "flat"): SessionState {
  return { ...s, render };
}

export function toggleStructure(s: SessionState): SessionState {
  return { ...s, structure: !s.structure };
}

export function withBanner(s: SessionState, message: string | null): SessionState {
  return { ...s, banner: message };
}

// What to ask the service for, given the current knobs.  The DOT export is
// requested separately (see download button) so the proof view always holds
// a flat or tree rendering.
export function proveRequest(s: SessionState, render?: RenderMode) {
  return {
    source: s.source,
    goal: s.selectedGoal,
    lang: s.lang,
    render: render ?? (s.structure ? s.render : "flat"),
    structure: s.structure,
  };
}
