// Layered layout for the proof DAG: hypotheses at the bottom, goal on top,
// every edge pointing strictly upward.  Good enough to read interactively;
// publication output goes through the DOT download instead.

import { DagNode } from "./types";

export interface PlacedNode {
  node: DagNode;
  layer: number; // 0 = hypotheses
  slot: number; // position within the layer
  x: number;
  y: number;
}

export interface DagLayout {
  placed: PlacedNode[];
  layers: number;
  width: number;
  height: number;
  edges: Array<{ from: number; to: number }>; // antecedent index -> conclusion index
}

export const H_GAP = 150;
export const V_GAP = 90;

export function layerOf(nodes: DagNode[]): Map<number, number> {
  const byIndex = new Map(nodes.map((n) => [n.index, n]));
  const layers = new Map<number, number>();
  const place = (index: number): number => {
    const known = layers.get(index);
    if (known !== undefined) return known;
    const node = byIndex.get(index)!;
    const layer = node.antecedents.length
      ? 1 + Math.max(...node.antecedents.map(place))
      : 0;
    layers.set(index, layer);
    return layer;
  };
  for (const n of nodes) place(n.index);
  return layers;
}

export function layoutDag(nodes: DagNode[]): DagLayout {
  const layers = layerOf(nodes);
  const depth = nodes.length ? 1 + Math.max(...layers.values()) : 0;

  // Slot nodes within a layer by the average slot of their antecedents so
  // edges stay short; process layers bottom-up, ties broken by index.
  const slotOf = new Map<number, number>();
  const rows: DagNode[][] = Array.from({ length: depth }, () => []);
  for (const n of nodes) rows[layers.get(n.index)!].push(n);
  let widest = 0;
  rows.forEach((row, layer) => {
    const keyed = row.map((n) => {
      const anchors = n.antecedents.map((a) => slotOf.get(a) ?? 0);
      const mean = anchors.length
        ? anchors.reduce((s, v) => s + v, 0) / anchors.length
        : n.index;
      return { n, mean };
    });
    keyed.sort((a, b) => a.mean - b.mean || a.n.index - b.n.index);
    keyed.forEach(({ n }, slot) => slotOf.set(n.index, slot));
    widest = Math.max(widest, row.length);
  });

  const placed = nodes.map((node) => {
    const layer = layers.get(node.index)!;
    const slot = slotOf.get(node.index)!;
    return {
      node,
      layer,
      slot,
      x: (slot + 0.5) * H_GAP,
      y: (depth - 1 - layer + 0.5) * V_GAP,
    };
  });
  const edges = nodes.flatMap((n) =>
    n.antecedents.map((a) => ({ from: a, to: n.index }))
  );
  return {
    placed,
    layers: depth,
    width: Math.max(1, widest) * H_GAP,
    height: Math.max(1, depth) * V_GAP,
    edges,
  };
}
