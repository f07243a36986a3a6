// Render the proof either as the service's localized text or as an
// interactive DAG built from the structured nodes in the response.

import { Lookup } from "./i18n";
import { layoutDag } from "./layout";
import { DagNode, ProveResponse } from "./types";

const SVG_NS = "http://www.w3.org/2000/svg";

export function renderText(target: HTMLElement, proof: ProveResponse): void {
  target.textContent = proof.rendering;
}

export function renderDag(
  target: HTMLElement,
  nodes: DagNode[],
  tr: Lookup,
  tooltip: (key: string) => string | null
): void {
  target.textContent = "";
  const layout = layoutDag(nodes);
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${layout.width} ${layout.height}`);
  svg.setAttribute("width", String(layout.width));
  svg.setAttribute("height", String(layout.height));

  const pos = new Map(layout.placed.map((p) => [p.node.index, p]));
  for (const edge of layout.edges) {
    const a = pos.get(edge.from)!;
    const b = pos.get(edge.to)!;
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", String(a.x));
    line.setAttribute("y1", String(a.y));
    line.setAttribute("x2", String(b.x));
    line.setAttribute("y2", String(b.y));
    line.setAttribute("class", "dag-edge");
    svg.appendChild(line);
  }

  for (const p of layout.placed) {
    const g = document.createElementNS(SVG_NS, "g");
    g.setAttribute("class", p.node.antecedents.length ? "dag-node" : "dag-node dag-hyp");
    const rect = document.createElementNS(SVG_NS, "rect");
    rect.setAttribute("x", String(p.x - 65));
    rect.setAttribute("y", String(p.y - 22));
    rect.setAttribute("width", "130");
    rect.setAttribute("height", "44");
    rect.setAttribute("rx", "6");
    g.appendChild(rect);

    const fact = document.createElementNS(SVG_NS, "text");
    fact.setAttribute("x", String(p.x));
    fact.setAttribute("y", String(p.y - 4));
    fact.setAttribute("text-anchor", "middle");
    fact.textContent = `${p.node.index}. ${p.node.fact}`;
    g.appendChild(fact);

    const reason = document.createElementNS(SVG_NS, "text");
    reason.setAttribute("x", String(p.x));
    reason.setAttribute("y", String(p.y + 12));
    reason.setAttribute("text-anchor", "middle");
    reason.setAttribute("class", "dag-reason");
    reason.textContent = tr(p.node.reason === "hypothesis" ? "by HYP" : p.node.reason);
    g.appendChild(reason);

    const tip = tooltip(p.node.reason === "hypothesis" ? "by HYP" : p.node.reason);
    if (tip) {
      const title = document.createElementNS(SVG_NS, "title");
      title.textContent = tip;
      g.appendChild(title);
    }
    svg.appendChild(g);
  }
  target.appendChild(svg);
}
