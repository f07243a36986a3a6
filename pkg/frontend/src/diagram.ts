// Draw the witness diagram returned by /api/parse.  Which segments to show
// is a presentation choice per construction step; all coordinates come from
// the service, the client computes nothing geometric.

import { ParseResponse, StepOut } from "./types";

export type Segment = [string, string];

export function figureSegments(steps: StepOut[]): Segment[] {
  const seen = new Set<string>();
  const out: Segment[] = [];
  const add = (a: string, b: string) => {
    const key = a < b ? `${a}|${b}` : `${b}|${a}`;
    if (a !== b && !seen.has(key)) {
      seen.add(key);
      out.push([a, b]);
    }
  };
  for (const s of steps) {
    if (s.kind === "midpoint") add(s.args[0], s.args[1]);
    else if (s.kind === "foot") {
      add(s.args[1], s.args[2]); // the base line
      add(s.args[0], s.defined); // the dropped perpendicular
    } else if (s.kind === "intersect_ll") {
      add(s.args[0], s.args[1]);
      add(s.args[2], s.args[3]);
    } else if (s.kind === "point_on_line") add(s.args[0], s.args[1]);
  }
  return out;
}

export interface Transform {
  scale: number;
  ox: number;
  oy: number;
}

// Fit the bounding box of the points into a width x height canvas, flipping
// y so the figure is drawn the usual way up.
export function fitTransform(
  points: Array<{ x: number; y: number }>,
  width: number,
  height: number,
  margin = 24
): Transform {
  if (!points.length) return { scale: 1, ox: width / 2, oy: height / 2 };
  const xs = points.map((p) => p.x);
  const ys = points.map((p) => p.y);
  const spanX = Math.max(...xs) - Math.min(...xs);
  const spanY = Math.max(...ys) - Math.min(...ys);
  const scale = Math.min(
    (width - 2 * margin) / Math.max(spanX, 1e-9),
    (height - 2 * margin) / Math.max(spanY, 1e-9)
  );
  const cx = (Math.max(...xs) + Math.min(...xs)) / 2;
  const cy = (Math.max(...ys) + Math.min(...ys)) / 2;
  return { scale, ox: width / 2 - cx * scale, oy: height / 2 + cy * scale };
}

export function toCanvas(t: Transform, x: number, y: number): [number, number] {
  return [t.ox + x * t.scale, t.oy - y * t.scale];
}

export function drawDiagram(
  canvas: HTMLCanvasElement,
  parse: ParseResponse
): void {
  const ctx = canvas.getContext("2d")!;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const t = fitTransform(parse.points, canvas.width, canvas.height);
  const at = new Map(parse.points.map((p) => [p.name, p]));

  ctx.strokeStyle = "#4a6f9c";
  ctx.lineWidth = 1.5;
  for (const [a, b] of figureSegments(parse.steps)) {
    const pa = at.get(a);
    const pb = at.get(b);
    if (!pa || !pb) continue;
    ctx.beginPath();
    ctx.moveTo(...toCanvas(t, pa.x, pa.y));
    ctx.lineTo(...toCanvas(t, pb.x, pb.y));
    ctx.stroke();
  }

  ctx.fillStyle = "#1d2733";
  ctx.font = "13px sans-serif";
  for (const p of parse.points) {
    const [x, y] = toCanvas(t, p.x, p.y);
    ctx.beginPath();
    ctx.arc(x, y, 3.5, 0, 2 * Math.PI);
    ctx.fill();
    ctx.fillText(p.name, x + 6, y - 6);
  }
}
