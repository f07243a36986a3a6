"""Numeric witnesses for constructions.

``realize`` samples free points from a seeded generator (or uses imported
coordinate hints), computes constructed points exactly, and retries on
near-degenerate configurations.  ``holds_numerically`` is the diagram filter
used by the deduction engine: every residual is compared against a tolerance
scaled to the diagram's bounding box, so the check is invariant under
translation and scaling of the whole figure.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, List, Tuple

from .errors import DegenerateError
from .model import Construction, Fact, canonical_fact, hypothesis_facts

Point = Tuple[float, float]

CONSTRUCTION_TOL = 1e-9
FACT_TOL = 1e-6
MIN_SEPARATION = 1e-4  # max-norm, after normalising the bounding box
MAX_RESAMPLES = 100
_DETECT_SEED_SALT = 0x9E3779B9  # second, independent realization for detection


@dataclass(frozen=True)
class Diagram:
    """Coordinates for every point of a construction, plus its tolerances."""

    coords: Dict[str, Point]
    seed: int
    construction_tol: float = CONSTRUCTION_TOL
    fact_tol: float = FACT_TOL

    def __getitem__(self, label: str) -> Point:
        return self.coords[label]

    @property
    def scale(self) -> float:
        xs = [p[0] for p in self.coords.values()]
        ys = [p[1] for p in self.coords.values()]
        if not xs:
            return 1.0
        return max(max(xs) - min(xs), max(ys) - min(ys), 1e-12)


def _sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1])


def _cross(u: Point, v: Point) -> float:
    return u[0] * v[1] - u[1] * v[0]


def _dot(u: Point, v: Point) -> float:
    return u[0] * v[0] + u[1] * v[1]


def _norm(u: Point) -> float:
    return math.hypot(u[0], u[1])


def _compute_step(kind: str, args: List[Point], rng: random.Random) -> Point:
    if kind == "midpoint":
        (ax, ay), (bx, by) = args
        return ((ax + bx) / 2.0, (ay + by) / 2.0)
    if kind == "foot":
        a, b, c = args
        u = _sub(c, b)
        den = _dot(u, u)
        if den <= 0.0:
            raise DegenerateError("foot onto a zero-length line", step=kind)
        t = _dot(_sub(a, b), u) / den
        return (b[0] + t * u[0], b[1] + t * u[1])
    if kind == "intersect_ll":
        a, b, c, d = args
        u, v = _sub(b, a), _sub(d, c)
        den = _cross(u, v)
        span = max(_norm(u), _norm(v), 1e-12)
        if abs(den) <= 1e-12 * span * span:
            raise DegenerateError("intersecting parallel lines", step=kind)
        t = _cross(_sub(c, a), v) / den
        return (a[0] + t * u[0], a[1] + t * u[1])
    if kind == "point_on_line":
        a, b = args
        t = rng.uniform(0.15, 0.85)
        return (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
    raise DegenerateError(f"cannot compute step kind {kind!r}", step=kind)


def _separated(coords: Dict[str, Point]) -> bool:
    pts = list(coords.values())
    if len(pts) < 2:
        return True
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    span = max(max(xs) - min(xs), max(ys) - min(ys))
    if span <= 0.0:
        return False
    for (x1, y1), (x2, y2) in combinations(pts, 2):
        if max(abs(x1 - x2), abs(y1 - y2)) / span < MIN_SEPARATION:
            return False
    return True


def _step_residual(step_kind: str, pts: List[Point], result: Point) -> float:
    """Defining residual of a constructed point, normalised by local scale."""
    allpts = pts + [result]
    span = max(
        max(abs(p[0]) for p in allpts),
        max(abs(p[1]) for p in allpts),
        1.0,
    )
    if step_kind == "midpoint":
        a, b = pts
        return max(abs(2 * result[0] - a[0] - b[0]), abs(2 * result[1] - a[1] - b[1])) / span
    if step_kind == "foot":
        a, b, c = pts
        r1 = abs(_dot(_sub(result, a), _sub(c, b))) / (span * span)
        r2 = abs(_cross(_sub(result, b), _sub(c, b))) / (span * span)
        return max(r1, r2)
    if step_kind == "intersect_ll":
        a, b, c, d = pts
        r1 = abs(_cross(_sub(result, a), _sub(b, a))) / (span * span)
        r2 = abs(_cross(_sub(result, c), _sub(d, c))) / (span * span)
        return max(r1, r2)
    if step_kind == "point_on_line":
        a, b = pts
        return abs(_cross(_sub(result, a), _sub(b, a))) / (span * span)
    return 0.0


def realize(construction: Construction, seed: int) -> Diagram:
    """Produce a numeric witness, deterministically from *seed*.

    Free points without hints get fresh uniform samples on each retry; points
    with hints stay pinned.  Raises :class:`DegenerateError` after
    ``MAX_RESAMPLES`` failed attempts.
    """
    rng = random.Random(seed)
    last_error = "no points"
    for attempt in range(MAX_RESAMPLES):
        coords: Dict[str, Point] = {}
        try:
            for step in construction.steps:
                if step.kind == "free_point":
                    coords[step.defined] = (
                        step.hint if step.hint is not None else (rng.random(), rng.random())
                    )
                    continue
                args = [coords[a] for a in step.args]
                pt = _compute_step(step.kind, args, rng)
                if not all(math.isfinite(v) for v in pt):
                    raise DegenerateError("non-finite coordinates", step=step.kind)
                res = _step_residual(step.kind, args, pt)
                if res >= CONSTRUCTION_TOL:
                    raise DegenerateError(
                        f"step {step.defined} residual {res:g}", step=step.kind
                    )
                coords[step.defined] = pt
            if not _separated(coords):
                raise DegenerateError("two points nearly coincide")
        except DegenerateError as exc:
            last_error = str(exc)
            continue
        return Diagram(coords, seed)
    raise DegenerateError(
        f"could not realize construction after {MAX_RESAMPLES} attempts ({last_error})",
        attempts=MAX_RESAMPLES,
    )


def _angle_mod_pi(u: Point, v: Point) -> float:
    """Directed angle from line u to line v, in [0, pi)."""
    a = math.atan2(_cross(u, v), _dot(u, v))
    return a % math.pi


def residual(fact: Fact, d: Diagram) -> float:
    """Dimensionless defect of *fact* on *d*; 0 means the fact holds exactly.

    Returns ``inf`` for degenerate instances (zero-length direction segments)
    so that they are never admitted by the filter.
    """
    s = d.scale
    p = [d.coords[name] for name in fact.points]
    if fact.pred == "coll":
        return abs(_cross(_sub(p[1], p[0]), _sub(p[2], p[0]))) / (s * s)
    if fact.pred == "midp":
        m, a, b = p
        return max(abs(2 * m[0] - a[0] - b[0]), abs(2 * m[1] - a[1] - b[1])) / s
    if fact.pred in ("para", "perp"):
        u, v = _sub(p[1], p[0]), _sub(p[3], p[2])
        nu, nv = _norm(u), _norm(v)
        if nu < 1e-12 * s or nv < 1e-12 * s:
            return math.inf
        val = _cross(u, v) if fact.pred == "para" else _dot(u, v)
        return abs(val) / (nu * nv)
    if fact.pred == "cong":
        d1 = _dot(_sub(p[1], p[0]), _sub(p[1], p[0]))
        d2 = _dot(_sub(p[3], p[2]), _sub(p[3], p[2]))
        return abs(d1 - d2) / (s * s)
    if fact.pred == "eqangle":
        segs = [(_sub(p[i + 1], p[i])) for i in range(0, 8, 2)]
        for u in segs:
            if _norm(u) < 1e-12 * s:
                return math.inf
        a1 = _angle_mod_pi(segs[0], segs[1])
        a2 = _angle_mod_pi(segs[2], segs[3])
        diff = abs(a1 - a2) % math.pi
        return min(diff, math.pi - diff)
    if fact.pred == "cyclic":
        rows = [(x, y, x * x + y * y, 1.0) for (x, y) in p]
        det = _det4(rows)
        return abs(det) / (s ** 4)
    raise ValueError(f"unknown predicate {fact.pred!r}")  # pragma: no cover


def _det4(rows: List[Tuple[float, float, float, float]]) -> float:
    def det3(m):
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )

    total = 0.0
    for col in range(4):
        minor = [
            [rows[r][c] for c in range(4) if c != col] for r in range(1, 4)
        ]
        term = rows[0][col] * det3(minor)
        total += term if col % 2 == 0 else -term
    return total


def holds_numerically(fact: Fact, d: Diagram) -> bool:
    return residual(fact, d) <= d.fact_tol


def detect_properties(d: Diagram, construction: Construction) -> List[Fact]:
    """Scan the diagram for candidate facts, confirmed on a second seed.

    Covers ``coll`` over point triples, ``cyclic`` over quadruples and
    ``para``/``perp``/``cong`` over segment pairs; hypotheses of the
    construction itself are excluded.  Deterministic for a given diagram.
    """
    d1 = d
    d2 = realize(construction, d.seed ^ _DETECT_SEED_SALT)
    hyps = set(hypothesis_facts(construction))
    names = sorted(construction.points())
    found: List[Fact] = []

    def consider(pred: str, pts: Iterable[str]) -> None:
        f = canonical_fact(pred, tuple(pts))
        if f in hyps or f in seen:
            return
        seen.add(f)
        if holds_numerically(f, d1) and holds_numerically(f, d2):
            found.append(f)

    seen: set[Fact] = set()
    for trip in combinations(names, 3):
        consider("coll", trip)
    for quad in combinations(names, 4):
        consider("cyclic", quad)
    segs = list(combinations(names, 2))
    for s1, s2 in combinations(segs, 2):
        for pred in ("para", "perp", "cong"):
            consider(pred, s1 + s2)
    found.sort(key=lambda f: (PRED_ORDER[f.pred], f.points))
    return found


PRED_ORDER = {pred: i for i, pred in enumerate(("coll", "para", "perp", "cong", "cyclic", "midp", "eqangle"))}
