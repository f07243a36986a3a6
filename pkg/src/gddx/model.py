"""Core vocabulary: geometric facts, construction steps and their hypotheses.

A :class:`Fact` is one of seven predicates over named points.  Facts are
stored and compared in a canonical form so that e.g. ``coll(B,A,C)`` and
``coll(A,B,C)`` are the same object.  For ``eqangle`` the canonical form is
the lexicographic minimum over the fact's symmetry group: the two angles may
swap, the two rays of an angle may swap simultaneously on both sides, and the
two points naming a ray may be reversed independently.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterator, Optional, Sequence, Tuple

from .errors import ConstructionError, FactError

PREDICATES: Tuple[str, ...] = ("coll", "para", "perp", "midp", "cong", "eqangle", "cyclic")

ARITY = {
    "coll": 3,
    "para": 4,
    "perp": 4,
    "midp": 3,
    "cong": 4,
    "eqangle": 8,
    "cyclic": 4,
}

_LABEL_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


def is_label(name: str) -> bool:
    return bool(_LABEL_RE.match(name))


@dataclass(frozen=True, order=True)
class Fact:
    """A canonicalized predicate instance.  Build via :func:`canonical_fact`."""

    pred: str
    points: Tuple[str, ...]

    def __str__(self) -> str:
        return f"{self.pred}({','.join(self.points)})"

    @property
    def key(self) -> Tuple[str, Tuple[str, ...]]:
        return (self.pred, self.points)


def _seg(a: str, b: str) -> Tuple[str, str]:
    return (a, b) if a <= b else (b, a)


def _pair_chain_images(pts: Sequence[str]) -> Iterator[Tuple[str, ...]]:
    # two unordered pairs, themselves unordered: 2*2*2 = 8 images
    (a, b, c, d) = pts
    for p, q in (((a, b), (c, d)), ((c, d), (a, b))):
        for p2 in (p, p[::-1]):
            for q2 in (q, q[::-1]):
                yield p2 + q2


def _eqangle_images(pts: Sequence[str]) -> Iterator[Tuple[str, ...]]:
    segs = [tuple(pts[i : i + 2]) for i in range(0, 8, 2)]
    for swap_sides in (False, True):
        s = [segs[2], segs[3], segs[0], segs[1]] if swap_sides else list(segs)
        for swap_rays in (False, True):
            t = [s[1], s[0], s[3], s[2]] if swap_rays else s
            for rev in product((False, True), repeat=4):
                yield tuple(
                    p for seg, r in zip(t, rev) for p in (seg[::-1] if r else seg)
                )


def fact_images(pred: str, points: Sequence[str]) -> Iterator[Tuple[str, ...]]:
    """All point tuples denoting the same fact (the fact's symmetry orbit)."""
    if pred == "coll":
        return iter(permutations(points))
    if pred == "cyclic":
        return iter(permutations(points))
    if pred == "midp":
        m, a, b = points
        return iter(((m, a, b), (m, b, a)))
    if pred in ("para", "perp", "cong"):
        return _pair_chain_images(points)
    if pred == "eqangle":
        return _eqangle_images(points)
    raise FactError(f"unknown predicate {pred!r}")


def canonical_fact(pred: str, points: Sequence[str]) -> Fact:
    """Validate arity and reduce *points* to the canonical representative."""
    if pred not in ARITY:
        raise FactError(f"unknown predicate {pred!r}")
    pts = tuple(points)
    if len(pts) != ARITY[pred]:
        raise FactError(
            f"{pred} expects {ARITY[pred]} points, got {len(pts)}"
        )
    for p in pts:
        if not isinstance(p, str) or not p:
            raise FactError(f"{pred}: point names must be non-empty strings")
    if pred == "coll" or pred == "cyclic":
        return Fact(pred, tuple(sorted(pts)))
    if pred == "midp":
        return Fact(pred, (pts[0],) + _seg(pts[1], pts[2]))
    return Fact(pred, min(fact_images(pred, pts)))


def parse_fact_text(text: str) -> Fact:
    """Parse ``"cyclic D E F G"`` or ``"cyclic(D,E,F,G)"`` into a Fact."""
    s = text.strip()
    m = re.match(r"^([a-z]+)\s*\(([^)]*)\)$", s)
    if m:
        pred, rest = m.group(1), m.group(2)
        pts = [p.strip() for p in rest.split(",") if p.strip()]
    else:
        parts = s.split()
        if not parts:
            raise FactError("empty fact text")
        pred, pts = parts[0], parts[1:]
    for p in pts:
        if not is_label(p):
            raise FactError(f"bad point name {p!r} in fact text")
    return canonical_fact(pred, pts)


# ---------------------------------------------------------------------------
# Construction steps

STEP_KINDS = {
    "free_point": 0,
    "midpoint": 2,
    "foot": 3,
    "intersect_ll": 4,
    "point_on_line": 2,
}


@dataclass(frozen=True)
class ConstructionStep:
    """One construction statement: ``defined`` is introduced from ``args``.

    ``hint`` optionally pins a free point to explicit coordinates (used by the
    GeoGebra importer and kept through text round-trips).
    """

    kind: str
    defined: str
    args: Tuple[str, ...] = ()
    hint: Optional[Tuple[float, float]] = None


@dataclass(frozen=True)
class Goal:
    fact: Fact
    source: str = "declared_in_script"  # or "user_selected"


@dataclass(frozen=True)
class Construction:
    steps: Tuple[ConstructionStep, ...] = ()
    goals: Tuple[Fact, ...] = ()

    def __post_init__(self) -> None:
        defined: set[str] = set()
        for step in self.steps:
            if step.kind not in STEP_KINDS:
                raise ConstructionError(f"unknown step kind {step.kind!r}")
            if not is_label(step.defined):
                raise ConstructionError(f"bad point label {step.defined!r}")
            if step.defined in defined:
                raise ConstructionError(f"duplicate point label {step.defined!r}")
            if len(step.args) != STEP_KINDS[step.kind]:
                raise ConstructionError(
                    f"{step.kind} takes {STEP_KINDS[step.kind]} arguments, "
                    f"got {len(step.args)}"
                )
            for a in step.args:
                if a not in defined:
                    raise ConstructionError(
                        f"step defining {step.defined!r} uses undefined point {a!r}"
                    )
            if step.kind == "foot" and step.args[1] == step.args[2]:
                raise ConstructionError(
                    f"foot {step.defined}: base line needs two distinct points"
                )
            if step.kind == "intersect_ll":
                a, b, c, d = step.args
                if {a, b} == {c, d}:
                    raise ConstructionError(
                        f"intersect_ll {step.defined}: the two lines coincide"
                    )
            if step.hint is not None and step.kind != "free_point":
                raise ConstructionError(
                    f"coordinate hint only makes sense on free points ({step.defined})"
                )
            defined.add(step.defined)
        for g in self.goals:
            for p in g.points:
                if p not in defined:
                    raise ConstructionError(f"goal {g} uses undefined point {p!r}")

    def points(self) -> Tuple[str, ...]:
        return tuple(s.defined for s in self.steps)


def hypothesis_facts(construction: Construction) -> Tuple[Fact, ...]:
    """The facts a construction asserts by fiat, in step order.

    free points contribute nothing; a midpoint contributes ``midp``; a foot
    contributes the perpendicularity and the incidence; a line-line
    intersection contributes two incidences; a point on a line contributes
    one.
    """
    out: list[Fact] = []
    for step in construction.steps:
        d = step.defined
        if step.kind == "midpoint":
            a, b = step.args
            out.append(canonical_fact("midp", (d, a, b)))
        elif step.kind == "foot":
            a, b, c = step.args
            out.append(canonical_fact("perp", (a, d, b, c)))
            out.append(canonical_fact("coll", (d, b, c)))
        elif step.kind == "intersect_ll":
            a, b, c, d2 = step.args
            out.append(canonical_fact("coll", (d, a, b)))
            out.append(canonical_fact("coll", (d, c, d2)))
        elif step.kind == "point_on_line":
            a, b = step.args
            out.append(canonical_fact("coll", (d, a, b)))
    # deduplicate while keeping first-occurrence order
    seen: set[Fact] = set()
    uniq = []
    for f in out:
        if f not in seen:
            seen.add(f)
            uniq.append(f)
    return tuple(uniq)
