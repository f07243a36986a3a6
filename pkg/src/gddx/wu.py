"""Algebraic proving via Ritt-Wu characteristic sets.

A construction is translated into coordinates (first free point pinned at
the origin, second on the x-axis), one polynomial equation per dependent
coordinate.  ``triangularize`` turns the hypothesis system into a
triangular set; the conclusion is then successively pseudo-divided from the
top variable down, and the theorem is proved (under the non-degeneracy
conditions ``initial != 0``) exactly when the final remainder vanishes.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .algebra import Poly, prem
from .errors import AlgebraError, LimitError, UnsupportedGoalError
from .model import Construction, Fact, Goal

DEFAULT_BUDGET = 200000

Coord = Tuple[Poly, Poly]


@dataclass(frozen=True)
class TriangularSet:
    polys: Tuple[Poly, ...]
    initials: Tuple[Poly, ...]
    order: Tuple[str, ...]  # dependent variables, lowest first

    def __post_init__(self):
        ranks = [_order_index(p, self.order) for p in self.polys]
        if any(r is None for r in ranks):
            raise AlgebraError("triangular set contains a constant polynomial")
        if any(b <= a for a, b in zip(ranks, ranks[1:])):
            raise AlgebraError("main variables must strictly increase")


@dataclass(frozen=True)
class NdgCondition:
    """One ``polynomial != 0`` side condition, with a geometric reading when
    the polynomial matches a recognizable pattern."""

    poly: Poly
    reading: Optional[str] = None

    @property
    def always_satisfied(self) -> bool:
        return self.poly.is_constant()

    def __str__(self) -> str:
        body = f"{self.poly} != 0"
        return f"{self.reading} [{body}]" if self.reading else body


@dataclass(frozen=True)
class WuResult:
    proved: bool
    ndgs: Tuple[NdgCondition, ...]
    remainders: Tuple[Poly, ...]
    triangular: TriangularSet

    @property
    def final_remainder(self) -> Poly:
        for r in self.remainders:
            if not r.is_zero():
                return r
        return Poly.zero()


def _assign_coords(c: Construction) -> Tuple[Dict[str, Coord], List[str], List[Poly]]:
    """Coordinates, dependent-variable order, and hypothesis polynomials."""
    coords: Dict[str, Coord] = {}
    order: List[str] = []
    hyps: List[Poly] = []
    free_seen = 0
    params = 0

    def fresh_param() -> Poly:
        nonlocal params
        params += 1
        return Poly.var(f"u{params}")

    for step in c.steps:
        name = step.defined
        if step.kind == "free_point":
            if free_seen == 0:
                coords[name] = (Poly.const(0), Poly.const(0))
            elif free_seen == 1:
                coords[name] = (fresh_param(), Poly.const(0))
            else:
                coords[name] = (fresh_param(), fresh_param())
            free_seen += 1
            continue
        if step.kind == "point_on_line":
            a, b = (coords[q] for q in step.args)
            xv = fresh_param()
            yv = Poly.var(f"y_{name}")
            order.append(f"y_{name}")
            coords[name] = (xv, yv)
            hyps.append(_cross(_sub(coords[name], a), _sub(b, a)))
            continue
        xv, yv = Poly.var(f"x_{name}"), Poly.var(f"y_{name}")
        order.extend([f"x_{name}", f"y_{name}"])
        coords[name] = (xv, yv)
        if step.kind == "midpoint":
            a, b = (coords[q] for q in step.args)
            hyps.append(xv + xv - a[0] - b[0])
            hyps.append(yv + yv - a[1] - b[1])
        elif step.kind == "foot":
            a, b, cc = (coords[q] for q in step.args)
            hyps.append(_dot(_sub(coords[name], a), _sub(cc, b)))
            hyps.append(_cross(_sub(coords[name], b), _sub(cc, b)))
        elif step.kind == "intersect_ll":
            a, b, cc, d = (coords[q] for q in step.args)
            hyps.append(_cross(_sub(coords[name], a), _sub(b, a)))
            hyps.append(_cross(_sub(coords[name], cc), _sub(d, cc)))
        else:  # pragma: no cover
            raise AlgebraError(f"unknown step kind {step.kind!r}")
    return coords, order, hyps


def _sub(p: Coord, q: Coord) -> Coord:
    return (p[0] - q[0], p[1] - q[1])


def _dot(u: Coord, v: Coord) -> Poly:
    return u[0] * v[0] + u[1] * v[1]


def _cross(u: Coord, v: Coord) -> Poly:
    return u[0] * v[1] - u[1] * v[0]


def _dist2(p: Coord, q: Coord) -> Poly:
    d = _sub(p, q)
    return d[0] * d[0] + d[1] * d[1]


def conclusion_polys(fact: Fact, coords: Dict[str, Coord]) -> List[Poly]:
    p = [coords[name] for name in fact.points]
    if fact.pred == "coll":
        return [_cross(_sub(p[1], p[0]), _sub(p[2], p[0]))]
    if fact.pred == "para":
        return [_cross(_sub(p[1], p[0]), _sub(p[3], p[2]))]
    if fact.pred == "perp":
        return [_dot(_sub(p[1], p[0]), _sub(p[3], p[2]))]
    if fact.pred == "cong":
        return [_dist2(p[0], p[1]) - _dist2(p[2], p[3])]
    if fact.pred == "midp":
        m, a, b = p
        return [m[0] + m[0] - a[0] - b[0], m[1] + m[1] - a[1] - b[1]]
    if fact.pred == "cyclic":
        rows = [(q[0], q[1], q[0] * q[0] + q[1] * q[1], Poly.const(1)) for q in p]
        det = Poly.zero()
        for perm in permutations(range(4)):
            sign = _parity(perm)
            term = Poly.const(sign)
            for row, col in enumerate(perm):
                term = term * rows[row][col]
            det = det + term
        return [det]
    raise UnsupportedGoalError(
        f"goal predicate {fact.pred!r} is not expressible as a polynomial equation"
    )


def _parity(perm: Sequence[int]) -> int:
    inv = sum(1 for i, j in combinations(range(len(perm)), 2) if perm[i] > perm[j])
    return -1 if inv % 2 else 1


def translate(c: Construction, g: Goal) -> Tuple[List[Poly], List[Poly], List[str]]:
    """Hypothesis polynomials, conclusion polynomial(s), dependent-var order.

    A ``midp`` goal contributes two conclusion polynomials (a conjunction);
    every other supported predicate contributes one.
    """
    coords, order, hyps = _assign_coords(c)
    return hyps, conclusion_polys(g.fact, coords), order


def _order_index(p: Poly, order: Sequence[str]) -> Optional[int]:
    """Index of the main variable of *p* in *order*; None for constants
    (polynomials in free parameters only)."""
    best = None
    pv = p.variables()
    for i, v in enumerate(order):
        if v in pv:
            best = i
    return best


def _degree_measure(group: Sequence[Poly], x: str) -> Tuple[int, ...]:
    return tuple(sorted((f.degree(x) for f in group), reverse=True))


def triangularize(
    hyps: Sequence[Poly], order: Sequence[str], budget: int = DEFAULT_BUDGET
) -> TriangularSet:
    """Ritt-Wu elimination into a triangular set with strictly increasing
    main variables.

    Variables are eliminated from the top of *order* down; every polynomial
    containing the current variable has it as main variable, so repeatedly
    pseudo-dividing by the group's minimal-degree member shrinks the degree
    multiset (asserted, not assumed) until one polynomial per variable is
    left.
    """
    remaining = [p for p in hyps if not p.is_zero()]
    chain: List[Poly] = []
    for x in reversed(order):
        group = [f for f in remaining if f.degree(x) > 0]
        remaining = [f for f in remaining if f.degree(x) == 0]
        while len(group) > 1:
            before = _degree_measure(group, x)
            group.sort(key=lambda f: (f.degree(x), f.key()))
            p, rest = group[0], group[1:]
            group = [p]
            for f in rest:
                r, _q, _k = prem(f, p, x, budget=budget)
                if r.is_zero():
                    continue
                if r.degree(x) > 0:
                    group.append(r)
                elif _order_index(r, order) is not None:
                    remaining.append(r)
                else:
                    raise AlgebraError(
                        f"inconsistent hypotheses: nonzero constraint {r} survives elimination"
                    )
            after = _degree_measure(group, x)
            if not after < before:
                raise AlgebraError("elimination measure failed to decrease")
        if group:
            chain.append(group[0])
    leftovers = [f for f in remaining if not f.is_zero()]
    if leftovers:
        raise AlgebraError(
            f"inconsistent hypotheses: nonzero constraint {leftovers[0]} on free parameters"
        )
    tset_polys = tuple(reversed(chain))
    initials = tuple(
        p.coeff_wrt(order[_order_index(p, order)], p.degree(order[_order_index(p, order)]))
        for p in tset_polys
    )
    return TriangularSet(tset_polys, initials, tuple(order))


def _reading(poly: Poly, coords: Dict[str, Coord]) -> Optional[str]:
    """Best-effort geometric reading of an NDG polynomial."""
    if poly.is_constant():
        return "always satisfied"
    target = poly.normalized().key()
    names = sorted(coords)
    for p, q in combinations(names, 2):
        if _dist2(coords[p], coords[q]).normalized().key() == target:
            return f"points {p} and {q} are distinct"
        diff = coords[p][0] - coords[q][0]
        if not diff.is_zero() and diff.normalized().key() == target:
            return f"line {p}{q} is not vertical"
        diff = coords[p][1] - coords[q][1]
        if not diff.is_zero() and diff.normalized().key() == target:
            return f"line {p}{q} is not horizontal"
    for p, q, r in combinations(names, 3):
        cr = _cross(_sub(coords[q], coords[p]), _sub(coords[r], coords[p]))
        if not cr.is_zero() and cr.normalized().key() == target:
            return f"points {p}, {q} and {r} are not collinear"
    segs = list(combinations(names, 2))
    for (a, b), (c, d) in combinations(segs, 2):
        cr = _cross(_sub(coords[b], coords[a]), _sub(coords[d], coords[c]))
        if not cr.is_zero() and cr.normalized().key() == target:
            return f"lines {a}{b} and {c}{d} are not parallel"
    return None


def wu_prove(c: Construction, g: Goal, budget: int = DEFAULT_BUDGET) -> WuResult:
    """Prove *g* under non-degeneracy conditions by successive pseudo-division."""
    coords, order, hyps = _assign_coords(c)
    conclusions = conclusion_polys(g.fact, coords)
    tset = triangularize(hyps, order, budget=budget)
    remainders: List[Poly] = []
    for conc in conclusions:
        r = conc
        for p in reversed(tset.polys):
            mv = tset.order[_order_index(p, tset.order)]
            if r.degree(mv) > 0:
                r, _q, _k = prem(r, p, mv, budget=budget)
        remainders.append(r)
    seen: Set[Tuple] = set()
    ndgs: List[NdgCondition] = []
    for init in tset.initials:
        key = init.normalized().key()
        if key in seen:
            continue
        seen.add(key)
        ndgs.append(NdgCondition(init, _reading(init, coords)))
    proved = all(r.is_zero() for r in remainders)
    return WuResult(proved, tuple(ndgs), tuple(remainders), tset)
