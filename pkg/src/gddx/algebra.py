"""Sparse multivariate polynomials over exact rationals, plus pseudo-division.

A polynomial is a map from monomials to nonzero Fraction coefficients; a
monomial is a sorted tuple of (variable, positive exponent) pairs.  No
floating point enters this module.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Set, Tuple

from .errors import AlgebraError, LimitError

Mono = Tuple[Tuple[str, int], ...]

_ONE: Mono = ()


def _mono_mul(a: Mono, b: Mono) -> Mono:
    exps: Dict[str, int] = dict(a)
    for var, e in b:
        exps[var] = exps.get(var, 0) + e
    return tuple(sorted(exps.items()))


def _mono_deg(m: Mono) -> int:
    return sum(e for _v, e in m)


class Poly:
    """Immutable-by-convention sparse polynomial."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Mono, Fraction]] = None):
        self.terms: Dict[Mono, Fraction] = {}
        if terms:
            for m, c in terms.items():
                if c != 0:
                    self.terms[m] = Fraction(c)

    # -- constructors ---------------------------------------------------
    @staticmethod
    def zero() -> "Poly":
        return Poly()

    @staticmethod
    def const(c) -> "Poly":
        return Poly({_ONE: Fraction(c)})

    @staticmethod
    def var(name: str) -> "Poly":
        return Poly({((name, 1),): Fraction(1)})

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other: "Poly") -> "Poly":
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, Fraction(0)) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        out = Poly()
        out.terms = terms
        return out

    def __neg__(self) -> "Poly":
        out = Poly()
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        terms: Dict[Mono, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                s = terms.get(m, Fraction(0)) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        out = Poly()
        out.terms = terms
        return out

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        out = Poly()
        if c:
            out.terms = {m: co * c for m, co in self.terms.items()}
        return out

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise AlgebraError("negative power")
        out = Poly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(self.key())

    # -- queries ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(m == _ONE for m in self.terms)

    def variables(self) -> Set[str]:
        return {v for m in self.terms for v, _e in m}

    def degree(self, var: str) -> int:
        best = 0
        for m in self.terms:
            for v, e in m:
                if v == var and e > best:
                    best = e
        return best

    def coeff_wrt(self, var: str, k: int) -> "Poly":
        """Coefficient of var**k, as a polynomial in the other variables."""
        terms: Dict[Mono, Fraction] = {}
        for m, c in self.terms.items():
            e = 0
            rest = []
            for v, ve in m:
                if v == var:
                    e = ve
                else:
                    rest.append((v, ve))
            if e == k:
                terms[tuple(rest)] = terms.get(tuple(rest), Fraction(0)) + c
        return Poly(terms)

    def eval(self, point: Dict[str, Fraction]) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            val = c
            for v, e in m:
                val *= point[v] ** e
            total += val
        return total

    def key(self) -> Tuple:
        return tuple(sorted(self.terms.items()))

    def normalized(self) -> "Poly":
        """Scaled so the leading (display-order) coefficient is 1."""
        if not self.terms:
            return self
        lead = min(self.terms, key=_display_key)
        return self.scale(1 / self.terms[lead])

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: List[str] = []
        for m in sorted(self.terms, key=_display_key):
            c = self.terms[m]
            factors = ["*".join(v if e == 1 else f"{v}^{e}" for v, e in m)] if m else []
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = factors[0]
            else:
                body = f"{abs(c)}*{factors[0]}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:  # pragma: no cover
        return f"Poly({self})"


def _display_key(m: Mono):
    return (-_mono_deg(m), m)


def prem(f: Poly, g: Poly, x: str, budget: Optional[int] = None) -> Tuple[Poly, Poly, int]:
    """Pseudo-remainder of f by g in x: init(g)**k * f == q*g + r, deg_x r < deg_x g.

    Returns (r, q, k) with the minimal sufficient k (bounded by
    deg_x(f) - deg_x(g) + 1); raises on a divisor constant in x.
    """
    dg = g.degree(x)
    if dg == 0:
        raise AlgebraError(f"divisor has no {x}: cannot pseudo-divide")
    init = g.coeff_wrt(x, dg)
    r, q, k = f, Poly.zero(), 0
    while not r.is_zero() and r.degree(x) >= dg:
        dr = r.degree(x)
        s = r.coeff_wrt(x, dr) * Poly({((x, dr - dg),) if dr > dg else _ONE: Fraction(1)})
        r = init * r - s * g
        q = init * q + s
        k += 1
        if budget is not None and len(r.terms) + len(q.terms) > budget:
            raise LimitError("monomial budget exceeded in pseudo-division", kind="monomials")
    return r, q, k
