"""Plain-text construction scripts (.gcs).

One statement per line, ``#`` starts a comment, blank lines are ignored::

    point A            # free point (optionally: point A 0.25 0.75)
    midpoint M A B
    foot D A B C       # D = foot of the perpendicular from A onto BC
    intersect P A B C D
    online P A B
    goal cyclic D E F G

``parse_gcs`` accepts ``str`` or raw ``bytes`` and raises :class:`ParseError`
with a 1-based line number on any malformed input; it never raises anything
else, no matter the bytes thrown at it.
"""
from __future__ import annotations

from typing import List, Union

from .errors import ConstructionError, FactError, ParseError
from .model import (
    ARITY,
    Construction,
    ConstructionStep,
    STEP_KINDS,
    canonical_fact,
    is_label,
)

_KEYWORD_TO_KIND = {
    "point": "free_point",
    "midpoint": "midpoint",
    "foot": "foot",
    "intersect": "intersect_ll",
    "online": "point_on_line",
}

_KIND_TO_KEYWORD = {v: k for k, v in _KEYWORD_TO_KIND.items()}


def _decode(source: Union[str, bytes]) -> str:
    if isinstance(source, bytes):
        return source.decode("utf-8", errors="replace")
    return source


def _float(tok: str, lineno: int) -> float:
    try:
        v = float(tok)
    except ValueError:
        raise ParseError(f"expected a coordinate number, got {tok!r}", lineno, tok)
    if v != v or v in (float("inf"), float("-inf")):
        raise ParseError(f"coordinate {tok!r} is not finite", lineno, tok)
    return v


def parse_gcs(source: Union[str, bytes]) -> Construction:
    text = _decode(source)
    if text.startswith("﻿"):
        text = text[1:]
    steps: List[ConstructionStep] = []
    goals = []
    defined: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        kw = toks[0]
        if kw == "goal":
            if len(toks) < 2:
                raise ParseError("goal needs a predicate", lineno, "goal")
            pred = toks[1]
            if pred not in ARITY:
                raise ParseError(f"unknown predicate {pred!r}", lineno, pred)
            pts = toks[2:]
            if len(pts) != ARITY[pred]:
                raise ParseError(
                    f"goal {pred} expects {ARITY[pred]} points, got {len(pts)}",
                    lineno,
                    pred,
                )
            for p in pts:
                if p not in defined:
                    raise ParseError(f"goal uses undefined point {p!r}", lineno, p)
            try:
                goals.append(canonical_fact(pred, pts))
            except FactError as exc:
                raise ParseError(str(exc), lineno, pred)
            continue
        if kw not in _KEYWORD_TO_KIND:
            raise ParseError(f"unknown keyword {kw!r}", lineno, kw)
        kind = _KEYWORD_TO_KIND[kw]
        arity = STEP_KINDS[kind]
        rest = toks[1:]
        hint = None
        if kind == "free_point" and len(rest) == 3:
            hint = (_float(rest[1], lineno), _float(rest[2], lineno))
            rest = rest[:1]
        if len(rest) != arity + 1:
            raise ParseError(
                f"{kw} expects {arity + 1} point names, got {len(rest)}",
                lineno,
                kw,
            )
        label, args = rest[0], tuple(rest[1:])
        for name in rest:
            if not is_label(name):
                raise ParseError(f"bad point name {name!r}", lineno, name)
        if label in defined:
            raise ParseError(f"duplicate point label {label!r}", lineno, label)
        for a in args:
            if a not in defined:
                raise ParseError(
                    f"{kw} {label} uses undefined point {a!r}", lineno, a
                )
        if kind == "foot" and args[1] == args[2]:
            raise ParseError(
                f"foot {label}: base line needs two distinct points", lineno, label
            )
        if kind == "intersect_ll" and {args[0], args[1]} == {args[2], args[3]}:
            raise ParseError(
                f"intersect {label}: the two lines coincide", lineno, label
            )
        steps.append(ConstructionStep(kind, label, args, hint))
        defined.add(label)
    try:
        return Construction(tuple(steps), tuple(goals))
    except ConstructionError as exc:  # pragma: no cover - parser checks first
        raise ParseError(str(exc), 1)


def serialize_gcs(construction: Construction) -> str:
    """Render a construction back to script text; inverse of :func:`parse_gcs`."""
    lines: List[str] = []
    for step in construction.steps:
        kw = _KIND_TO_KEYWORD[step.kind]
        parts = [kw, step.defined, *step.args]
        if step.hint is not None:
            parts += [repr(step.hint[0]), repr(step.hint[1])]
        lines.append(" ".join(parts))
    for g in construction.goals:
        lines.append("goal " + g.pred + " " + " ".join(g.points))
    return "\n".join(lines) + ("\n" if lines else "")
