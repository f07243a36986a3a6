"""Hypothesis strategies shared across the test modules."""
from __future__ import annotations

import string

from hypothesis import strategies as st

from gddx.model import ARITY, PREDICATES, canonical_fact

point_names = st.sampled_from(list(string.ascii_uppercase[:8]))


@st.composite
def facts(draw, preds=PREDICATES):
    pred = draw(st.sampled_from(list(preds)))
    pts = draw(st.lists(point_names, min_size=ARITY[pred], max_size=ARITY[pred]))
    return canonical_fact(pred, pts)


@st.composite
def raw_fact_args(draw, preds=PREDICATES):
    pred = draw(st.sampled_from(list(preds)))
    pts = draw(
        st.lists(point_names, min_size=ARITY[pred], max_size=ARITY[pred])
    )
    return pred, tuple(pts)


@st.composite
def constructions(draw, max_steps=8):
    """Random well-formed construction step lists (as gcs text)."""
    lines = []
    defined = []
    n_free = draw(st.integers(min_value=2, max_value=4))
    names = [f"P{i}" for i in range(max_steps + 4)]
    for i in range(n_free):
        lines.append(f"point {names[i]}")
        defined.append(names[i])
    n_extra = draw(st.integers(min_value=0, max_value=max_steps - n_free))
    for i in range(n_free, n_free + n_extra):
        name = names[i]
        kind = draw(st.sampled_from(["midpoint", "foot", "online", "intersect"]))
        if kind == "midpoint":
            a, b = draw(st.lists(st.sampled_from(defined), min_size=2, max_size=2))
            lines.append(f"midpoint {name} {a} {b}")
        elif kind == "online":
            a, b = draw(st.lists(st.sampled_from(defined), min_size=2, max_size=2))
            lines.append(f"online {name} {a} {b}")
        elif kind == "foot":
            a = draw(st.sampled_from(defined))
            b, c = draw(
                st.lists(st.sampled_from(defined), min_size=2, max_size=2, unique=True)
            )
            lines.append(f"foot {name} {a} {b} {c}")
        else:
            a, b = draw(
                st.lists(st.sampled_from(defined), min_size=2, max_size=2, unique=True)
            )
            c, d = draw(
                st.lists(st.sampled_from(defined), min_size=2, max_size=2, unique=True)
            )
            if {a, b} == {c, d}:
                continue
            lines.append(f"intersect {name} {a} {b} {c} {d}")
        defined.append(name)
    return "\n".join(lines) + "\n"
