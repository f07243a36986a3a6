"""Numeric realization, the diagram filter, and property detection."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gddx.diagram import Diagram, detect_properties, holds_numerically, realize, residual
from gddx.errors import DegenerateError
from gddx.gcs import parse_gcs
from gddx.model import ARITY, canonical_fact, hypothesis_facts

from . import oracles
from .strategies import constructions

# The nine-point configuration on a pinned triangle, so every coordinate is
# known in closed form: A=(0,0), B=(4,0), C=(1,3).
PINNED_NINEPOINT = """\
point A 0 0
point B 4 0
point C 1 3
midpoint E B C
midpoint F C A
midpoint G A B
foot D A B C
"""

Q = Fraction
EXACT = {
    "A": (Q(0), Q(0)),
    "B": (Q(4), Q(0)),
    "C": (Q(1), Q(3)),
}
EXACT["E"] = oracles.midpoint(EXACT["B"], EXACT["C"])
EXACT["F"] = oracles.midpoint(EXACT["C"], EXACT["A"])
EXACT["G"] = oracles.midpoint(EXACT["A"], EXACT["B"])
EXACT["D"] = oracles.foot(EXACT["A"], EXACT["B"], EXACT["C"])


def test_realize_pins_hints_and_computes_steps():
    d = realize(parse_gcs(PINNED_NINEPOINT), seed=0)
    assert d["A"] == (0.0, 0.0)
    assert d["B"] == (4.0, 0.0)
    assert d["C"] == (1.0, 3.0)
    assert d["E"] == (2.5, 1.5)
    assert d["F"] == (0.5, 1.5)
    assert d["G"] == (2.0, 0.0)
    assert d["D"] == pytest.approx((2.0, 2.0), abs=1e-12)


def test_ninepoint_circle_against_exact_oracle():
    # oracle: the four derived points lie on one circle, centred at (3/2, 1)
    assert EXACT["D"] == (Q(2), Q(2))
    center, r2 = oracles.circumcircle(EXACT["D"], EXACT["E"], EXACT["F"])
    assert center == (Q(3, 2), Q(1))
    assert r2 == Q(5, 4)
    assert oracles.concyclic(EXACT["D"], EXACT["E"], EXACT["F"], EXACT["G"])

    d = realize(parse_gcs(PINNED_NINEPOINT), seed=0)
    goal = canonical_fact("cyclic", ("D", "E", "F", "G"))
    assert residual(goal, d) < 1e-9
    assert holds_numerically(goal, d)


def test_hypotheses_hold_on_every_witness():
    from gddx import data

    for name in data.fixture_names():
        c = parse_gcs(data.fixture_text(name))
        for seed in range(5):
            d = realize(c, seed)
            for f in hypothesis_facts(c):
                assert holds_numerically(f, d), (name, seed, f)


def test_realize_is_deterministic(midline):
    d1 = realize(midline, seed=7)
    d2 = realize(midline, seed=7)
    assert d1.coords == d2.coords
    d3 = realize(midline, seed=8)
    assert d3.coords != d1.coords


def test_degenerate_intersection_of_parallels():
    src = """\
point A 0 0
point B 1 0
point C 0 1
point D 1 1
intersect P A B C D
"""
    with pytest.raises(DegenerateError):
        realize(parse_gcs(src), seed=3)


def test_filter_accepts_unit_circle_rejects_offset():
    on_circle = Diagram({"A": (1.0, 0.0), "B": (0.0, 1.0), "C": (-1.0, 0.0), "D": (0.0, -1.0)}, 0)
    assert holds_numerically(canonical_fact("cyclic", ("A", "B", "C", "D")), on_circle)
    nudged = Diagram({**on_circle.coords, "D": (0.01, -1.0)}, 0)
    assert not holds_numerically(canonical_fact("cyclic", ("A", "B", "C", "D")), nudged)


def test_filter_rejects_near_congruence():
    d = Diagram({"A": (0.0, 0.0), "B": (1.0, 0.0), "C": (1.001, 0.0)}, 0)
    assert not holds_numerically(canonical_fact("cong", ("A", "B", "A", "C")), d)
    assert holds_numerically(canonical_fact("cong", ("A", "B", "B", "A")), d)


@pytest.mark.parametrize("pred,pts", [
    ("coll", ("B", "C", "D")),
    ("para", ("E", "F", "A", "B")),
    ("perp", ("A", "D", "B", "C")),
    ("cong", ("A", "G", "G", "B")),
    ("midp", ("E", "B", "C")),
    ("cyclic", ("D", "E", "F", "G")),
    ("eqangle", ("A", "B", "A", "C", "A", "B", "A", "C")),
])
def test_residual_invariant_under_scaling_and_translation(pred, pts):
    base = realize(parse_gcs(PINNED_NINEPOINT), seed=0)
    moved = Diagram(
        {n: (4.0 * x + 17.0, 4.0 * y - 5.0) for n, (x, y) in base.coords.items()}, 0
    )
    f = canonical_fact(pred, pts)
    assert residual(f, moved) == pytest.approx(residual(f, base), rel=1e-9, abs=1e-12)


small_coord = st.integers(min_value=-8, max_value=8)
lattice_point = st.tuples(small_coord, small_coord)


@given(
    pred=st.sampled_from(["coll", "para", "perp", "cong", "midp", "cyclic"]),
    raw=st.data(),
)
def test_residual_zero_agrees_with_exact_oracle(pred, raw):
    n = ARITY[pred]
    pts = raw.draw(st.lists(lattice_point, min_size=n, max_size=n))
    if pred in ("para", "perp"):
        # zero-length direction segments are degenerate, not parallel
        if pts[0] == pts[1] or pts[2] == pts[3]:
            return
    names = [f"P{i}" for i in range(n)]
    coords = {nm: (float(x), float(y)) for nm, (x, y) in zip(names, pts)}
    exact = {nm: (Q(x), Q(y)) for nm, (x, y) in zip(names, pts)}
    d = Diagram(coords, 0)
    f = canonical_fact(pred, names)
    # lattice coordinates keep the float arithmetic exact, so zero is exact
    oracle_zero = oracles.fact_residual_exact(pred, exact, f.points) == 0
    assert (residual(f, d) == 0.0) == oracle_zero


def test_detect_finds_the_ninepoint_circle(ninepoint):
    d = realize(ninepoint, seed=0)
    found = detect_properties(d, ninepoint)
    assert canonical_fact("cyclic", ("D", "E", "F", "G")) in found


def test_detect_excludes_hypotheses_but_keeps_consequences(midline):
    d = realize(midline, seed=0)
    found = detect_properties(d, midline)
    assert canonical_fact("midp", ("E", "B", "C")) not in found
    assert canonical_fact("cong", ("B", "E", "E", "C")) in found
    assert canonical_fact("para", ("E", "F", "A", "B")) in found


def test_detect_empty_for_a_generic_triangle():
    c = parse_gcs("point A\npoint B\npoint C\n")
    d = realize(c, seed=0)
    assert detect_properties(d, c) == []


def test_detect_is_deterministic(ninepoint):
    d = realize(ninepoint, seed=1)
    assert detect_properties(d, ninepoint) == detect_properties(d, ninepoint)


@settings(max_examples=25, deadline=None)
@given(src=constructions())
def test_random_witnesses_satisfy_their_hypotheses(src):
    c = parse_gcs(src)
    try:
        d = realize(c, seed=0)
    except DegenerateError:
        return
    for f in hypothesis_facts(c):
        assert holds_numerically(f, d), f
