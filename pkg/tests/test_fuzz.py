"""Parser robustness: random and mutated bytes must fail cleanly or parse.

Every text-facing parser promises to raise only its line-numbered error
class, whatever the input.  A traceback escaping from any of them is a bug.
"""
import random

import pytest

from gddx import data
from gddx.errors import CatalogError, ParseError, RuleError
from gddx.gcs import parse_gcs
from gddx.ggb import import_ggb_subset
from gddx.i18n import load_catalog
from gddx.rules import load_rules

from .test_ggb import GGB_DOC

N_PER_PARSER = 10_000


def _mutate(rng: random.Random, seed_text: str) -> bytes:
    buf = bytearray(seed_text.encode("utf-8"))
    for _ in range(rng.randint(1, 8)):
        op = rng.randrange(4)
        if not buf:
            op = 3
        if op == 0:  # flip a byte
            buf[rng.randrange(len(buf))] = rng.randrange(256)
        elif op == 1:  # delete a slice
            i = rng.randrange(len(buf))
            del buf[i : i + rng.randint(1, 20)]
        elif op == 2:  # duplicate a slice
            i = rng.randrange(len(buf))
            buf[i:i] = buf[i : i + rng.randint(1, 20)]
        else:  # insert noise
            i = rng.randrange(len(buf) + 1)
            buf[i:i] = bytes(rng.randrange(256) for _ in range(rng.randint(1, 12)))
    return bytes(buf)


def _inputs(rng: random.Random, corpus, n):
    for i in range(n):
        kind = i % 3
        if kind == 0:
            yield bytes(rng.randrange(256) for _ in range(rng.randrange(400)))
        elif kind == 1:
            alphabet = "abAB01 ,.()\"'\n\t<>/=#"
            yield "".join(rng.choice(alphabet) for _ in range(rng.randrange(300)))
        else:
            yield _mutate(rng, rng.choice(corpus))


CASES = [
    (
        parse_gcs,
        ParseError,
        [data.fixture_text(n) for n in ("ninepoint", "midline", "rt_median")],
    ),
    (import_ggb_subset, ParseError, [GGB_DOC]),
    (load_rules, RuleError, [data.baseline_rules_text()]),
    (
        lambda src: load_catalog(src, language="xx"),
        CatalogError,
        [data.catalog_text("en"), data.catalog_text("de")],
    ),
]


@pytest.mark.parametrize(
    "parse,error,corpus", CASES, ids=["gcs", "ggb", "rules", "catalog"]
)
def test_random_inputs_never_crash(parse, error, corpus):
    rng = random.Random(f"fuzz:{error.__name__}:{parse}")
    survived = 0
    for raw in _inputs(rng, corpus, N_PER_PARSER):
        try:
            parse(raw)
            survived += 1
        except error as exc:
            assert isinstance(exc, ParseError)
            assert exc.line >= 1
            str(exc)  # rendering a diagnostic must not throw either
    # mutations are small, so a fair share of inputs should still parse
    assert survived > 0


def test_error_lines_point_into_the_input():
    rng = random.Random(20260814)
    for raw in _inputs(rng, [data.fixture_text("ninepoint")], 2_000):
        try:
            parse_gcs(raw)
        except ParseError as exc:
            text = raw.decode("utf-8", "replace") if isinstance(raw, bytes) else raw
            assert exc.line <= max(1, len(text.splitlines()))
