"""Rule file parsing and the bundled baseline rule set."""
import pytest

from gddx import data
from gddx.errors import RuleError
from gddx.rules import Atom, STRUCTURAL_IDS, load_rules

SMALL = """\
name demo
version 3

# a comment
rule midline
given midp(e, a, c), midp(f, b, c)
conclude para(e, f, a, b)
distinct a b
phrase the midline is parallel to the base
"""


def test_small_file_golden():
    rb = load_rules(SMALL)
    assert rb.name == "demo"
    assert rb.version == "3"
    assert len(rb.rules) == 1
    r = rb.rules[0]
    assert r.rule_id == "midline"
    assert r.antecedents == (Atom("midp", ("e", "a", "c")), Atom("midp", ("f", "b", "c")))
    assert r.consequent == Atom("para", ("e", "f", "a", "b"))
    assert r.distinct == (("a", "b"),)
    assert str(r.antecedents[0]) == "midp(e,a,c)"
    assert not r.structural


def test_bytes_input_supported():
    assert load_rules(SMALL.encode()).rules == load_rules(SMALL).rules


def test_baseline_rulebase():
    rb = data.baseline_rules()
    assert rb.name == "baseline"
    assert len(rb.rules) == 17
    assert STRUCTURAL_IDS <= set(rb.by_id)
    assert {r.rule_id for r in rb.matchable} == {
        "midp_coll",
        "midp_cong",
        "midline",
        "median_hypotenuse",
        "perp_bisector",
        "isosceles_angles",
        "isosceles_converse",
        "inscribed_angle",
        "inscribed_converse",
    }
    for r in rb.rules:
        assert r.structural == (r.rule_id in STRUCTURAL_IDS)
        assert r.phrase.strip()


def test_phrase_lookup_falls_back_to_id():
    rb = data.baseline_rules()
    assert rb.phrase("midline") == "the midline is parallel to the base"
    assert rb.phrase("no_such_rule") == "no_such_rule"


@pytest.mark.parametrize(
    "src,line,needle",
    [
        ("rule r\ngiven blah(a, b)\nconclude coll(a, b, b)\nphrase p", 2, "unknown predicate"),
        ("rule r\ngiven coll(a, b)\nconclude coll(a, b, b)\nphrase p", 2, "takes 3 points"),
        ("rule r\ngiven midp(m, a, b)\nconclude coll(m, a, x)\nphrase p", 1, "unbound"),
        (
            "rule r\ngiven midp(m, a, b)\nconclude coll(m, a, b)\nphrase p\n"
            "rule r\ngiven midp(m, a, b)\nconclude coll(m, a, b)\nphrase p",
            5,
            "duplicate rule id",
        ),
        ("rule r\ngiven midp(m, a, b)\nconclude coll(m, a, b)\nphrase p\ndistinct m z", 1, "distinct"),
        ("rule r\ngiven midp(m, a, b)\ngiven midp(n, a, b)\nconclude coll(m, a, b)\nphrase p", 3, "two given"),
        ("given midp(m, a, b)", 1, "outside a rule"),
        ("rule r\ngiven midp(m, a, b)\nconclude coll(m, a, b)\nphrase", 4, "empty phrase"),
        ("rule r\nwhatever foo", 2, "unknown directive"),
        ("rule r\ngiven midp m a b\nconclude coll(m, a, b)\nphrase p", 2, "malformed atom"),
        ("rule r\ngiven midp(M, a, b)\nconclude coll(a, a, b)\nphrase p", 2, "bad pattern variable"),
        ("rule Bad-Id\ngiven midp(m, a, b)\nconclude coll(m, a, b)\nphrase p", 1, "bad rule id"),
        ("rule r\ngiven coll(a, b, c), coll((a, b, d)\nconclude coll(a, b, c)\nphrase p", 2, "unbalanced"),
        ("rule r\ngiven coll(a, b, c), , coll(a, b, d)\nconclude coll(a, b, c)\nphrase p", 2, "empty atom"),
        ("rule r\ngiven midp(m, a, b)\nphrase p", 1, "no conclude"),
        ("rule r\nconclude coll(a, a, a)\nphrase p", 1, "no given"),
        ("# nothing here\n", 1, "defines no rules"),
        ("name \nrule r", 1, "empty name"),
        ("rule r\ndistinct onlyone\nconclude coll(a, a, a)\nphrase p", 2, "two variables"),
    ],
)
def test_defects_are_line_numbered(src, line, needle):
    with pytest.raises(RuleError) as err:
        load_rules(src)
    assert err.value.line == line
    assert needle in str(err.value)
    assert str(err.value).startswith(f"line {line}:")
