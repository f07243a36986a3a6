"""Forward-chaining saturation with diagram filtering.

``saturate`` matches the rule base against the fact database round by round
(semi-naive: at least one antecedent of every new instantiation must come
from the previous round's delta) until a fixed point, a limit, or an
optional target fact.  Every candidate consequent is admitted only if it
holds numerically on the witness diagram.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple, Union

from .diagram import Diagram, holds_numerically, realize
from .errors import FactError, LimitError
from .factdb import HYPOTHESIS, FactDb, Justification
from .model import Construction, Fact, Goal, canonical_fact, fact_images, hypothesis_facts
from .proofgraph import ProofDag, extract
from .rules import Atom, Rule, RuleBase


@dataclass(frozen=True)
class SaturationLimits:
    max_facts: int = 100000
    max_rounds: int = 64
    max_seconds: float = 10.0

    def __post_init__(self):
        if self.max_facts <= 0 or self.max_rounds <= 0 or self.max_seconds <= 0:
            raise ValueError("saturation limits must be positive")


@dataclass(frozen=True)
class NotProved:
    """Outcome of ``prove`` when the goal was not derived.

    ``numerically_true`` distinguishes a goal that is false on the witness
    diagram from one that is true but out of the rule base's reach.
    """

    goal: Fact
    facts_count: int
    numerically_true: bool


@lru_cache(maxsize=1 << 16)
def _images(pred: str, points: Tuple[str, ...]) -> Tuple[Tuple[str, ...], ...]:
    return tuple(fact_images(pred, points))


def _match_atom(atom: Atom, fact: Fact, binding: Dict[str, str]) -> List[Dict[str, str]]:
    """All extensions of *binding* unifying *atom* with any image of *fact*."""
    out: List[Dict[str, str]] = []
    seen: Set[Tuple[Tuple[str, str], ...]] = set()
    for img in _images(fact.pred, fact.points):
        b = dict(binding)
        ok = True
        for var, val in zip(atom.vars, img):
            cur = b.get(var)
            if cur is None:
                b[var] = val
            elif cur != val:
                ok = False
                break
        if ok:
            key = tuple(sorted(b.items()))
            if key not in seen:
                seen.add(key)
                out.append(b)
    return out


def _rule_instances(
    rule: Rule,
    delta: Dict[str, List[Fact]],
    old: Dict[str, List[Fact]],
    full: Dict[str, List[Fact]],
) -> Iterable[Tuple[Fact, Tuple[Fact, ...]]]:
    """Yield (consequent, antecedent facts) with ≥1 antecedent in the delta."""
    n = len(rule.antecedents)
    for dpos in range(n):
        datom = rule.antecedents[dpos]
        for dfact in delta.get(datom.pred, ()):
            for b0 in _match_atom(datom, dfact, {}):
                stack = [(0, b0, [])]
                while stack:
                    pos, binding, used = stack.pop()
                    if pos == n:
                        ants = list(used)
                        ants.insert(dpos, dfact)
                        if any(binding[v] == binding[w] for v, w in rule.distinct):
                            continue
                        pts = tuple(binding[v] for v in rule.consequent.vars)
                        yield canonical_fact(rule.consequent.pred, pts), tuple(ants)
                        continue
                    if pos == dpos:
                        stack.append((pos + 1, binding, used))
                        continue
                    atom = rule.antecedents[pos]
                    pool = old if pos < dpos else full
                    for fact in pool.get(atom.pred, ()):
                        for b in _match_atom(atom, fact, binding):
                            stack.append((pos + 1, b, used + [fact]))


def _by_pred(facts: Iterable[Fact]) -> Dict[str, List[Fact]]:
    out: Dict[str, List[Fact]] = {}
    for f in sorted(facts, key=lambda f: f.key):
        out.setdefault(f.pred, []).append(f)
    return out


def saturate(
    hyps: Sequence[Fact],
    rb: RuleBase,
    d: Diagram,
    lim: SaturationLimits = SaturationLimits(),
    until: Optional[Fact] = None,
) -> FactDb:
    """Saturate to a fixed point (or to *until* becoming derivable).

    Returns the fact database; ``db.rounds`` counts completed match rounds
    and ``db.fixpoint`` records whether a full round added nothing.  Raises
    :class:`LimitError` when a resource limit trips first.
    """
    start = time.monotonic()
    db = FactDb(check=lambda f: holds_numerically(f, d))
    for h in hyps:
        db.assert_fact(h, HYPOTHESIS)
    db.rounds = 0
    db.fixpoint = False

    known = db.enumerated()
    delta_set = set(known)
    while not (until is not None and db.derivable(until)):
        if not delta_set:
            db.fixpoint = True
            break
        if db.rounds >= lim.max_rounds:
            raise LimitError("round limit exceeded", kind="rounds", partial=db)
        delta = _by_pred(delta_set)
        old = _by_pred(known - delta_set)
        full = _by_pred(known)
        for rule in rb.matchable:
            for consequent, ants in _rule_instances(rule, delta, old, full):
                db.assert_fact(consequent, rule.rule_id, ants)
            if time.monotonic() - start > lim.max_seconds:
                raise LimitError("time budget exceeded", kind="time", partial=db)
        db.rounds += 1
        now = db.enumerated()
        if len(now) > lim.max_facts:
            raise LimitError("fact limit exceeded", kind="facts", partial=db)
        delta_set = now - known
        known = now
    return db


def explain(db: FactDb, f: Fact) -> List[Justification]:
    """Justification steps establishing *f*: its antecedents' records plus
    (for facts read off a merged structure) one synthesized closure step."""
    if f in db.facts:
        return [db.just[f]]
    j = db.explain(f, db.clock + 1)
    if j is None:
        raise FactError(f"fact not derived: {f}")
    return [db.just[a] for a in j.antecedents] + [j]


def prove(
    c: Construction,
    g: Goal,
    rb: RuleBase,
    seed: int = 0,
    lim: SaturationLimits = SaturationLimits(),
) -> Union[ProofDag, NotProved]:
    """Realize a diagram, saturate, and extract the proof of *g*.

    Raises :class:`DegenerateError` when no witness diagram exists and
    :class:`LimitError` when saturation trips a resource limit.
    """
    defined = c.points()
    for p in g.fact.points:
        if p not in defined:
            raise FactError(f"goal uses undefined point {p!r}")
    d = realize(c, seed)
    db = saturate(hypothesis_facts(c), rb, d, lim, until=g.fact)
    if db.derivable(g.fact):
        return extract(db, g.fact, rb)
    return NotProved(
        goal=g.fact,
        facts_count=len(db.facts),
        numerically_true=holds_numerically(g.fact, d),
    )
