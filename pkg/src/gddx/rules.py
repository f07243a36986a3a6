"""Deduction rules, loaded from a plain-text rule file.

A rule file is a sequence of blocks::

    rule midp_coll
    given midp(m, a, b)
    conclude coll(m, a, b)
    phrase midpoints are collinear with their endpoints

Pattern variables are lowercase identifiers; each rule has exactly one
``given`` line (antecedents separated by commas at the top level), one
``conclude`` line and one ``phrase`` line, plus optional ``distinct v w``
lines.  The ``phrase`` key doubles as the English text of the rule in the
message catalog.

Rules whose ids are in :data:`STRUCTURAL_IDS` describe closure behaviour that
the fact store implements natively (transitivity of equivalences, merging of
circles, substitution along parallels).  They are kept in the file so that
every reason id appearing in a proof has a phrase, but the matcher skips
them.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .errors import RuleError
from .model import ARITY, PREDICATES

_VAR_RE = re.compile(r"^[a-z][a-z0-9_]*$")
_ATOM_RE = re.compile(r"^([a-z_]+)\s*\(([^()]*)\)$")

#: Reason ids implemented by the fact store rather than the pattern matcher.
STRUCTURAL_IDS = frozenset(
    {
        "coll_transitivity",
        "para_transitivity",
        "cong_transitivity",
        "eqangle_transitivity",
        "circle_merge",
        "corresponding_angles",
        "perp_substitution",
        "perp_perp_para",
    }
)


@dataclass(frozen=True)
class Atom:
    """A predicate applied to pattern variables."""

    pred: str
    vars: Tuple[str, ...]

    def __str__(self) -> str:
        return f"{self.pred}({','.join(self.vars)})"


@dataclass(frozen=True)
class Rule:
    rule_id: str
    antecedents: Tuple[Atom, ...]
    consequent: Atom
    phrase: str
    distinct: Tuple[Tuple[str, str], ...] = ()

    @property
    def structural(self) -> bool:
        return self.rule_id in STRUCTURAL_IDS


@dataclass
class RuleBase:
    rules: List[Rule] = field(default_factory=list)
    by_id: Dict[str, Rule] = field(default_factory=dict)
    name: str = "rules"
    version: str = "1"

    @property
    def matchable(self) -> List[Rule]:
        return [r for r in self.rules if not r.structural]

    def phrase(self, rule_id: str) -> str:
        r = self.by_id.get(rule_id)
        return r.phrase if r is not None else rule_id


def _parse_atom(text: str, line: int) -> Atom:
    m = _ATOM_RE.match(text.strip())
    if m is None:
        raise RuleError(f"malformed atom {text.strip()!r}", line=line)
    pred, inner = m.group(1), m.group(2)
    if pred not in PREDICATES:
        raise RuleError(f"unknown predicate {pred!r}", line=line, token=pred)
    vars_ = tuple(v.strip() for v in inner.split(","))
    if any(not _VAR_RE.match(v) for v in vars_):
        raise RuleError(f"bad pattern variable in {text.strip()!r}", line=line)
    if len(vars_) != ARITY[pred]:
        raise RuleError(
            f"{pred} takes {ARITY[pred]} points, got {len(vars_)}", line=line, token=pred
        )
    return Atom(pred, vars_)


def _split_atoms(text: str, line: int) -> List[Atom]:
    """Split ``a(x,y), b(z,w)`` on commas that sit outside parentheses."""
    parts: List[str] = []
    depth = 0
    cur: List[str] = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise RuleError("unbalanced parentheses", line=line)
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise RuleError("unbalanced parentheses", line=line)
    parts.append("".join(cur))
    if any(not p.strip() for p in parts):
        raise RuleError("empty atom in list", line=line)
    return [_parse_atom(p, line) for p in parts]


def _decode(data) -> str:
    if isinstance(data, bytes):
        return data.decode("utf-8", errors="replace")
    return data


def load_rules(source) -> RuleBase:
    """Parse a rule file from ``str`` or ``bytes``.

    Raises :class:`RuleError` with a 1-based line number on any defect:
    unknown directives, missing or duplicated parts, unknown predicates,
    wrong arities, unbound consequent variables, duplicate rule ids.
    """
    text = _decode(source).lstrip("﻿")
    base = RuleBase()

    cur_id: str | None = None
    cur_line = 0
    givens: List[Atom] | None = None
    conc: Atom | None = None
    phrase: str | None = None
    distinct: List[Tuple[str, str]] = []

    def flush(line: int) -> None:
        nonlocal cur_id, givens, conc, phrase, distinct
        if cur_id is None:
            return
        if givens is None:
            raise RuleError(f"rule {cur_id!r} has no given line", line=cur_line)
        if conc is None:
            raise RuleError(f"rule {cur_id!r} has no conclude line", line=cur_line)
        if phrase is None:
            raise RuleError(f"rule {cur_id!r} has no phrase line", line=cur_line)
        bound = {v for a in givens for v in a.vars}
        free = [v for v in conc.vars if v not in bound]
        if free:
            raise RuleError(
                f"rule {cur_id!r} concludes with unbound variables {free}", line=cur_line
            )
        for v, w in distinct:
            if v not in bound or w not in bound:
                raise RuleError(
                    f"rule {cur_id!r} has a distinct constraint on unbound variables",
                    line=cur_line,
                )
        if cur_id in base.by_id:
            raise RuleError(f"duplicate rule id {cur_id!r}", line=cur_line, token=cur_id)
        rule = Rule(cur_id, tuple(givens), conc, phrase, tuple(distinct))
        base.rules.append(rule)
        base.by_id[cur_id] = rule
        cur_id, givens, conc, phrase, distinct = None, None, None, None, []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        word, _, rest = line.partition(" ")
        rest = rest.strip()
        if word == "rule":
            flush(lineno)
            if not _VAR_RE.match(rest):
                raise RuleError(f"bad rule id {rest!r}", line=lineno, token=rest)
            cur_id, cur_line = rest, lineno
        elif word == "given":
            if cur_id is None:
                raise RuleError("given outside a rule block", line=lineno)
            if givens is not None:
                raise RuleError(f"rule {cur_id!r} has two given lines", line=lineno)
            givens = _split_atoms(rest, lineno)
        elif word == "conclude":
            if cur_id is None:
                raise RuleError("conclude outside a rule block", line=lineno)
            if conc is not None:
                raise RuleError(f"rule {cur_id!r} has two conclude lines", line=lineno)
            conc = _parse_atom(rest, lineno)
        elif word == "phrase":
            if cur_id is None:
                raise RuleError("phrase outside a rule block", line=lineno)
            if phrase is not None:
                raise RuleError(f"rule {cur_id!r} has two phrase lines", line=lineno)
            if not rest:
                raise RuleError("empty phrase", line=lineno)
            phrase = rest
        elif word == "distinct":
            if cur_id is None:
                raise RuleError("distinct outside a rule block", line=lineno)
            names = rest.split()
            if len(names) != 2 or not all(_VAR_RE.match(n) for n in names):
                raise RuleError("distinct takes two variables", line=lineno)
            distinct.append((names[0], names[1]))
        elif word in ("name", "version") and cur_id is None:
            if not rest:
                raise RuleError(f"empty {word}", line=lineno)
            setattr(base, word, rest)
        else:
            raise RuleError(f"unknown directive {word!r}", line=lineno, token=word)
    flush(len(text.splitlines()) + 1)
    if not base.rules:
        raise RuleError("rule file defines no rules", line=1)
    return base
