"""Shared orchestration for the CLI and the HTTP service.

Both front ends funnel through :func:`run_prove` / :func:`run_detect`, so a
prove request with the same inputs produces byte-identical renderings no
matter which door it came in through.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from . import data
from .diagram import detect_properties, realize
from .engine import NotProved, prove
from .errors import (
    AlgebraError,
    ConstructionError,
    DegenerateError,
    FactError,
    LimitError,
    ParseError,
    ProofExtractionError,
    RuleError,
    UnsupportedGoalError,
)
from .gcs import parse_gcs
from .ggb import import_ggb_subset
from .i18n import CatalogChain
from .model import Construction, Fact, Goal, parse_fact_text
from .proofgraph import ProofDag, export_dot, render_tree
from .rules import RuleBase, load_rules
from .wu import wu_prove

RULES_ENV = "GDDX_RULES"

RENDER_MODES = ("flat", "tree", "dot")
BACKENDS = ("gdd", "wu")

# Shared CLI/service classification: bad input vs. ran-out-of-road.
USAGE_ERRORS = (ParseError, FactError, ConstructionError, UnsupportedGoalError)
RESOURCE_ERRORS = (DegenerateError, LimitError, AlgebraError, ProofExtractionError)


def load_construction(source: str) -> Construction:
    """Parse construction *source*, sniffing GeoGebra XML by its markup."""
    if source.lstrip().startswith("<"):
        return import_ggb_subset(source)
    return parse_gcs(source)


def default_rulebase() -> RuleBase:
    """The bundled rules, unless ``GDDX_RULES`` points at a replacement file."""
    path = os.environ.get(RULES_ENV)
    if not path:
        return data.baseline_rules()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise RuleError(f"cannot read rule file {path!r}: {exc.strerror}") from exc
    return load_rules(text)


def translator(lang: str) -> CatalogChain:
    return data.catalog_chain(lang)


def detect_lines(construction: Construction, seed: int) -> List[str]:
    """Numbered candidate properties, the shared CLI/API enumeration."""
    d = realize(construction, seed)
    facts = detect_properties(d, construction)
    return [f"{i}. {f.pred} {' '.join(f.points)}" for i, f in enumerate(facts, start=1)]


def resolve_goal(construction: Construction, goal_text: Optional[str], seed: int) -> Goal:
    """Turn CLI/service goal input into a Goal.

    ``None`` falls back to the construction's first declared goal;
    ``auto:<i>`` picks the i-th (1-based) detected property.
    """
    if goal_text is None or not goal_text.strip():
        if not construction.goals:
            raise FactError("no goal given and the construction declares none")
        return Goal(construction.goals[0], source="declared_in_script")
    text = goal_text.strip()
    if text.startswith("auto:"):
        try:
            idx = int(text[len("auto:"):])
        except ValueError:
            raise FactError(f"bad auto goal index in {goal_text!r}") from None
        d = realize(construction, seed)
        candidates = detect_properties(d, construction)
        if not 1 <= idx <= len(candidates):
            raise FactError(
                f"auto goal index {idx} out of range (detected {len(candidates)} properties)"
            )
        return Goal(candidates[idx - 1], source="user_selected")
    return Goal(parse_fact_text(text), source="user_selected")


@dataclass
class ProveOutcome:
    status: str  # "proved" | "not_proved"
    rendering: str
    goal: Fact
    dag: Optional[ProofDag] = None
    ndgs: List[str] = field(default_factory=list)
    diagnostics: str = ""

    @property
    def exit_code(self) -> int:
        return 0 if self.status == "proved" else 1


def _render_dag(dag: ProofDag, mode: str, tr, structure: bool) -> str:
    if mode == "dot":
        return export_dot(dag, tr)
    return render_tree(dag, tr, structure_on=(mode == "tree" and structure))


def run_prove(
    construction: Construction,
    goal: Goal,
    *,
    lang: str = "en",
    mode: str = "flat",
    structure: bool = True,
    backend: str = "gdd",
    seed: int = 0,
    rb: Optional[RuleBase] = None,
) -> ProveOutcome:
    """Prove *goal* and render the result; raises domain errors unchanged."""
    if mode not in RENDER_MODES:
        raise FactError(f"unknown render mode {mode!r}")
    if backend not in BACKENDS:
        raise FactError(f"unknown backend {backend!r}")
    if backend == "wu":
        return _run_wu(construction, goal)
    rb = rb if rb is not None else default_rulebase()
    tr = translator(lang)
    result = prove(construction, goal, rb, seed=seed)
    if isinstance(result, NotProved):
        detail = (
            "the goal holds on the witness diagram but was not derived"
            if result.numerically_true
            else "the goal fails on the witness diagram"
        )
        return ProveOutcome(
            status="not_proved",
            rendering=f"not proved: {goal.fact} ({detail})\n",
            goal=goal.fact,
            diagnostics=f"{detail}; database holds {result.facts_count} facts",
        )
    rendering = _render_dag(result, mode, tr.lookup, structure)
    return ProveOutcome(status="proved", rendering=rendering, goal=goal.fact, dag=result)


def _run_wu(construction: Construction, goal: Goal) -> ProveOutcome:
    result = wu_prove(construction, goal)
    ndgs = [str(n) for n in result.ndgs]
    if result.proved:
        lines = [f"proved: {goal.fact} (algebraic reduction, remainder 0)"]
        lines += [f"ndg: {n}" for n in ndgs]
        return ProveOutcome(
            status="proved",
            rendering="\n".join(lines) + "\n",
            goal=goal.fact,
            ndgs=ndgs,
        )
    return ProveOutcome(
        status="not_proved",
        rendering=f"not proved: {goal.fact} (nonzero remainder after reduction)\n",
        goal=goal.fact,
        ndgs=ndgs,
        diagnostics=f"final remainder: {result.final_remainder}",
    )
