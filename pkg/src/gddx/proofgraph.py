"""Proof DAG extraction and rendering (flat protocol, tree, DOT).

``extract`` walks justifications backwards from the goal, expanding virtual
facts through the fact store's bounded explanations, and numbers the
resulting nodes topologically (leaves smallest).  Rendering duplicates
shared subtrees in tree mode but keeps the original indices so reuse stays
visible; DOT output shows each shared lemma as one node with several
outgoing edges.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Set, Tuple

from .errors import ProofExtractionError
from .factdb import HYPOTHESIS, FactDb, Justification
from .model import Fact
from .rules import RuleBase

Translate = Callable[[str], str]
HYP_PHRASE = "by HYP"


@dataclass(frozen=True)
class ProofNode:
    index: int
    fact: Fact
    reason: str  # phrase key of the rule, or "hypothesis"
    antecedents: Tuple[int, ...]

    @property
    def is_hypothesis(self) -> bool:
        return self.reason == HYPOTHESIS


@dataclass(frozen=True)
class ProofDag:
    nodes: Tuple[ProofNode, ...]  # sorted by index, 1-based and dense
    root: int

    def __post_init__(self):
        for i, n in enumerate(self.nodes, start=1):
            if n.index != i:
                raise ProofExtractionError("node indices must be dense and ordered")
            if any(a >= n.index for a in n.antecedents):
                raise ProofExtractionError("antecedent indices must be smaller")

    def node(self, index: int) -> ProofNode:
        return self.nodes[index - 1]

    @property
    def root_node(self) -> ProofNode:
        return self.node(self.root)

    def facts(self) -> Set[Fact]:
        return {n.fact for n in self.nodes}


def extract(db: FactDb, root_fact: Fact, rb: Optional[RuleBase] = None) -> ProofDag:
    """Build the pruned proof DAG of *root_fact* from the fact store.

    Atomic facts use their stored justification; virtual facts get a
    synthesized explanation bounded by the clock position of whichever fact
    consumed them, so the result is acyclic by construction.  Exactly the
    ancestors of the goal appear — one node per distinct fact.
    """
    if not db.derivable(root_fact):
        raise ProofExtractionError(f"fact not derived: {root_fact}")
    chosen: Dict[Fact, Justification] = {}
    bound_used: Dict[Fact, int] = {}
    work: List[Tuple[Fact, int]] = [(root_fact, db.clock + 1)]
    while work:
        fact, bound = work.pop()
        if fact in db.facts:
            idx = db.facts[fact]
            if idx >= bound:
                raise ProofExtractionError(f"fact {fact} asserted after its use")
            if fact in chosen:
                continue
            j = db.just[fact]
            chosen[fact] = j
            for a in j.antecedents:
                work.append((a, idx))
        else:
            prev = bound_used.get(fact)
            if prev is not None and prev <= bound:
                continue
            j = db.explain(fact, bound)
            if j is None:
                raise ProofExtractionError(f"no explanation for {fact} before {bound}")
            bound_used[fact] = bound
            chosen[fact] = j
            for a in j.antecedents:
                work.append((a, bound))

    # Kahn numbering: repeatedly emit the ready fact with the smallest key,
    # so hypotheses and other leaves get the smallest indices.
    remaining_deps = {f: set(j.antecedents) for f, j in chosen.items()}
    dependents: Dict[Fact, List[Fact]] = {f: [] for f in chosen}
    for f, j in chosen.items():
        for a in j.antecedents:
            dependents[a].append(f)
    ready = sorted((f for f, deps in remaining_deps.items() if not deps),
                   key=lambda f: f.key, reverse=True)
    number: Dict[Fact, int] = {}
    ordered: List[Fact] = []
    while ready:
        f = ready.pop()
        number[f] = len(ordered) + 1
        ordered.append(f)
        newly = []
        for g in dependents[f]:
            remaining_deps[g].discard(f)
            if not remaining_deps[g]:
                newly.append(g)
        if newly:
            ready.extend(sorted(newly, key=lambda f: f.key, reverse=True))
            ready.sort(key=lambda f: f.key, reverse=True)
    if len(ordered) != len(chosen):
        raise ProofExtractionError("cyclic justification graph")

    nodes = []
    for f in ordered:
        j = chosen[f]
        if j.rule_id == HYPOTHESIS:
            reason = HYPOTHESIS
        elif rb is not None and j.rule_id in rb.by_id:
            reason = rb.by_id[j.rule_id].phrase
        else:
            reason = j.rule_id
        nodes.append(ProofNode(number[f], f, reason, tuple(number[a] for a in j.antecedents)))
    return ProofDag(tuple(nodes), number[root_fact])


def _line(node: ProofNode, tr: Translate) -> str:
    if node.is_hypothesis:
        reason = tr(HYP_PHRASE)
    else:
        refs = ", ".join(str(i) for i in node.antecedents)
        reason = f"{tr(node.reason)} [{refs}]"
    return f"{node.index}. {node.fact} ({reason})"


def render_tree(dag: ProofDag, tr: Optional[Translate] = None, structure_on: bool = True) -> str:
    """Indented tree from the root, or the flat numbered protocol.

    With structure on, shared nodes are re-expanded in every branch but keep
    their original index; with structure off, each node appears once, in
    topological order.
    """
    tr = tr or (lambda key: key)
    if not structure_on:
        return "\n".join(_line(n, tr) for n in dag.nodes) + "\n"
    out: List[str] = []

    def walk(index: int, depth: int) -> None:
        node = dag.node(index)
        out.append("  " * depth + _line(node, tr))
        for a in node.antecedents:
            walk(a, depth + 1)

    walk(dag.root, 0)
    return "\n".join(out) + "\n"


def _dot_quote(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def export_dot(dag: ProofDag, tr: Optional[Translate] = None) -> str:
    """DOT digraph: one node per fact, edges antecedent -> consequent,
    hypothesis nodes drawn as boxes."""
    tr = tr or (lambda key: key)
    lines = ["digraph proof {"]
    for n in dag.nodes:
        reason = tr(HYP_PHRASE) if n.is_hypothesis else tr(n.reason)
        label = _dot_quote(f"{n.fact}\n{reason}").replace("\n", "\\n")
        shape = ", shape=box" if n.is_hypothesis else ""
        lines.append(f'  n{n.index} [label="{label}"{shape}];')
    for n in dag.nodes:
        for a in n.antecedents:
            lines.append(f"  n{a} -> n{n.index};")
    lines.append("}")
    return "\n".join(lines) + "\n"
