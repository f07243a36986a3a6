"""The fact store: asserted facts plus equivalence structures.

Atomic facts (asserted by rules or hypotheses) are recorded with a
justification and a position on a single monotone event clock.  On top of
them the store maintains merged structures:

* lines (point sets built from ``coll``),
* circles (built from ``cyclic``; merged when they share three points),
* congruence classes of segments (union-find over ``cong``),
* direction classes of segments (union-find over ``para`` and shared lines),
* perpendicularity records between direction classes,
* angle nodes keyed by ordered pairs of direction classes, with their own
  union-find over ``eqangle``.

The structures answer ``derivable`` queries and enumerate the *virtual*
facts they imply (all collinear triples on a line, all segment pairs in a
congruence class, ...).  Every union-find keeps an edge log instead of
relying on ``find`` for explanations: ``explain`` reconstructs a one-step
justification for a virtual fact by walking edges strictly below a clock
bound, which keeps proof extraction acyclic even though the structures
themselves are ever-growing.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .errors import FactError, ProofExtractionError
from .model import Fact, canonical_fact, _seg

HYPOTHESIS = "hypothesis"

Seg = Tuple[str, str]


@dataclass(frozen=True)
class Justification:
    """Why a fact holds: a reason id, the facts used, and the fact produced."""

    rule_id: str
    antecedents: Tuple[Fact, ...]
    fact: Fact


class _UnionFind:
    """Union-find that logs every union edge for later path reconstruction.

    ``find`` uses path compression; explanations never call it and instead
    walk ``edges`` (a forest, since unions of already-equal elements are
    rejected) filtered by edge index.
    """

    def __init__(self):
        self.parent: Dict = {}
        self.edges: Dict[object, List[Tuple[object, int, object]]] = {}

    def add(self, x) -> None:
        if x not in self.parent:
            self.parent[x] = x
            self.edges[x] = []

    def __contains__(self, x) -> bool:
        return x in self.parent

    def find(self, x):
        if x not in self.parent:
            return x
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b, index: int, label_ab, label_ba) -> bool:
        """Merge the classes of *a* and *b*; returns False if already equal."""
        self.add(a)
        self.add(b)
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        self.edges[a].append((b, index, label_ab))
        self.edges[b].append((a, index, label_ba))
        return True

    def path(self, a, b, bound: int) -> Optional[List[Tuple[object, object, int, object]]]:
        """Edge path from *a* to *b* using only edges with index < bound.

        Returns ``[(u, v, index, label-as-seen-from-u), ...]`` or None.
        The edge log is a forest, so the path is unique when it exists.
        """
        if a == b:
            return []
        if a not in self.edges or b not in self.edges:
            return None
        prev: Dict = {a: None}
        queue = [a]
        while queue:
            u = queue.pop(0)
            for (v, idx, label) in self.edges[u]:
                if idx >= bound or v in prev:
                    continue
                prev[v] = (u, idx, label)
                if v == b:
                    out = []
                    node = b
                    while prev[node] is not None:
                        pu, pidx, plabel = prev[node]
                        out.append((pu, node, pidx, plabel))
                        node = pu
                    out.reverse()
                    return out
                queue.append(v)
        return None

    def classes(self) -> List[List]:
        groups: Dict = {}
        for x in self.parent:
            groups.setdefault(self.find(x), []).append(x)
        return [sorted(members) for _, members in sorted(groups.items())]


@dataclass
class _Line:
    lid: int
    points: Set[str]
    log: List[Tuple[int, Fact]]
    anchor: Seg


@dataclass
class _Circle:
    cid: int
    points: Set[str]
    log: List[Tuple[int, Fact]]


@dataclass
class _PerpRec:
    index: int
    fact: Fact
    seg1: Seg
    seg2: Seg


@dataclass
class _AngleNode:
    nid: int
    seg1: Seg
    seg2: Seg


class FactDb:
    """Monotone store of facts and the equivalence structures over them."""

    def __init__(self, check: Optional[Callable[[Fact], bool]] = None):
        self.check = check
        self.clock = 0
        self.facts: Dict[Fact, int] = {}
        self.just: Dict[Fact, Justification] = {}
        self.order: List[Fact] = []
        self.filtered = 0

        self.lines: Dict[int, _Line] = {}
        self.pair2line: Dict[Seg, int] = {}
        self._line_alias: Dict[int, int] = {}
        self._next_line = 0

        self.circles: Dict[int, _Circle] = {}
        self.triple2circle: Dict[Tuple[str, str, str], int] = {}
        self._next_circle = 0

        self.cong = _UnionFind()
        self.dirs = _UnionFind()
        self.perp_records: List[_PerpRec] = []

        self.angle_nodes: List[_AngleNode] = []
        self.sig2node: Dict[Tuple[Seg, Seg], int] = {}
        self.angles = _UnionFind()

        self._dirty = False
        self._draining = False

    # ------------------------------------------------------------------
    # assertion

    def _tick(self) -> int:
        self.clock += 1
        return self.clock

    def assert_fact(self, fact: Fact, rule_id: str, antecedents: Sequence[Fact] = ()) -> bool:
        """Record *fact* if it is genuinely new; returns True when stored.

        Already-derivable facts are dropped.  When a numeric ``check`` was
        supplied, non-hypothesis facts failing it are dropped and counted in
        ``filtered`` (the diagram filter refusing an unsound candidate).
        """
        if fact in self.facts or self.derivable(fact):
            return False
        if self.check is not None and rule_id != HYPOTHESIS and not self.check(fact):
            self.filtered += 1
            return False
        index = self._tick()
        self.facts[fact] = index
        self.just[fact] = Justification(rule_id, tuple(antecedents), fact)
        self.order.append(fact)
        self._integrate(fact, index)
        self._drain()
        return True

    def index_of(self, fact: Fact) -> int:
        return self.facts[fact]

    def justification_of(self, fact: Fact) -> Justification:
        return self.just[fact]

    # ------------------------------------------------------------------
    # structure maintenance

    def _integrate(self, fact: Fact, index: int) -> None:
        p = fact.points
        if fact.pred == "coll":
            self._line_absorb(set(p), index, fact)
        elif fact.pred == "cyclic":
            self._circle_absorb(set(p), index, fact)
        elif fact.pred == "cong":
            s, t = _seg(p[0], p[1]), _seg(p[2], p[3])
            self.cong.union(s, t, self._tick(), fact, fact)
        elif fact.pred == "para":
            s, t = _seg(p[0], p[1]), _seg(p[2], p[3])
            if self.dirs.union(s, t, self._tick(), fact, fact):
                self._dirty = True
        elif fact.pred == "perp":
            s, t = _seg(p[0], p[1]), _seg(p[2], p[3])
            self.dirs.add(s)
            self.dirs.add(t)
            self.perp_records.append(_PerpRec(index, fact, s, t))
            self._dirty = True
        elif fact.pred == "eqangle":
            s1, s2 = _seg(p[0], p[1]), _seg(p[2], p[3])
            t1, t2 = _seg(p[4], p[5]), _seg(p[6], p[7])
            n1, n2 = self._angle_node(s1, s2), self._angle_node(t1, t2)
            idx = self._tick()
            self.angles.union(
                n1, n2, idx,
                ("eq", fact, (s1, s2), (t1, t2)),
                ("eq", fact, (t1, t2), (s1, s2)),
            )
            m1, m2 = self._angle_node(s2, s1), self._angle_node(t2, t1)
            idx = self._tick()
            self.angles.union(
                m1, m2, idx,
                ("eq", fact, (s2, s1), (t2, t1)),
                ("eq", fact, (t2, t1), (s2, s1)),
            )
        elif fact.pred == "midp":
            pass
        else:  # pragma: no cover
            raise FactError(f"cannot integrate predicate {fact.pred!r}")

    def _resolve_line(self, lid: int) -> _Line:
        while lid in self._line_alias:
            lid = self._line_alias[lid]
        return self.lines[lid]

    def _line_absorb(self, pts: Set[str], index: int, fact: Fact) -> None:
        if len(pts) < 2:  # coll with one distinct point constrains nothing
            return
        lids = sorted({
            self.pair2line[pair]
            for pair in combinations(sorted(pts), 2)
            if pair in self.pair2line
        })
        if not lids:
            lid = self._next_line
            self._next_line += 1
            names = sorted(pts)
            line = _Line(lid, set(pts), [(index, fact)], _seg(names[0], names[1]))
            self.lines[lid] = line
        else:
            line = self.lines[lids[0]]
            for other_id in lids[1:]:
                other = self.lines.pop(other_id)
                line.points |= other.points
                line.log.extend(other.log)
                self._line_alias[other_id] = line.lid
            line.points |= pts
            line.log.append((index, fact))
        anchor = line.anchor
        self.dirs.add(anchor)
        for pair in combinations(sorted(line.points), 2):
            self.pair2line[pair] = line.lid
            if self.dirs.union(pair, anchor, self._tick(), ("line", line.lid), ("line", line.lid)):
                self._dirty = True

    def _circle_absorb(self, pts: Set[str], index: int, fact: Fact) -> None:
        members = set(pts)
        log: List[Tuple[int, Fact]] = [(index, fact)]
        absorbed: Set[int] = set()
        while True:
            hit = None
            for trip in combinations(sorted(members), 3):
                cid = self.triple2circle.get(trip)
                if cid is not None and cid not in absorbed:
                    hit = cid
                    break
            if hit is None:
                break
            circle = self.circles.pop(hit)
            members |= circle.points
            log.extend(circle.log)
            absorbed.add(hit)
        cid = self._next_circle
        self._next_circle += 1
        self.circles[cid] = _Circle(cid, members, log)
        for trip in combinations(sorted(members), 3):
            self.triple2circle[trip] = cid

    def _angle_node(self, sa: Seg, sb: Seg) -> int:
        self.dirs.add(sa)
        self.dirs.add(sb)
        sig = (self.dirs.find(sa), self.dirs.find(sb))
        nid = self.sig2node.get(sig)
        if nid is None:
            nid = len(self.angle_nodes)
            self.angle_nodes.append(_AngleNode(nid, sa, sb))
            self.angles.add(nid)
            self.sig2node[sig] = nid
        return nid

    def _drain(self) -> None:
        if self._draining:
            return
        self._draining = True
        try:
            while self._dirty:
                self._dirty = False
                self._refresh_angle_sigs()
                self._perp_closure()
        finally:
            self._draining = False

    def _refresh_angle_sigs(self) -> None:
        fresh: Dict[Tuple[Seg, Seg], int] = {}
        for node in self.angle_nodes:
            sig = (self.dirs.find(node.seg1), self.dirs.find(node.seg2))
            other = fresh.get(sig)
            if other is None:
                fresh[sig] = node.nid
            elif self.angles.find(other) != self.angles.find(node.nid):
                self.angles.union(other, node.nid, self._tick(), ("dirsub",), ("dirsub",))
        self.sig2node = fresh

    def _perp_closure(self) -> None:
        n = len(self.perp_records)
        for i in range(n):
            ri = self.perp_records[i]
            a1, a2 = self.dirs.find(ri.seg1), self.dirs.find(ri.seg2)
            for j in range(i + 1, n):
                rj = self.perp_records[j]
                b1, b2 = self.dirs.find(rj.seg1), self.dirs.find(rj.seg2)
                for (shared_i, shared_j, ui, vj) in (
                    (a1, b1, ri.seg2, rj.seg2),
                    (a1, b2, ri.seg2, rj.seg1),
                    (a2, b1, ri.seg1, rj.seg2),
                    (a2, b2, ri.seg1, rj.seg1),
                ):
                    if shared_i != shared_j:
                        continue
                    if self.dirs.find(ui) == self.dirs.find(vj):
                        continue
                    bridge_i = ri.seg1 if ui == ri.seg2 else ri.seg2
                    bridge_j = rj.seg1 if vj == rj.seg2 else rj.seg2
                    ants: List[Fact] = [ri.fact, rj.fact]
                    if bridge_i != bridge_j:
                        ants.append(canonical_fact("para", bridge_i + bridge_j))
                    self.assert_fact(
                        canonical_fact("para", ui + vj), "perp_perp_para", tuple(ants)
                    )

    # ------------------------------------------------------------------
    # queries

    def derivable(self, fact: Fact) -> bool:
        """True when the fact is stored or implied by the structures."""
        if fact in self.facts:
            return True
        p = fact.points
        if fact.pred == "midp":
            return False
        if fact.pred == "coll":
            lid = self.pair2line.get(_seg(p[0], p[1]))
            return lid is not None and p[2] in self.lines[lid].points
        if fact.pred == "cyclic":
            cid = self.triple2circle.get((p[0], p[1], p[2]))
            return cid is not None and p[3] in self.circles[cid].points
        if fact.pred == "cong":
            s, t = _seg(p[0], p[1]), _seg(p[2], p[3])
            return s == t or (s in self.cong and t in self.cong and self.cong.find(s) == self.cong.find(t))
        if fact.pred == "para":
            s, t = _seg(p[0], p[1]), _seg(p[2], p[3])
            return s == t or self.dirs.find(s) == self.dirs.find(t)
        if fact.pred == "perp":
            s, t = _seg(p[0], p[1]), _seg(p[2], p[3])
            ds, dt = self.dirs.find(s), self.dirs.find(t)
            for r in self.perp_records:
                d1, d2 = self.dirs.find(r.seg1), self.dirs.find(r.seg2)
                if (ds, dt) in ((d1, d2), (d2, d1)):
                    return True
            return False
        if fact.pred == "eqangle":
            s1, s2 = _seg(p[0], p[1]), _seg(p[2], p[3])
            t1, t2 = _seg(p[4], p[5]), _seg(p[6], p[7])
            d = self.dirs.find
            if d(s1) == d(t1) and d(s2) == d(t2):
                return True
            if d(s1) == d(s2) and d(t1) == d(t2):
                return True
            n1 = self.sig2node.get((d(s1), d(s2)))
            n2 = self.sig2node.get((d(t1), d(t2)))
            return (
                n1 is not None and n2 is not None
                and self.angles.find(n1) == self.angles.find(n2)
            )
        raise FactError(f"unknown predicate {fact.pred!r}")  # pragma: no cover

    def enumerated(self) -> Set[Fact]:
        """All facts: atomic ones plus every instance the structures imply."""
        out: Set[Fact] = set(self.facts)
        for lid in sorted(self.lines):
            for trip in combinations(sorted(self.lines[lid].points), 3):
                out.add(canonical_fact("coll", trip))
        for cid in sorted(self.circles):
            for quad in combinations(sorted(self.circles[cid].points), 4):
                out.add(canonical_fact("cyclic", quad))
        for group in self.cong.classes():
            for s, t in combinations(group, 2):
                out.add(canonical_fact("cong", s + t))
        for group in self.dirs.classes():
            for s, t in combinations(group, 2):
                ls, lt = self.pair2line.get(s), self.pair2line.get(t)
                if ls is not None and ls == lt:
                    continue
                out.add(canonical_fact("para", s + t))
        for r in self.perp_records:
            class1 = self._dir_class(r.seg1)
            class2 = self._dir_class(r.seg2)
            for s in class1:
                for t in class2:
                    if s == t:
                        continue
                    out.add(canonical_fact("perp", s + t))
        for nids in self.angles.classes():
            if len(nids) < 2:
                continue
            expansions = {nid: self._angle_instances(self.angle_nodes[nid]) for nid in nids}
            for na in nids:
                for nb in nids:
                    if na == nb:
                        continue
                    for side_a in expansions[na]:
                        for side_b in expansions[nb]:
                            if side_a == side_b:
                                continue
                            out.add(canonical_fact("eqangle", side_a + side_b))
        return out

    def _dir_class(self, seg: Seg) -> List[Seg]:
        root = self.dirs.find(seg)
        if seg not in self.dirs:
            return [seg]
        return sorted(s for s in self.dirs.parent if self.dirs.find(s) == root)

    def _angle_instances(self, node: _AngleNode) -> List[Tuple[str, str, str, str]]:
        """Concrete vertex-sharing (side1, side2) expansions of an angle node."""
        out = []
        for s in self._dir_class(node.seg1):
            for t in self._dir_class(node.seg2):
                if s == t or not (set(s) & set(t)):
                    continue
                out.append(s + t)
        return out

    # ------------------------------------------------------------------
    # explanations

    def explain(self, fact: Fact, bound: int) -> Optional[Justification]:
        """One-step justification of a virtual fact from atomic facts.

        Only events strictly below *bound* are used, so explanations are
        stable under later growth of the structures.  Returns None when the
        fact was not derivable before *bound*.
        """
        p = fact.points
        if fact.pred == "coll":
            lid = self.pair2line.get(_seg(p[0], p[1]))
            if lid is None or p[2] not in self.lines[lid].points:
                return None
            atoms = self._line_cover(self.lines[lid], set(p), bound)
            if atoms is None:
                return None
            return Justification("coll_transitivity", tuple(atoms), fact)
        if fact.pred == "cyclic":
            return self._explain_cyclic(fact, bound)
        if fact.pred == "cong":
            s, t = _seg(p[0], p[1]), _seg(p[2], p[3])
            path = self.cong.path(s, t, bound)
            if path is None:
                return None
            atoms = _dedup(label for (_u, _v, _i, label) in path)
            return Justification("cong_transitivity", tuple(atoms), fact)
        if fact.pred == "para":
            s, t = _seg(p[0], p[1]), _seg(p[2], p[3])
            atoms = self._dir_atoms(s, t, bound)
            if atoms is None:
                return None
            return Justification("para_transitivity", tuple(atoms), fact)
        if fact.pred == "perp":
            return self._explain_perp(fact, bound)
        if fact.pred == "eqangle":
            return self._explain_eqangle(fact, bound)
        return None

    def _explain_cyclic(self, fact: Fact, bound: int) -> Optional[Justification]:
        p = fact.points
        cid = self.triple2circle.get((p[0], p[1], p[2]))
        if cid is None or p[3] not in self.circles[cid].points:
            return None
        entries = sorted(
            (i, f) for (i, f) in self.circles[cid].log if i < bound
        )
        want = set(p)
        for _i, f in entries:
            if want <= set(f.points):
                return Justification("circle_merge", (f,), fact)
        for (_, f), (_, g) in combinations(entries, 2):
            fp, gp = set(f.points), set(g.points)
            if len(fp & gp) >= 3 and want <= (fp | gp):
                return Justification("circle_merge", (f, g), fact)
        if entries and want <= set().union(*(set(f.points) for _i, f in entries)):
            return Justification("circle_merge", tuple(f for _i, f in entries), fact)
        return None

    def _explain_perp(self, fact: Fact, bound: int) -> Optional[Justification]:
        p = fact.points
        s, t = _seg(p[0], p[1]), _seg(p[2], p[3])
        for r in self.perp_records:
            if r.index >= bound:
                continue
            for (qs, qt) in ((s, t), (t, s)):
                a1 = self._dir_atoms(qs, r.seg1, bound)
                if a1 is None:
                    continue
                a2 = self._dir_atoms(qt, r.seg2, bound)
                if a2 is None:
                    continue
                return Justification("perp_substitution", tuple(_dedup([r.fact] + a1 + a2)), fact)
        return None

    def _explain_eqangle(self, fact: Fact, bound: int) -> Optional[Justification]:
        p = fact.points
        s1, s2 = _seg(p[0], p[1]), _seg(p[2], p[3])
        t1, t2 = _seg(p[4], p[5]), _seg(p[6], p[7])
        a = self._dir_atoms(s1, t1, bound)
        b = self._dir_atoms(s2, t2, bound) if a is not None else None
        if a is not None and b is not None:
            return Justification("corresponding_angles", tuple(_dedup(a + b)), fact)
        a = self._dir_atoms(s1, s2, bound)
        b = self._dir_atoms(t1, t2, bound) if a is not None else None
        if a is not None and b is not None:
            return Justification("corresponding_angles", tuple(_dedup(a + b)), fact)
        sources = self._node_candidates(s1, s2, bound)
        targets = self._node_candidates(t1, t2, bound)
        target_ids = {nid for nid, _ in targets}
        target_atoms = dict(targets)
        for nid, src_atoms in sources:
            for tid in sorted(target_ids):
                path = self.angles.path(nid, tid, bound)
                if path is None:
                    continue
                atoms = list(src_atoms)
                ok = True
                for (u, v, _idx, label) in path:
                    expanded = self._expand_angle_edge(u, v, label, bound)
                    if expanded is None:
                        ok = False
                        break
                    atoms.extend(expanded)
                if not ok:
                    continue
                atoms.extend(target_atoms[tid])
                return Justification("eqangle_transitivity", tuple(_dedup(atoms)), fact)
        return None

    def _node_candidates(self, sa: Seg, sb: Seg, bound: int) -> List[Tuple[int, List[Fact]]]:
        out = []
        for node in self.angle_nodes:
            a1 = self._dir_atoms(sa, node.seg1, bound)
            if a1 is None:
                continue
            a2 = self._dir_atoms(sb, node.seg2, bound)
            if a2 is None:
                continue
            out.append((node.nid, a1 + a2))
        return out

    def _expand_angle_edge(self, u: int, v: int, label, bound: int) -> Optional[List[Fact]]:
        nu, nv = self.angle_nodes[u], self.angle_nodes[v]
        if label[0] == "eq":
            _tag, f, usegs, vsegs = label
            parts = [
                self._dir_atoms(nu.seg1, usegs[0], bound),
                self._dir_atoms(nu.seg2, usegs[1], bound),
                [f],
                self._dir_atoms(vsegs[0], nv.seg1, bound),
                self._dir_atoms(vsegs[1], nv.seg2, bound),
            ]
        else:  # ("dirsub",): the two nodes have pairwise-parallel sides
            parts = [
                self._dir_atoms(nu.seg1, nv.seg1, bound),
                self._dir_atoms(nu.seg2, nv.seg2, bound),
            ]
        if any(part is None for part in parts):
            return None
        out: List[Fact] = []
        for part in parts:
            out.extend(part)  # type: ignore[arg-type]
        return out

    def _dir_atoms(self, s: Seg, t: Seg, bound: int) -> Optional[List[Fact]]:
        """Atomic facts proving that *s* and *t* are parallel, before *bound*."""
        if s == t:
            return []
        path = self.dirs.path(s, t, bound)
        if path is None:
            return None
        atoms: List[Fact] = []
        for (u, v, _idx, label) in path:
            if isinstance(label, Fact):
                atoms.append(label)
            else:
                lid = label[1]
                line = self._resolve_line(lid)
                cover = self._line_cover(line, set(u) | set(v), bound)
                if cover is None:
                    return None
                atoms.extend(cover)
        return _dedup(atoms)

    def _line_cover(self, line: _Line, targets: Set[str], bound: int) -> Optional[List[Fact]]:
        """A small set of the line's facts connecting all *targets*.

        Breadth-first search over the bipartite point/fact graph restricted
        to log entries below *bound*; deterministic because the log is
        scanned in index order.
        """
        entries = sorted((i, f) for (i, f) in line.log if i < bound)
        singles = [f for _i, f in entries if targets <= set(f.points)]
        if singles:
            return [singles[0]]
        adj: Dict[str, List[Fact]] = {}
        for _i, f in entries:
            for q in f.points:
                adj.setdefault(q, []).append(f)
        targets = sorted(targets)
        start = targets[0]
        prev: Dict[str, Optional[Tuple[Fact, str]]] = {start: None}
        queue = [start]
        while queue:
            u = queue.pop(0)
            for f in adj.get(u, ()):
                for q in f.points:
                    if q not in prev:
                        prev[q] = (f, u)
                        queue.append(q)
        cover: List[Fact] = []
        for t in targets[1:]:
            if t not in prev:
                return None
            node = t
            while prev[node] is not None:
                f, parent = prev[node]
                if f not in cover:
                    cover.append(f)
                node = parent
        cover.sort(key=lambda f: self.facts[f])
        return cover


def _dedup(items) -> List[Fact]:
    seen: Set[Fact] = set()
    out: List[Fact] = []
    for x in items:
        if x not in seen:
            seen.add(x)
            out.append(x)
    return out
