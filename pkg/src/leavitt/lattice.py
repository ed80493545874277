"""Hereditary saturated sets, admissible pairs, and the graded-ideal lattice.

An admissible pair ``(H, S)`` is a hereditary saturated vertex set H together
with a set S of breaking vertices of H; it names the graded ideal generated
by H and the elements ``v - sum(e e* : s(e)=v, r(e) not in H)`` for v in S.
The pairs are ordered by ``(H1,S1) <= (H2,S2) iff H1 <= H2 and S1 <= H2|S2``
and form a finite lattice, computed here by exhaustive enumeration with
meets and joins found by bounded search over the enumerated order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from .errors import InternalInconsistencyError, LatticeError
from .graphs import Graph, is_finite

VertexSet = frozenset


def is_hereditary(g: Graph, H: Iterable[str]) -> bool:
    hset = frozenset(H)
    return all(w in hset for v in hset for w in g.successors(v))


def is_saturated(g: Graph, H: Iterable[str]) -> bool:
    hset = frozenset(H)
    for v in g.vertices:
        if v in hset:
            continue
        total = g.total_out(v)
        if total == 0 or not is_finite(total):
            continue
        if all(w in hset for w in g.successors(v)):
            return False
    return True


def hereditary_saturated_closure(g: Graph, X: Iterable[str]) -> VertexSet:
    """Least hereditary saturated superset of X.

    Alternates downward (successor) closure with regular-vertex saturation
    until a fixpoint is reached.  Infinite emitters are never forced in by
    saturation.
    """
    H = set(X)
    for v in H:
        g._check(v)
    changed = True
    while changed:
        changed = False
        stack = list(H)
        while stack:
            v = stack.pop()
            for w in g.successors(v):
                if w not in H:
                    H.add(w)
                    stack.append(w)
        for v in g.vertices:
            if v in H:
                continue
            total = g.total_out(v)
            if total == 0 or not is_finite(total):
                continue
            if all(w in H for w in g.successors(v)):
                H.add(v)
                changed = True
    return frozenset(H)


def _vkey(s: Iterable[str]) -> Tuple[str, ...]:
    return tuple(sorted(s))


def enumerate_hs(g: Graph) -> List[VertexSet]:
    """All hereditary saturated subsets, sorted by their sorted vertex tuple.

    Generated as closures of singletons, then closed under union-followed-by-
    closure until stable; agreement with the brute-force filter over all
    subsets is enforced by the oracle suite.
    """
    seeds = {hereditary_saturated_closure(g, ())}
    for v in g.vertices:
        seeds.add(hereditary_saturated_closure(g, (v,)))
    family = set(seeds)
    frontier = set(seeds)
    while frontier:
        fresh = set()
        for a in frontier:
            for b in family:
                u = a | b
                if u in family:
                    continue
                c = hereditary_saturated_closure(g, u)
                if c not in family:
                    fresh.add(c)
        family |= fresh
        frontier = fresh
    return sorted(family, key=_vkey)


def breaking_vertices(g: Graph, H: Iterable[str]) -> VertexSet:
    """Infinite emitters outside H with finitely many (>=1) edges into E0\\H."""
    hset = frozenset(H)
    if not is_hereditary(g, hset) or not is_saturated(g, hset):
        raise LatticeError(f"{sorted(hset)} is not hereditary saturated")
    result = set()
    for v in g.vertices:
        if v in hset:
            continue
        if is_finite(g.total_out(v)):
            continue
        into_complement = sum((m for w, m in g.out_bundles(v) if w not in hset), 0)
        if is_finite(into_complement) and into_complement > 0:
            result.add(v)
    return frozenset(result)


@dataclass(frozen=True, order=True)
class AdmissiblePair:
    """Canonical (H, S): both parts stored as sorted tuples."""

    h: Tuple[str, ...]
    s: Tuple[str, ...]

    @classmethod
    def of(cls, H: Iterable[str], S: Iterable[str]) -> "AdmissiblePair":
        return cls(_vkey(H), _vkey(S))

    @property
    def h_set(self) -> VertexSet:
        return frozenset(self.h)

    @property
    def s_set(self) -> VertexSet:
        return frozenset(self.s)

    def le(self, other: "AdmissiblePair") -> bool:
        return self.h_set <= other.h_set and self.s_set <= (other.h_set | other.s_set)

    def label(self) -> str:
        return "({%s}, {%s})" % (",".join(self.h), ",".join(self.s))

    def __repr__(self):
        return self.label()


def admissible_pair(g: Graph, H: Iterable[str], S: Iterable[str]) -> AdmissiblePair:
    """Validated admissible pair for g."""
    hset = frozenset(H)
    sset = frozenset(S)
    bh = breaking_vertices(g, hset)
    if not sset <= bh:
        raise LatticeError(f"S={sorted(sset)} is not a subset of B_H={sorted(bh)}")
    return AdmissiblePair.of(hset, sset)


def bottom_pair() -> AdmissiblePair:
    return AdmissiblePair((), ())


def top_pair(g: Graph) -> AdmissiblePair:
    return AdmissiblePair(tuple(g.vertices), ())


def _subsets(items: Tuple[str, ...]):
    n = len(items)
    for mask in range(1 << n):
        yield tuple(items[i] for i in range(n) if mask >> i & 1)


class PairLattice:
    """The finite lattice of all admissible pairs of a graph.

    Meets and joins are computed lattice-theoretically: the greatest lower
    (least upper) bound is searched for within the enumerated order and its
    defining property is verified; a missing bound raises
    :class:`InternalInconsistencyError`.
    """

    def __init__(self, graph: Graph, pairs: List[AdmissiblePair]):
        self.graph = graph
        self.pairs = tuple(sorted(pairs))
        self._index = {p: i for i, p in enumerate(self.pairs)}
        n = len(self.pairs)
        low = [0] * n
        up = [0] * n
        for i, p in enumerate(self.pairs):
            for j, q in enumerate(self.pairs):
                if q.le(p):
                    low[i] |= 1 << j
                    up[j] |= 1 << i
        self._low = low
        self._up = up
        self._lowpop = [m.bit_count() for m in low]
        self._uppop = [m.bit_count() for m in up]
        self._meet: Dict[Tuple[int, int], int] = {}
        self._join: Dict[Tuple[int, int], int] = {}
        self.cache: Dict[str, object] = {}

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __contains__(self, p: AdmissiblePair):
        return p in self._index

    @property
    def bottom(self) -> AdmissiblePair:
        return self.pairs[self._index[bottom_pair()]]

    @property
    def top(self) -> AdmissiblePair:
        return top_pair(self.graph)

    def index(self, p: AdmissiblePair) -> int:
        try:
            return self._index[p]
        except KeyError:
            raise LatticeError(f"{p} is not an admissible pair of this graph") from None

    def le(self, a: AdmissiblePair, b: AdmissiblePair) -> bool:
        return bool(self._low[self.index(b)] >> self.index(a) & 1)

    def proper(self) -> List[AdmissiblePair]:
        t = self.top
        return [p for p in self.pairs if p != t]

    def _extremum(self, i: int, j: int, low, lowpop, table, kind: str) -> int:
        key = (i, j) if i <= j else (j, i)
        hit = table.get(key)
        if hit is not None:
            return hit
        cand = low[i] & low[j]
        best, bestpop = -1, -1
        m = cand
        while m:
            k = (m & -m).bit_length() - 1
            m &= m - 1
            if lowpop[k] > bestpop:
                best, bestpop = k, lowpop[k]
        if best < 0 or low[best] != cand:
            raise InternalInconsistencyError(
                f"admissible pairs have no {kind} for {self.pairs[i]} and {self.pairs[j]}"
            )
        table[key] = best
        return best

    def meet(self, a: AdmissiblePair, b: AdmissiblePair) -> AdmissiblePair:
        i = self._extremum(self.index(a), self.index(b), self._low, self._lowpop, self._meet, "meet")
        return self.pairs[i]

    def join(self, a: AdmissiblePair, b: AdmissiblePair) -> AdmissiblePair:
        i = self._extremum(self.index(a), self.index(b), self._up, self._uppop, self._join, "join")
        return self.pairs[i]

    def meet_all(self, items: Iterable[AdmissiblePair]) -> AdmissiblePair:
        """Meet of a family; the empty family meets to the top pair."""
        out: Optional[AdmissiblePair] = None
        for p in items:
            out = p if out is None else self.meet(out, p)
        return self.top if out is None else out

    def covered_by_top(self, p: AdmissiblePair) -> bool:
        i = self.index(p)
        return self._uppop[i] == 2 and p != self.top


def enumerate_pairs(g: Graph) -> PairLattice:
    """Every admissible pair (H, S) with H hereditary saturated, S <= B_H."""
    pairs = []
    for H in enumerate_hs(g):
        bh = _vkey(breaking_vertices(g, H))
        for S in _subsets(bh):
            pairs.append(AdmissiblePair.of(H, S))
    return PairLattice(g, pairs)


def pair_meet(lattice: PairLattice, a: AdmissiblePair, b: AdmissiblePair) -> AdmissiblePair:
    return lattice.meet(a, b)


def pair_join(lattice: PairLattice, a: AdmissiblePair, b: AdmissiblePair) -> AdmissiblePair:
    return lattice.join(a, b)


def closed_form_meet(g: Graph, a: AdmissiblePair, b: AdmissiblePair) -> AdmissiblePair:
    """Direct meet formula: H = H1 & H2, S = ((S1|H1) & (S2|H2)) & B_H.

    Used to cross-check the lattice search; the oracle suite enforces
    agreement on every pair of every corpus lattice.
    """
    H = a.h_set & b.h_set
    S = ((a.s_set | a.h_set) & (b.s_set | b.h_set)) & breaking_vertices(g, H)
    return AdmissiblePair.of(H, S)


@dataclass
class QuotientGraph:
    """Quotient of a graph by an admissible pair.

    ``provenance`` maps each quotient vertex to ``(original, primed)``; primed
    vertices are added for breaking vertices left out of S and are sinks.
    """

    graph: Graph
    provenance: Dict[str, Tuple[str, bool]] = field(default_factory=dict)

    def primed_vertices(self) -> List[str]:
        return sorted(v for v, (_, primed) in self.provenance.items() if primed)


def _primed_name(v: str, taken) -> str:
    name = v + "'"
    while name in taken:
        name += "'"
    return name


def quotient(g: Graph, p: AdmissiblePair) -> QuotientGraph:
    """The quotient graph E \\ (H, S).

    Vertices are (E0 \\ H) plus a primed sink v' for each breaking vertex v
    outside S; bundles with target outside H survive, and each bundle into a
    breaking vertex outside S is duplicated onto its primed sink.
    """
    hset = frozenset(p.h)
    sset = frozenset(p.s)
    bh = breaking_vertices(g, hset)
    if not sset <= bh:
        raise LatticeError(f"invalid pair {p} for this graph")
    survivors = [v for v in g.vertices if v not in hset]
    primed_of = {}
    taken = set(survivors)
    for v in sorted(bh - sset):
        name = _primed_name(v, taken)
        primed_of[v] = name
        taken.add(name)
    bundles = {}
    for (src, dst), mult in g.bundles.items():
        if dst in hset:
            continue
        if src in hset:
            raise InternalInconsistencyError("hereditary set emits into its complement")
        bundles[(src, dst)] = mult
        if dst in primed_of:
            bundles[(src, primed_of[dst])] = mult
    provenance = {v: (v, False) for v in survivors}
    provenance.update({name: (v, True) for v, name in primed_of.items()})
    return QuotientGraph(Graph(sorted(taken), bundles), provenance)


def normalize_generators(g: Graph, X: Iterable[str], T: Iterable[str]) -> AdmissiblePair:
    """Least admissible pair whose ideal contains X and the v^H for v in T.

    The vertices of X are closed hereditarily and saturatedly; any v in T all
    of whose remaining out-edges end inside H collapses into H (its v^H plus
    the removed part reassembles v), and this promotion is iterated to a
    fixpoint.  The final S is T & B_H.
    """
    for v in T:
        g._check(v)
        if is_finite(g.total_out(v)):
            raise LatticeError(f"{v!r} is not an infinite emitter")
    H = hereditary_saturated_closure(g, X)
    tset = frozenset(T)
    changed = True
    while changed:
        changed = False
        for v in sorted(tset - H):
            if all(w in H for w in g.successors(v)):
                H = hereditary_saturated_closure(g, H | {v})
                changed = True
    S = tset & breaking_vertices(g, H)
    return AdmissiblePair.of(H, S)
