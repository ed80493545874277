"""Independent brute-force references used to validate the main engine.

None of these share traversal or arithmetic code paths with the modules they
check: hereditary saturated sets are filtered definitionally over all vertex
subsets, the single-loop graph is replayed against direct Laurent-ring ideal
arithmetic, and the acyclic sink-powerset premise is verified rather than
assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Sequence

from .errors import GraphError
from .graphs import Graph, exitless_cycles, is_finite
from .ideals import (
    IdealRep,
    contains,
    graded_part,
    intersect,
    is_maximal,
    is_prime,
    limit_power,
    make,
    power,
    product,
    zero_ideal,
)
from .lattice import bottom_pair, enumerate_hs, enumerate_pairs
from .laurent import LaurentPoly, divides, is_irreducible, poly_lcm, squarefree_core
from .theorems import intersection_of_primes


def brute_hs(g: Graph) -> List[frozenset]:
    """All hereditary saturated subsets by filtering every vertex subset.

    Checks the two defining conditions edge by edge; limited to 12 vertices.
    """
    vs = g.vertices
    if len(vs) > 12:
        raise GraphError(f"{len(vs)} vertices is beyond the brute-force bound of 12")
    out = []
    for mask in range(1 << len(vs)):
        H = {vs[i] for i in range(len(vs)) if mask >> i & 1}
        hereditary = True
        for (src, dst) in g.bundles:
            if src in H and dst not in H:
                hereditary = False
                break
        if not hereditary:
            continue
        saturated = True
        for v in vs:
            if v in H:
                continue
            targets = [dst for (src, dst) in g.bundles if src == v]
            total = sum((m for (src, _), m in g.bundles.items() if src == v), 0)
            if targets and is_finite(total) and all(t in H for t in targets):
                saturated = False
                break
        if saturated:
            out.append(frozenset(H))
    return sorted(out, key=lambda h: tuple(sorted(h)))


@dataclass
class ModelReport:
    """Outcome of replaying the ideal calculus against a direct model."""

    checked: int = 0
    mismatches: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def expect(self, label: str, got, want):
        self.checked += 1
        if got != want:
            self.mismatches.append(f"{label}: engine {got!r} != model {want!r}")


def _single_loop_cycle(g: Graph):
    cycles = exitless_cycles(g)
    if len(g.vertices) != 1 or len(cycles) != 1 or len(cycles[0]) != 1:
        raise GraphError("the Laurent model requires the single-vertex single-loop graph")
    return cycles[0]


def laurent_model(g: Graph, polys: Sequence[LaurentPoly]) -> ModelReport:
    """Replay the ideal operations on the single-loop graph against K[x, 1/x].

    Proper nonzero ideals correspond to canonical polynomial generators;
    containment is divisibility, intersection is lcm, product is
    multiplication, and the prime/maximal ideals are the irreducible
    generators.  Every mismatch is recorded.
    """
    cyc = _single_loop_cycle(g)
    lattice = enumerate_pairs(g)
    bottom = bottom_pair()
    report = ModelReport()

    def ideal_of(p: LaurentPoly) -> IdealRep:
        return make(g, bottom, {cyc: p})

    def generator(I: IdealRep) -> LaurentPoly:
        if I.components:
            return I.components[0][1]
        if I.graded == bottom:
            return LaurentPoly.zero(polys[0].field)
        return LaurentPoly.one(polys[0].field)

    for p in polys:
        p = p.unit_free()
        I = ideal_of(p)
        report.expect(f"graded_part <{p}>", graded_part(I), bottom)
        report.expect(f"limit_power <{p}>", generator(limit_power(g, I)).is_zero, True)
        report.expect(f"is_prime <{p}>", is_prime(g, lattice, I).prime, is_irreducible(p))
        report.expect(f"is_maximal <{p}>", is_maximal(g, lattice, I), is_irreducible(p))
        for n in (2, 3):
            report.expect(f"power <{p}>^{n}", generator(power(g, I, n)), (p**n).unit_free())
        iop = intersection_of_primes(g, lattice, I)
        core = squarefree_core(p)
        report.expect(f"prime intersection over <{p}>", generator(iop.result), core)
        report.expect(f"prime intersection equals <{p}>", iop.equals_input, core == p)
        report.expect(f"zero ideal inside <{p}>", contains(g, I, zero_ideal()), True)
        for q in polys:
            q = q.unit_free()
            J = ideal_of(q)
            report.expect(f"contains <{p}> >= <{q}>", contains(g, I, J), divides(p, q))
            report.expect(
                f"intersect <{p}> & <{q}>", generator(intersect(g, I, J)), poly_lcm(p, q)
            )
            report.expect(
                f"product <{p}> * <{q}>", generator(product(g, I, J)), (p * q).unit_free()
            )
    return report


@dataclass
class SinkLatticeReport:
    ok: bool
    sink_count: int
    hs_count: int
    message: str = ""


def acyclic_sink_lattice(g: Graph) -> SinkLatticeReport:
    """Verify the sink-powerset description of the lattice of a finite DAG.

    For row-finite acyclic graphs, T -> {v : every sink reachable from v is
    in T} should be an inclusion-preserving bijection from sink subsets onto
    the hereditary saturated sets.  The premise is checked against
    :func:`enumerate_hs`, not assumed; failures are reported loudly (infinite
    emitters do break it).
    """
    order = list(g.vertices)
    reach_sinks = {}

    def sinks_from(v, seen):
        if v in reach_sinks:
            return reach_sinks[v]
        if v in seen:
            raise GraphError("cyclic input: the sink-powerset oracle needs a DAG")
        seen = seen | {v}
        succ = g.successors(v)
        if not succ:
            out = frozenset([v])
        else:
            out = frozenset()
            for w in succ:
                out |= sinks_from(w, seen)
        reach_sinks[v] = out
        return out

    for v in order:
        sinks_from(v, frozenset())
    sinks = sorted(v for v in order if not g.successors(v))
    subsets = []
    for mask in range(1 << len(sinks)):
        T = frozenset(sinks[i] for i in range(len(sinks)) if mask >> i & 1)
        subsets.append(T)
    image = {T: frozenset(v for v in order if reach_sinks[v] <= T) for T in subsets}
    engine = set(enumerate_hs(g))
    if set(image.values()) != engine or len(set(image.values())) != len(subsets):
        return SinkLatticeReport(
            False,
            len(sinks),
            len(engine),
            "sink subsets do not biject onto the hereditary saturated sets",
        )
    for T1 in subsets:
        for T2 in subsets:
            if (T1 <= T2) != (image[T1] <= image[T2]):
                return SinkLatticeReport(
                    False, len(sinks), len(engine), "the bijection does not preserve inclusion"
                )
    return SinkLatticeReport(True, len(sinks), len(engine))
