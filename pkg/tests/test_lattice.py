"""Hereditary saturated sets, admissible pairs, meets/joins and quotients."""

import random

import pytest

from leavitt.errors import LatticeError
from leavitt.graphs import Graph, OMEGA
from leavitt.lattice import (
    AdmissiblePair,
    admissible_pair,
    bottom_pair,
    breaking_vertices,
    closed_form_meet,
    enumerate_hs,
    hereditary_saturated_closure,
    normalize_generators,
    pair_join,
    pair_meet,
    quotient,
    top_pair,
)

from conftest import lattice_of


def hs_sets(g):
    return [tuple(sorted(h)) for h in enumerate_hs(g)]


def test_closure(named):
    assert hereditary_saturated_closure(named["T1"], {"w"}) == {"w"}
    assert hereditary_saturated_closure(named["A3"], {"u2"}) == {"u0", "u1", "u2"}
    for g in named.values():
        assert hereditary_saturated_closure(g, ()) == frozenset()


def test_enumerate_hs_small_graphs(named):
    assert hs_sets(named["T1"]) == [(), ("v", "w"), ("w",)]
    assert hs_sets(named["C2"]) == [(), ("v1",), ("v1", "v2")]
    assert hs_sets(named["L1"]) == [(), ("v",)]
    assert hs_sets(named["B1"]) == [(), ("a",), ("a", "b"), ("a", "b", "u"), ("b",)]


def test_breaking_vertices(named):
    B1, T1 = named["B1"], named["T1"]
    assert breaking_vertices(B1, {"a"}) == {"u"}
    assert breaking_vertices(B1, {"b"}) == frozenset()
    for H in enumerate_hs(T1):
        assert breaking_vertices(T1, H) == frozenset()
    with pytest.raises(LatticeError, match="not hereditary saturated"):
        breaking_vertices(T1, {"v"})


def test_enumerate_pairs_counts(named):
    assert len(lattice_of(named["B1"])) == 6
    assert len(lattice_of(named["T1"])) == 3
    assert len(lattice_of(named["L1"])) == 2
    b1_pairs = [(p.h, p.s) for p in lattice_of(named["B1"]).pairs]
    assert ((), ()) in b1_pairs
    assert (("a",), ("u",)) in b1_pairs
    assert (("a", "b", "u"), ()) in b1_pairs
    # T1 is a three-element chain
    t1 = lattice_of(named["T1"]).pairs
    assert all(a.le(b) or b.le(a) for a in t1 for b in t1)
    # RR is the four-element Boolean lattice
    rr = lattice_of(named["RR"]).pairs
    assert len(rr) == 4
    atoms = [p for p in rr if p.h and p != top_pair(named["RR"])]
    assert len(atoms) == 2 and not (atoms[0].le(atoms[1]) or atoms[1].le(atoms[0]))


def test_pair_order_is_partial(corpus):
    for g in corpus:
        lat = lattice_of(g)
        for p in lat.pairs:
            assert p.s_set <= breaking_vertices(g, p.h_set)
            assert p.le(p)
        for a in lat.pairs:
            for b in lat.pairs:
                if a.le(b) and b.le(a):
                    assert a == b


def test_meet_join_examples(named):
    B1, T1 = named["B1"], named["T1"]
    lat = lattice_of(B1)
    a_u = AdmissiblePair.of({"a"}, {"u"})
    ab = AdmissiblePair.of({"a", "b"}, ())
    assert pair_meet(lat, a_u, ab) == AdmissiblePair.of({"a"}, ())
    assert pair_join(lat, AdmissiblePair.of({"a"}, ()), AdmissiblePair.of({"b"}, ())) == ab
    latt = lattice_of(T1)
    assert pair_meet(latt, AdmissiblePair.of({"w"}, ()), bottom_pair()) == bottom_pair()


def test_lattice_axioms(corpus):
    rng = random.Random(7)
    for g in corpus:
        lat = lattice_of(g)
        ps = lat.pairs
        for a in ps:
            assert lat.meet(a, a) == a and lat.join(a, a) == a
        for a in ps:
            for b in ps:
                m, j = lat.meet(a, b), lat.join(a, b)
                assert m == lat.meet(b, a) and j == lat.join(b, a)
                assert lat.meet(a, j) == a and lat.join(a, m) == a  # absorption
        triples = (
            [(a, b, c) for a in ps for b in ps for c in ps]
            if len(ps) <= 12
            else [tuple(rng.choice(ps) for _ in range(3)) for _ in range(300)]
        )
        for a, b, c in triples:
            assert lat.meet(a, lat.meet(b, c)) == lat.meet(lat.meet(a, b), c)
            assert lat.join(a, lat.join(b, c)) == lat.join(lat.join(a, b), c)


def test_closed_form_meet_matches_search(corpus):
    for g in corpus:
        lat = lattice_of(g)
        for a in lat.pairs:
            for b in lat.pairs:
                assert closed_form_meet(g, a, b) == lat.meet(a, b)


def test_quotient_examples(named):
    T1, B1 = named["T1"], named["B1"]
    q = quotient(T1, AdmissiblePair.of({"w"}, ()))
    assert q.graph == Graph(["v"], {("v", "v"): 1})
    qb = quotient(B1, AdmissiblePair.of({"a"}, ()))
    assert qb.graph.vertices == ("b", "u", "u'")
    assert dict(qb.graph.bundles) == {("u", "b"): 1}
    assert qb.primed_vertices() == ["u'"]
    for g in named.values():
        assert quotient(g, bottom_pair()).graph == g


def test_quotient_primed_vertices_are_sinks(corpus):
    for g in corpus:
        lat = lattice_of(g)
        for p in lat.pairs:
            q = quotient(g, p)
            for v in q.primed_vertices():
                assert q.graph.total_out(v) == 0


def test_quotient_duplicates_bundles_into_primed_sinks():
    g = Graph(["u", "h", "t"], {("u", "h"): OMEGA, ("u", "t"): 2, ("t", "u"): 1})
    pair = admissible_pair(g, {"h"}, ())
    q = quotient(g, pair)
    assert dict(q.graph.bundles) == {("u", "t"): 2, ("t", "u"): 1, ("t", "u'"): 1}


def test_admissible_pair_validation(named):
    B1 = named["B1"]
    admissible_pair(B1, {"a"}, {"u"})
    with pytest.raises(LatticeError, match="subset of B_H"):
        admissible_pair(B1, {"b"}, {"u"})
    with pytest.raises(LatticeError, match="not hereditary"):
        admissible_pair(named["T1"], {"v"}, ())


def test_normalize_generators(named):
    B1 = named["B1"]
    assert normalize_generators(B1, {"a"}, {"u"}) == AdmissiblePair.of({"a"}, {"u"})
    assert normalize_generators(B1, {"a", "b"}, {"u"}) == top_pair(B1)
    for g in named.values():
        assert normalize_generators(g, (), ()) == bottom_pair()
    with pytest.raises(LatticeError, match="infinite emitter"):
        normalize_generators(B1, (), {"a"})


def test_top_and_bottom(corpus):
    for g in corpus[:40]:
        lat = lattice_of(g)
        assert lat.bottom == bottom_pair()
        assert lat.top == top_pair(g)
        for p in lat.pairs:
            assert bottom_pair().le(p) and p.le(lat.top)
