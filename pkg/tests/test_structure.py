import random

import pytest

from bookturan import catalog
from bookturan import graph as gc
from bookturan.books import OrderTooSmall, is_book_free
from bookturan.structure import (
    BadP,
    DegreePattern,
    WrongOrder,
    cycle_components,
    forced_cycle_instance,
    lemma2_implies_book,
    lemma9_holds,
    lemma10_holds,
    lemma11_degree_check,
)

K1, K2, K3 = gc.complete(1), gc.complete(2), gc.complete(3)


def test_cycle_components_examples():
    three = cycle_components(gc.disjoint_union(K3, K3, K3))
    assert [(c, L) for _, c, L in three] == [(True, 3)] * 3
    mixed = cycle_components(gc.disjoint_union(K2, gc.cycle(7)))
    assert [(c, L) for _, c, L in mixed] == [(False, 2), (True, 7)]
    c4k1 = cycle_components(gc.disjoint_union(gc.cycle(4), K1))
    assert sorted((c, L) for _, c, L in c4k1) == [(False, 1), (True, 4)]


def test_cycle_components_partition_vertices():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(0, 12)
        g = gc.from_edges(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < 0.2])
        seen = [v for comp, _, _ in cycle_components(g) for v in comp]
        assert sorted(seen) == list(range(n))


def test_lemma2_examples():
    g = gc.complement(gc.disjoint_union(K1, gc.cycle(5)))
    assert lemma2_implies_book(g, 1) and not is_book_free(g, 1)
    assert not lemma2_implies_book(gc.complement(gc.disjoint_union(K3, K3, K3)), 4)
    g = gc.complement(gc.disjoint_union(gc.cycle(4), K3, K3))
    assert lemma2_implies_book(g, 5) and not is_book_free(g, 5)
    with pytest.raises(OrderTooSmall):
        lemma2_implies_book(gc.complete(8), 4)


def test_lemma2_soundness_500_instances():
    rng = random.Random(9)
    for _ in range(500):
        p = rng.randint(1, 7)
        g = forced_cycle_instance(rng, p)
        assert p + 5 <= g.order <= 12
        assert lemma2_implies_book(g, p)
        assert not is_book_free(g, p)


def test_lemma9_examples():
    assert lemma9_holds(gc.disjoint_union(K3, K3, K3), 4)
    assert not lemma9_holds(gc.disjoint_union(gc.path(5), K2, K2), 4)
    assert lemma9_holds(gc.disjoint_union(catalog.gadget("W"), K3), 6)
    with pytest.raises(WrongOrder):
        lemma9_holds(gc.cycle(8), 4)


def test_lemma10_examples():
    assert lemma10_holds(gc.disjoint_union(K3, K3, K3), 4)
    assert not lemma10_holds(gc.cycle(9), 4)
    with pytest.raises(WrongOrder):
        lemma10_holds(gc.disjoint_union(catalog.gadget("Q"), K3), 5)


def test_lemma10_short_chains_allowed():
    # a path with three internal degree-2 vertices is the shortest violation
    assert not lemma10_holds(gc.disjoint_union(gc.path(5), K2, K2), 4)
    assert lemma10_holds(gc.disjoint_union(gc.path(4), gc.path(3), K2), 4)


def test_lemma11_examples():
    g2 = catalog.extremal_family(12, 7).graphs[0]
    assert lemma11_degree_check(gc.complement(g2), 7) is DegreePattern.TwoRegular
    g1 = catalog.extremal_family(11, 6).graphs[0]
    assert lemma11_degree_check(gc.complement(g1), 6) is DegreePattern.FourThrees
    assert lemma11_degree_check(gc.disjoint_union(K1, gc.cycle(8)), 4) is DegreePattern.Fail
    with pytest.raises(BadP):
        lemma11_degree_check(gc.cycle(8), 3)
    with pytest.raises(WrongOrder):
        lemma11_degree_check(gc.cycle(8), 4)


@pytest.mark.parametrize("p", range(4, 11))
def test_lemmas_hold_on_catalog_graphs(p):
    expect = DegreePattern.TwoRegular if p % 3 == 1 else DegreePattern.FourThrees
    for g in catalog.extremal_family(p + 5, p).graphs:
        gbar = gc.complement(g)
        assert lemma9_holds(gbar, p)
        assert lemma10_holds(gbar, p)
        assert lemma11_degree_check(gbar, p) is expect
