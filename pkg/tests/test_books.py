import random

import pytest
from hypothesis import given, strategies as st

from bookturan import graph as gc
from bookturan.books import (
    NoEdges,
    NotAnEdge,
    OrderTooSmall,
    book_number,
    cobook_criterion,
    edge_book_count,
    is_book_free,
    max_book_witness,
)

from conftest import graphs, random_graph

K3, K4, K5 = gc.complete(3), gc.complete(4), gc.complete(5)
PM6 = gc.complete_minus_pm(6)


def brute_bk(g):
    best = 0
    for x, y in g.edges():
        best = max(best, sum(1 for z in range(g.order) if g.has_edge(x, z) and g.has_edge(y, z)))
    return best


def test_edge_book_count_examples():
    assert all(edge_book_count(K5, x, y).pages == 3 for x, y in K5.edges())
    assert all(edge_book_count(PM6, x, y).pages == 2 for x, y in PM6.edges())
    assert edge_book_count(gc.cycle(5), 0, 1).pages == 0
    with pytest.raises(NotAnEdge):
        edge_book_count(PM6, 0, 1)


def test_book_number_examples():
    assert book_number(gc.complete_bipartite(3, 3)) == 0
    g1 = gc.complement(gc.disjoint_union(gc.complete(2), gc.cycle(7)))
    assert book_number(g1) == 4
    assert book_number(K4) == 2
    assert book_number(gc.empty(5)) == 0


@pytest.mark.parametrize("n", range(3, 17))
def test_book_number_of_complete_graphs(n):
    assert book_number(gc.complete(n)) == n - 2


def test_is_book_free_examples():
    assert is_book_free(PM6, 3)
    assert not is_book_free(K5, 3)
    assert is_book_free(K5, 9)
    assert is_book_free(gc.complete(4), 3)


def test_cobook_examples():
    k222 = gc.complement(gc.disjoint_union(*[gc.complete(2)] * 3))
    assert cobook_criterion(k222, 4)
    g2 = gc.complement(gc.disjoint_union(K3, K3, K3))
    assert cobook_criterion(g2, 4)
    comp = gc.complement(g2)
    for x, y in g2.edges():
        assert (comp.adj[x] | comp.adj[y]).bit_count() == 4
    assert not cobook_criterion(K5, 3)
    with pytest.raises(OrderTooSmall):
        cobook_criterion(K4, 3)


def test_max_book_witness_examples():
    w = max_book_witness(K4)
    assert w.edge == (0, 1) and set(w.common) == {2, 3} and w.pages == 2
    w = max_book_witness(gc.cycle(5))
    assert w.edge == (0, 1) and not w.common
    assert max_book_witness(gc.complete_bipartite(1, 4)).pages == 0
    with pytest.raises(NoEdges):
        max_book_witness(gc.empty(3))


def test_book_free_and_cobook_agree_on_random_graphs():
    rng = random.Random(1)
    checked = 0
    while checked < 10_000:
        n = rng.randint(5, 12)
        g = random_graph(rng, n)
        p = rng.randint(1, n - 2)
        assert is_book_free(g, p) == cobook_criterion(g, p)
        checked += 1


@given(graphs(max_order=10))
def test_book_number_matches_brute_force(g):
    assert book_number(g) == brute_bk(g)


@given(graphs(min_order=2, max_order=10))
def test_pages_plus_counion_is_n_minus_2(g):
    comp = gc.complement(g)
    for x, y in g.edges():
        w = edge_book_count(g, x, y)
        assert all(g.has_edge(z, x) and g.has_edge(z, y) for z in w.common)
        assert w.pages + (comp.adj[x] | comp.adj[y]).bit_count() == g.order - 2


@given(graphs(max_order=10), st.integers(1, 10))
def test_book_free_monotone_in_p(g, p):
    if is_book_free(g, p):
        assert is_book_free(g, p + 1)


@given(graphs(min_order=2, max_order=10), st.data())
def test_edge_deletion_never_raises_bk(g, data):
    edges = g.edges()
    if not edges:
        return
    e = data.draw(st.sampled_from(edges))
    smaller = gc.from_edges(g.order, [f for f in edges if f != e])
    assert book_number(smaller) <= book_number(g)
