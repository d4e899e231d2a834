"""Book numbers and B_p-freeness.

The pages of the book on edge ``xy`` are the common neighbours of ``x``
and ``y``; ``bk(G)`` is the largest page count over all edges.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, GraphError, _bits


class NotAnEdge(GraphError):
    pass


class OrderTooSmall(GraphError):
    pass


class NoEdges(GraphError):
    pass


@dataclass(frozen=True)
class BookWitness:
    edge: tuple[int, int]
    common: tuple[int, ...]

    @property
    def pages(self) -> int:
        return len(self.common)


def book_number_rows(adj: Sequence[int]) -> int:
    best = 0
    for x, row in enumerate(adj):
        for y in _bits(row >> (x + 1) << (x + 1)):
            c = (row & adj[y]).bit_count()
            if c > best:
                best = c
    return best


def edge_book_count(g: Graph, x: int, y: int) -> BookWitness:
    if not g.has_edge(x, y):
        raise NotAnEdge(f"({x}, {y}) is not an edge")
    common = g.adj[x] & g.adj[y]
    # complement-side identity: pages + |N'(x) u N'(y)| = n - 2
    full = (1 << g.order) - 1
    co_union = (full ^ g.adj[x] ^ (1 << x)) | (full ^ g.adj[y] ^ (1 << y))
    co_union &= ~((1 << x) | (1 << y))
    assert common.bit_count() + co_union.bit_count() == g.order - 2
    return BookWitness((x, y), tuple(_bits(common)))


def book_number(g: Graph) -> int:
    """Largest ``p`` such that ``B_p`` is a subgraph of ``g`` (0 when triangle-free)."""
    return book_number_rows(g.adj)


def max_book_witness(g: Graph) -> BookWitness:
    """An edge attaining ``bk(g)``; ties go to the lexicographically smallest edge."""
    best = None
    for x, y in g.edges():
        c = (g.adj[x] & g.adj[y]).bit_count()
        if best is None or c > best[0]:
            best = (c, x, y)
    if best is None:
        raise NoEdges("graph has no edges")
    return edge_book_count(g, best[1], best[2])


def is_book_free(g: Graph, p: int) -> bool:
    if p < 1:
        raise ValueError("p must be positive")
    if g.order < p + 2:
        return True
    return book_number_rows(g.adj) <= p - 1


def cobook_criterion(g: Graph, p: int) -> bool:
    """Complement-side freeness test: every edge ``xy`` has
    ``|N'(x) u N'(y)| >= n - p - 1`` where ``N'`` is the complement neighbourhood."""
    n = g.order
    if n < p + 2:
        raise OrderTooSmall(f"need order >= p + 2 = {p + 2}, got {n}")
    full = (1 << n) - 1
    co = [full ^ row ^ (1 << v) for v, row in enumerate(g.adj)]
    need = n - p - 1
    for x, y in g.edges():
        if (co[x] | co[y]).bit_count() < need:
            return False
    return True
