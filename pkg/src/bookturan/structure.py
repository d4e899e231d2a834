"""Structural facts about complements of B_p-free graphs.

These predicates serve as test oracles.  The search never relies on them to
skip a freeness check.  The ``lemma*`` checks take the complement graph
``gbar`` directly.
"""
from __future__ import annotations

import enum

from . import graph as gc
from .books import OrderTooSmall
from .graph import Graph, GraphError


class WrongOrder(GraphError):
    pass


class BadP(GraphError):
    pass


class DegreePattern(enum.Enum):
    TwoRegular = "TwoRegular"
    FourThrees = "FourThrees"
    Fail = "Fail"


def cycle_components(g: Graph) -> list[tuple[list[int], bool, int]]:
    """``(vertices, is_cycle, length)`` per component; a cycle is connected and 2-regular."""
    out = []
    for comp in gc.components(g):
        is_cycle = len(comp) >= 3 and all(g.degree(v) == 2 for v in comp)
        out.append((comp, is_cycle, len(comp)))
    return out


def lemma2_implies_book(g: Graph, p: int) -> bool:
    """True when the complement of ``g`` has a cycle component of length >= 4,
    which forces ``B_p`` into ``g`` once ``|g| >= p + 5``."""
    if g.order < p + 5:
        raise OrderTooSmall(f"need order >= p + 5 = {p + 5}, got {g.order}")
    return any(is_cycle and length >= 4 for _, is_cycle, length in cycle_components(gc.complement(g)))


def _check_order(gbar: Graph, p: int) -> None:
    if gbar.order != p + 5:
        raise WrongOrder(f"expected order p + 5 = {p + 5}, got {gbar.order}")


def lemma9_holds(gbar: Graph, p: int) -> bool:
    """Degree-2 vertices of ``gbar`` at distance at most 2 are adjacent."""
    _check_order(gbar, p)
    adj = gbar.adj
    twos = [v for v in range(gbar.order) if adj[v].bit_count() == 2]
    for i, x in enumerate(twos):
        for y in twos[i + 1:]:
            if not adj[x] >> y & 1 and adj[x] & adj[y]:
                return False
    return True


def lemma10_holds(gbar: Graph, p: int) -> bool:
    """No path of length >= 4 in ``gbar`` has all internal vertices of degree 2.

    Any such path contains one with exactly three internal vertices, so it
    suffices to look at each degree-2 vertex with two degree-2 neighbours.
    """
    _check_order(gbar, p)
    adj = gbar.adj
    deg = [row.bit_count() for row in adj]
    for b in range(gbar.order):
        if deg[b] != 2:
            continue
        a, c = gc._bits(adj[b])
        if deg[a] != 2 or deg[c] != 2:
            continue
        (u,) = gc._bits(adj[a] & ~(1 << b))
        (w,) = gc._bits(adj[c] & ~(1 << b))
        if len({u, a, b, c, w}) == 5:
            return False
    return True


def lemma11_degree_check(gbar: Graph, p: int) -> DegreePattern:
    if p < 4:
        raise BadP(f"the degree pattern is only claimed for p >= 4, got {p}")
    _check_order(gbar, p)
    degs = gc.degree_sequence(gbar)
    if all(d == 2 for d in degs):
        return DegreePattern.TwoRegular
    if degs == (3, 3, 3, 3) + (2,) * (gbar.order - 4):
        return DegreePattern.FourThrees
    return DegreePattern.Fail


def forced_cycle_instance(rng, p: int, max_order: int = 12) -> Graph:
    """Random graph of order in ``[p + 5, max_order]`` whose complement has a
    cycle component of length at least 4, randomly relabeled."""
    n = rng.randint(p + 5, max(p + 5, max_order))
    k = rng.randint(4, n)
    rest = n - k
    other = gc.from_edges(rest, [(u, v) for u in range(rest) for v in range(u + 1, rest) if rng.random() < 0.5])
    gbar = gc.disjoint_union(gc.cycle(k), other)
    perm = list(range(n))
    rng.shuffle(perm)
    return gc.complement(gbar.relabel(perm))
