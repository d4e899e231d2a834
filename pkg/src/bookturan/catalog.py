"""Closed-form values of ex(n, B_p) and the extremal constructions.

Values are known exactly when ``n - p`` is at most 6 (plus ``p = 1`` for
every ``n`` by Mantel's theorem and ``n <= p + 1`` trivially).  Extremal
graphs are described through their complements, which are small unions of
cycles, cliques and five fixed gadgets ``F, W, Q, Y, S``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from math import comb

from . import graph as gc
from .books import is_book_free
from .graph import Graph, GraphError


class NotCharacterized(GraphError):
    pass


class NoConstruction(GraphError):
    pass


class TuranCase(enum.Enum):
    TrivialComplete = "n <= p + 1: K_n contains no B_p"
    Mantel = "Mantel: ex(n, K_3) = floor(n^2 / 4)"
    Lemma3_even = "ex(p+2, B_p) = p(p+2)/2 and ex(p+3, B_p) = p(p+4)/2, p even"
    Lemma3_odd = "ex(p+2, B_p) = (p+1)^2/2 and ex(p+3, B_p) = (p+1)(p+3)/2, p odd"
    Thm6 = "ex(p+4, B_p) = (p+2)(p+3)/2, p >= 3"
    Thm8_mod1 = "ex(p+5, B_p) = (p+2)(p+5)/2, p = 1 mod 3"
    Thm8_mod02 = "ex(p+5, B_p) = (p+1)(p+6)/2, p = 0, 2 mod 3"
    Thm13_odd = "ex(p+6, B_p) = (p+3)(p+5)/2, p odd, p >= 5"
    Thm13_even = "ex(p+6, B_p) = 1 + (p+2)(p+6)/2, p even, p not in {2, 6, 10}"
    ExceptionTable = "small exceptional cell"
    Unknown = "no closed form known"

    @property
    def citation(self) -> str:
        return self.value


@dataclass(frozen=True)
class TuranValue:
    value: int | None
    case: TuranCase

    def __post_init__(self):
        if (self.value is None) != (self.case is TuranCase.Unknown):
            raise ValueError("value must be present exactly when the case is known")

    @property
    def known(self) -> bool:
        return self.value is not None


EXCEPTIONS = {(6, 2): 9, (8, 2): 16, (9, 3): 21, (12, 6): 48, (16, 10): 96}


def turan_formula(n: int, p: int) -> TuranValue:
    if n < 1 or p < 1:
        raise ValueError("n and p must be positive")
    d = n - p
    if d <= 1:
        return TuranValue(comb(n, 2), TuranCase.TrivialComplete)
    if p == 1:
        return TuranValue(n * n // 4, TuranCase.Mantel)
    if (n, p) in EXCEPTIONS:
        return TuranValue(EXCEPTIONS[n, p], TuranCase.ExceptionTable)
    if d == 2:
        if p % 2 == 0:
            return TuranValue(p * (p + 2) // 2, TuranCase.Lemma3_even)
        return TuranValue((p + 1) ** 2 // 2, TuranCase.Lemma3_odd)
    if d == 3:
        if p % 2 == 0:
            return TuranValue(p * (p + 4) // 2, TuranCase.Lemma3_even)
        return TuranValue((p + 1) * (p + 3) // 2, TuranCase.Lemma3_odd)
    if d == 4 and p >= 3:
        return TuranValue((p + 2) * (p + 3) // 2, TuranCase.Thm6)
    if d == 5:
        if p % 3 == 1:
            return TuranValue((p + 2) * (p + 5) // 2, TuranCase.Thm8_mod1)
        return TuranValue((p + 1) * (p + 6) // 2, TuranCase.Thm8_mod02)
    if d == 6:
        if p % 2 == 1 and p >= 5:
            return TuranValue((p + 3) * (p + 5) // 2, TuranCase.Thm13_odd)
        if p % 2 == 0 and p not in (2, 6, 10):
            return TuranValue(1 + (p + 2) * (p + 6) // 2, TuranCase.Thm13_even)
    return TuranValue(None, TuranCase.Unknown)


# ---------------------------------------------------------------- gadgets


class GadgetId(enum.Enum):
    F = "F"
    W = "W"
    Q = "Q"
    Y = "Y"
    S = "S"


def _data_lines(name: str) -> list[str]:
    text = resources.files("bookturan").joinpath("data", name).read_text()
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]


@lru_cache(maxsize=None)
def _gadget_table() -> dict[GadgetId, Graph]:
    table = {}
    for line in _data_lines("gadgets.g6"):
        key, code = line.split()
        table[GadgetId(key)] = gc.graph6_decode(code)
    return table


def gadget(gid: GadgetId | str) -> Graph:
    return _gadget_table()[GadgetId(gid)]


@lru_cache(maxsize=None)
def order8_pair() -> tuple[Graph, Graph]:
    """The two extremal graphs for ex(8, B_3) = 18, frozen from exhaustive search."""
    a, b = (gc.graph6_decode(line) for line in _data_lines("ex8_3.g6"))
    return a, b


def cut_vertices(g: Graph) -> list[int]:
    base = len(gc.components(g))
    out = []
    for v in range(g.order):
        rest = [u for u in range(g.order) if u != v]
        if len(gc.components(gc.induced(g, rest))) > base:
            out.append(v)
    return out


# (order, size, degree sequence or None, extra predicate)
_PROFILES = {
    GadgetId.F: (6, 7, (3, 3, 2, 2, 2, 2), lambda g: len(cut_vertices(g)) == 2),
    GadgetId.W: (8, 10, (3, 3, 3, 3, 2, 2, 2, 2), lambda g: len(gc.components(g)) == 1),
    GadgetId.Q: (10, 12, (3, 3, 3, 3, 2, 2, 2, 2, 2, 2), lambda g: len(gc.components(g)) == 1),
    GadgetId.Y: (10, 15, (3,) * 10, lambda g: True),
    GadgetId.S: (7, 11, None, lambda g: min(g.degrees()) >= 3),
}

# complement(K_3 * k3 + gadget) must be B_p-free with the given size
_PLUG_INS = {
    GadgetId.W: (1, 6, 42),
    GadgetId.Q: (0, 5, 33),
    GadgetId.Y: (1, 7, 60),
    GadgetId.S: (1, 4, 31),
}


def matches_profile(gid: GadgetId | str, g: Graph) -> bool:
    order, size, degs, extra = _PROFILES[GadgetId(gid)]
    if g.order != order or g.size != size:
        return False
    if degs is not None and gc.degree_sequence(g) != degs:
        return False
    return bool(extra(g))


def passes_plug_in(gid: GadgetId | str, g: Graph) -> bool:
    gid = GadgetId(gid)
    if gid not in _PLUG_INS:
        return True
    k3, p, size = _PLUG_INS[gid]
    host = gc.complement(gc.disjoint_union([gc.complete(3)] * k3 + [g]))
    return host.size == size and is_book_free(host, p)


def validate_gadget(gid: GadgetId | str) -> bool:
    g = gadget(gid)
    return matches_profile(gid, g) and passes_plug_in(gid, g)


@dataclass(frozen=True)
class OracleReport:
    gadget: GadgetId
    profile_classes: int
    passing: tuple[Graph, ...]
    embedded_passes: bool

    @property
    def unique(self) -> bool:
        return len(self.passing) == 1 and self.embedded_passes


def gadget_oracle(gid: GadgetId | str) -> OracleReport:
    """Enumerate every class with the gadget's profile and keep those passing the plug-in test."""
    from .generate import generate

    gid = GadgetId(gid)
    order, _, degs, _ = _PROFILES[gid]
    cap = max(degs) if degs else None
    hits = [g for g in (Graph(order, rows) for rows in generate(order, max_degree=cap)) if matches_profile(gid, g)]
    passing = tuple(sorted((g for g in hits if passes_plug_in(gid, g)), key=gc.canonical_code))
    mine = gc.canonical_code(gadget(gid))
    return OracleReport(gid, len(hits), passing, any(gc.canonical_code(g) == mine for g in passing))


# ---------------------------------------------------------------- families


@dataclass(frozen=True)
class ExtremalFamily:
    n: int
    p: int
    graphs: tuple[Graph, ...]
    complete: bool
    citation: str

    def __len__(self):
        return len(self.graphs)

    def codes(self) -> list[bytes]:
        return [gc.canonical_code(g) for g in self.graphs]


def cycle_partitions(m: int) -> list[tuple[int, ...]]:
    """Multisets of integers >= 3, none equal to 4, summing to ``m`` (sorted ascending)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    out: list[tuple[int, ...]] = []

    def rec(rest: int, least: int, acc: list[int]):
        if rest == 0:
            if acc:
                out.append(tuple(acc))
            return
        for part in range(least, rest + 1):
            if part == 4:
                continue
            acc.append(part)
            rec(rest - part, part, acc)
            acc.pop()

    rec(m, 3, [])
    return sorted(out, key=lambda t: (len(t), t))


def _co(*parts: Graph) -> Graph:
    return gc.complement(gc.disjoint_union(parts))


def _copies(g: Graph, k: int) -> list[Graph]:
    return [g] * k


def _family(n: int, p: int, graphs: list[Graph], complete: bool, citation: str) -> ExtremalFamily:
    graphs = sorted(graphs, key=gc.canonical_code)
    return ExtremalFamily(n, p, tuple(graphs), complete, citation)


def extremal_family(n: int, p: int) -> ExtremalFamily:
    """All extremal graphs for ex(n, B_p) where they are known, up to isomorphism."""
    if p < 1:
        raise ValueError("p must be positive")
    K1, K2, K3, K4 = (gc.complete(k) for k in (1, 2, 3, 4))
    d = n - p
    if p == 1:
        return _family(n, p, [gc.complete_bipartite(n // 2, n - n // 2)], True,
                       "Mantel: the balanced complete bipartite graph is unique")
    if d == 2:
        if p % 2 == 0:
            gs = [gc.complete_minus_pm(p + 2), _co(K1, *_copies(K2, (p - 2) // 2), gc.path(3))]
        else:
            gs = [gc.join(K1, gc.complete_minus_pm(p + 1))]
        return _family(n, p, gs, True, "order p+2 characterization")
    if d == 3:
        if p == 2:
            gs = [gc.join(K1, gc.disjoint_union(K2, K2)), gc.complete_bipartite(2, 3), gc.complement(gc.path(5))]
        elif p % 2 == 0:
            gs = [gc.join(gc.empty(3), gc.complete_minus_pm(p)),
                  gc.join(gc.complement(gc.path(5)), gc.complete_minus_pm(p - 2))]
        else:
            gs = [gc.complete_minus_pm(p + 3)]
        return _family(n, p, gs, True, "order p+3 characterization")
    if d == 4 and p >= 3:
        gs = [_co(K2, *(gc.cycle(i) for i in parts)) for parts in cycle_partitions(p + 2)]
        return _family(n, p, gs, True, "complement of K_2 plus cycles of lengths != 4 summing to p+2")
    if d == 5:
        if p == 2:
            return _family(n, p, [gc.complete_bipartite(3, 4)], True, "K_{3,4} is the unique extremal graph")
        if p == 3:
            return _family(n, p, list(order8_pair()), True, "two extremal graphs for ex(8, B_3)")
        if p >= 4:
            if p % 3 == 0:
                gs = [_co(*_copies(K3, (p - 3) // 3), gadget("W"))]
            elif p % 3 == 1:
                gs = [_co(*_copies(K3, (p + 5) // 3))]
            else:
                gs = [_co(*_copies(K3, (p + 1) // 3), K4), _co(*_copies(K3, (p - 5) // 3), gadget("Q"))]
            return _family(n, p, gs, True, "order p+5 characterization by residue of p mod 3")
    raise NotCharacterized(f"extremal graphs for ex({n}, B_{p}) are not characterized")


def witness_graph(n: int, p: int) -> Graph:
    """One B_p-free graph of order ``n`` whose size is ``turan_formula(n, p)``."""
    if p < 1 or n < 1:
        raise ValueError("n and p must be positive")
    d = n - p
    if d <= 1:
        return gc.complete(n)
    if p == 1:
        return gc.complete_bipartite(n // 2, n - n // 2)
    if d == 4 and p >= 3:
        return _co(gc.complete(2), gc.cycle(p + 2))
    if d in (2, 3, 5):
        return extremal_family(n, p).graphs[0]
    if d == 6:
        K3, K4 = gc.complete(3), gc.complete(4)
        if p % 4 == 1:
            return _co(K3, *_copies(K4, (p + 3) // 4))
        if p % 4 == 3 and p >= 7:
            return _co(K3, *_copies(K4, (p - 7) // 4), gadget("Y"))
        if p % 4 == 0:
            return _co(K3, *_copies(K4, (p - 4) // 4), gadget("S"))
        if p % 4 == 2 and p >= 14:
            return _co(K3, *_copies(K4, (p - 14) // 4), gadget("S"), gadget("Y"))
    raise NoConstruction(f"no closed-form construction attains ex({n}, B_{p})")


def check_witness(n: int, p: int) -> bool:
    g = witness_graph(n, p)
    v = turan_formula(n, p).value
    return g.order == n and g.size == v and is_book_free(g, p)
