"""Small simple graphs stored as per-vertex bit rows.

Row ``adj[v]`` has bit ``u`` set iff ``uv`` is an edge.  Orders are capped
at 64 so a neighbourhood fits one machine word; every object in this
package needs at most 16.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

MAX_ORDER = 64


class GraphError(ValueError):
    pass


class OrderTooLarge(GraphError):
    pass


class BadEndpoint(GraphError):
    pass


class LoopRejected(GraphError):
    pass


class BadParameter(GraphError):
    pass


class MalformedGraph6(GraphError):
    pass


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    order: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.order <= MAX_ORDER:
            raise OrderTooLarge(f"order {self.order} outside [0, {MAX_ORDER}]")
        if len(self.adj) != self.order:
            raise GraphError("need one adjacency row per vertex")
        full = (1 << self.order) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} has bits beyond the order")
            if row >> v & 1:
                raise GraphError(f"row {v} has a loop")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"rows {v} and {u} disagree")

    @cached_property
    def size(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.order) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        rows = [0] * self.order
        for v, row in enumerate(self.adj):
            mask = 0
            for u in _bits(row):
                mask |= 1 << perm[u]
            rows[perm[v]] = mask
        return Graph(self.order, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, size={self.size}, g6={graph6_encode(self)!r})"


# ---------------------------------------------------------------- builders


def from_edges(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if order > MAX_ORDER or order < 0:
        raise OrderTooLarge(f"order {order} outside [0, {MAX_ORDER}]")
    rows = [0] * order
    for u, v in edges:
        if not (0 <= u < order and 0 <= v < order):
            raise BadEndpoint(f"edge ({u}, {v}) has an endpoint outside 0..{order - 1}")
        if u == v:
            raise LoopRejected(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(order, tuple(rows))


def empty(k: int) -> Graph:
    return from_edges(k, [])


def complete(k: int) -> Graph:
    if k < 0:
        raise BadParameter("complete graph needs k >= 0")
    full = (1 << k) - 1
    return Graph(k, tuple(full ^ (1 << v) for v in range(k)))


def cycle(k: int) -> Graph:
    if k < 3:
        raise BadParameter("cycle needs k >= 3")
    return from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def path(k: int) -> Graph:
    """Path on ``k`` vertices (``P_k`` has ``k - 1`` edges)."""
    if k < 1:
        raise BadParameter("path needs k >= 1")
    return from_edges(k, [(i, i + 1) for i in range(k - 1)])


def complete_bipartite(s: int, t: int) -> Graph:
    if s < 0 or t < 0:
        raise BadParameter("part sizes must be nonnegative")
    return from_edges(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def complete_minus_pm(k: int) -> Graph:
    """``K_k`` with the matching ``{2i, 2i+1}`` removed."""
    if k < 0 or k % 2:
        raise BadParameter("complete_minus_pm needs an even k >= 0")
    g = complete(k)
    return Graph(k, tuple(row ^ (1 << (v ^ 1)) for v, row in enumerate(g.adj)))


def build(kind: str, *args: int) -> Graph:
    """Dispatch on a builder name, e.g. ``build("cycle", 5)``."""
    table = {
        "complete": complete,
        "cycle": cycle,
        "path": path,
        "complete_bipartite": complete_bipartite,
        "complete_minus_pm": complete_minus_pm,
        "empty": empty,
    }
    try:
        fn = table[kind]
    except KeyError:
        raise BadParameter(f"unknown graph kind {kind!r}") from None
    return fn(*args)


# ---------------------------------------------------------------- algebra


def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    return Graph(g.order, tuple(full ^ row ^ (1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(*gs: Graph) -> Graph:
    """Block-diagonal union; accepts graphs or a single iterable of graphs."""
    if len(gs) == 1 and not isinstance(gs[0], Graph):
        gs = tuple(gs[0])
    total = sum(g.order for g in gs)
    if total > MAX_ORDER:
        raise OrderTooLarge(f"union has order {total}")
    rows: list[int] = []
    offset = 0
    for g in gs:
        rows.extend(row << offset for row in g.adj)
        offset += g.order
    return Graph(total, tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    total = g.order + h.order
    if total > MAX_ORDER:
        raise OrderTooLarge(f"join has order {total}")
    left = (1 << g.order) - 1
    right = ((1 << h.order) - 1) << g.order
    rows = [row | right for row in g.adj] + [(row << g.order) | left for row in h.adj]
    return Graph(total, tuple(rows))


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Degrees in non-increasing order."""
    return tuple(sorted(g.degrees(), reverse=True))


def components(g: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, ordered by smallest vertex."""
    seen = 0
    out = []
    for v in range(g.order):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(list(_bits(comp)))
    return out


def induced(g: Graph, vertices: Sequence[int]) -> Graph:
    """Induced subgraph, vertices renumbered in the given order."""
    index = {v: i for i, v in enumerate(vertices)}
    rows = []
    for v in vertices:
        mask = 0
        for u in _bits(g.adj[v]):
            if u in index:
                mask |= 1 << index[u]
        rows.append(mask)
    return Graph(len(vertices), tuple(rows))


# ---------------------------------------------------------------- canonical labeling


def _refine(adj: Sequence[int], cells: list[int], queue: list[int]) -> list[int]:
    # Cells are vertex masks. Splitting by neighbour counts into each queued
    # splitter, fragments ordered by count, yields an equitable partition
    # whose cell sequence commutes with relabeling.
    head = 0
    while head < len(queue):
        w = queue[head]
        head += 1
        out = []
        changed = False
        for c in cells:
            if c & (c - 1) == 0:
                out.append(c)
                continue
            groups: dict[int, int] = {}
            m = c
            while m:
                b = m & -m
                k = (adj[b.bit_length() - 1] & w).bit_count()
                groups[k] = groups.get(k, 0) | b
                m ^= b
            if len(groups) == 1:
                out.append(c)
                continue
            changed = True
            for k in sorted(groups):
                out.append(groups[k])
                queue.append(groups[k])
        if changed:
            cells = out
    return cells


def _leaf_code(adj: Sequence[int], order: list[int]) -> int:
    # Upper triangle of the relabeled matrix in graph6 column order,
    # most significant bit first.
    code = 0
    n = len(order)
    for j in range(1, n):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


class _Canon:
    """Refinement plus backtracking search for the minimal leaf code.

    Subtrees are skipped when they are images of explored subtrees under
    automorphisms found so far; the automorphisms found generate the full
    automorphism group.
    """

    def __init__(self, adj: Sequence[int], cells: list[int]):
        self.adj = adj
        self.n = len(adj)
        self.first: tuple[int, list[int], list[int]] | None = None
        self.best: tuple[int, list[int], list[int]] | None = None
        self.gens: list[list[int]] = []
        queue = list(cells)
        self._search(_refine(adj, list(cells), queue), [])

    def _orbit_rep(self, path: list[int]) -> list[int]:
        n = self.n
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.gens:
            if all(g[v] == v for v in path):
                for v in range(n):
                    a, b = find(v), find(g[v])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return [find(v) for v in range(n)]

    def _search(self, cells: list[int], path: list[int]) -> int:
        level = len(path)
        if len(cells) == self.n:
            order = [c.bit_length() - 1 for c in cells]
            code = _leaf_code(self.adj, order)
            if self.first is None:
                self.first = self.best = (code, order, list(path))
                return level
            for ref in (self.first, self.best):
                if code == ref[0]:
                    gamma = [0] * self.n
                    for a, b in zip(ref[1], order):
                        gamma[a] = b
                    self.gens.append(gamma)
                    k = 0
                    while k < len(path) and path[k] == ref[2][k]:
                        k += 1
                    return k
            if code < self.best[0]:
                self.best = (code, order, list(path))
            return level

        size = min(c.bit_count() for c in cells if c & (c - 1))
        t = next(i for i, c in enumerate(cells) if c.bit_count() == size)
        cell = cells[t]
        explored: list[int] = []
        ngens = -1
        reps: list[int] = []
        for v in _bits(cell):
            if explored:
                if ngens != len(self.gens):
                    ngens = len(self.gens)
                    reps = self._orbit_rep(path)
                if any(reps[v] == reps[u] for u in explored):
                    continue
            b = 1 << v
            child = cells[:t] + [b, cell ^ b] + cells[t + 1:]
            r = self._search(_refine(self.adj, child, [b]), path + [v])
            explored.append(v)
            if r < level:
                return r
        return level


@dataclass(frozen=True)
class CanonicalForm:
    code: bytes
    labeling: tuple[int, ...]  # labeling[i] is the vertex placed at canonical position i
    generators: tuple[tuple[int, ...], ...]

    def orbits(self) -> list[int]:
        """Orbit representative (smallest member) for every vertex."""
        n = len(self.labeling)
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        for g in self.generators:
            for v in range(n):
                a, b = find(v), find(g[v])
                if a != b:
                    parent[max(a, b)] = min(a, b)
        return [find(v) for v in range(n)]


def _code_bytes(n: int, code: int) -> bytes:
    nbits = n * (n - 1) // 2
    return bytes([n]) + code.to_bytes((nbits + 7) // 8, "big")


def canonical_form_rows(adj: Sequence[int], cells: list[int] | None = None) -> CanonicalForm:
    """Canonical form of raw adjacency rows, optionally with an ordered colouring."""
    n = len(adj)
    if n == 0:
        return CanonicalForm(bytes([0]), (), ())
    if cells is None:
        cells = [(1 << n) - 1]
    c = _Canon(adj, cells)
    code, order, _ = c.best
    return CanonicalForm(_code_bytes(n, code), tuple(order), tuple(tuple(g) for g in c.gens))


def canonical_form(g: Graph) -> CanonicalForm:
    return canonical_form_rows(g.adj)


def canonical_code(g: Graph) -> bytes:
    """Relabeling-invariant identifier of the isomorphism class of ``g``."""
    return canonical_form_rows(g.adj).code


def canonical_graph(g: Graph) -> Graph:
    """The representative of the class of ``g`` whose upper triangle is the code."""
    order = canonical_form_rows(g.adj).labeling
    perm = [0] * g.order
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.size != h.size:
        return False
    if degree_sequence(g) != degree_sequence(h):
        return False
    return canonical_code(g) == canonical_code(h)


# ---------------------------------------------------------------- graph6


def graph6_encode(g: Graph) -> str:
    n = g.order
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    bits = []
    for j in range(1, n):
        row = g.adj[j]
        bits.extend(row >> i & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return head + "".join(body)


def graph6_decode(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise MalformedGraph6("empty graph6 line")
    if any(not 63 <= ord(ch) <= 126 for ch in s):
        raise MalformedGraph6(f"byte outside graph6 range in {line!r}")
    if s[0] == "~":
        if len(s) < 4 or s[1] == "~":
            raise MalformedGraph6(f"unsupported order header in {line!r}")
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n > MAX_ORDER:
        raise OrderTooLarge(f"graph6 order {n} exceeds {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(f"expected {(nbits + 5) // 6} data bytes for order {n}, got {len(body)}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend(val >> s & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise MalformedGraph6("nonzero padding bits")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))
