"""Labeled branch-and-bound for the largest B_p-free graphs of order n.

Vertex pairs are decided in colex order ``(0,1), (0,2), (1,2), (0,3), ...``,
edge first.  A node is cut when

* adding the edge gives some edge ``p`` common neighbours (only the new edge
  and the edges into the new common neighbourhood can change), or
* edges so far, plus the undecided pairs of the current column, plus the
  pairs between finished and later vertices, plus ``ex(m, B_p)`` for the
  ``m`` later vertices, cannot beat the incumbent, or
* the adjacency rows stop being lexicographically non-increasing: for
  ``i < j`` the row of ``i`` must dominate the row of ``j`` at their first
  differing column outside ``{i, j}``.  The labeling whose row-major
  adjacency string is largest always satisfies this, so every class keeps
  at least one labeled representative.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Sequence


class _Abort(Exception):
    pass


@dataclass
class BnBStats:
    nodes: int = 0
    bound_prunes: int = 0
    book_prunes: int = 0
    symmetry_prunes: int = 0


@dataclass
class BnBResult:
    best: int
    solutions: list[tuple[int, ...]]
    complete: bool
    stats: BnBStats = field(default_factory=BnBStats)


def branch_and_bound(
    n: int,
    p: int,
    lower: int,
    small_ex: Sequence[int],
    collect: bool,
    deadline: float | None = None,
    prefix: Sequence[int] = (),
    shared_best: Callable[[], int] | None = None,
    publish: Callable[[int], None] | None = None,
) -> BnBResult:
    """Search labeled B_p-free graphs of order ``n``.

    ``lower`` is a size known to be attainable; only graphs beating it
    (or matching it, with ``collect``) are reported.  ``small_ex[m]`` must
    be an upper bound on ``ex(m, B_p)`` for ``m < n``.  ``prefix`` fixes the
    first pair decisions (1 = edge), which is how work is split across
    processes.
    """
    adj = [0] * n
    stats = BnBStats()
    best = lower
    sols: list[tuple[int, ...]] = []
    # future[c]: cap on edges touching vertices after c
    future = [(n - 1 - c) * (c + 1) + small_ex[n - 1 - c] for c in range(n)]
    limit = p - 1
    check_every = 1 << 14

    def include_ok(i: int, c: int) -> bool:
        ai, ac = adj[i], adj[c]
        common = ai & ac
        if common.bit_count() > limit:
            return False
        m = common
        while m:
            b = m & -m
            w = adj[b.bit_length() - 1]
            if (ai & w).bit_count() >= limit or (ac & w).bit_count() >= limit:
                return False
            m ^= b
        return True

    def lex_ok(i: int, c: int) -> bool:
        # only an included edge can break the ordering
        ri = adj[i]
        for j in range(i):
            d = (adj[j] ^ ri) & ~((1 << j) | (1 << i))
            if d and ri & d & -d:
                return False
        rc = adj[c]
        known = (2 << i) - 1
        for j in range(c):
            if j == i:
                continue
            d = (adj[j] ^ rc) & known & ~(1 << j)
            if d and rc & d & -d:
                return False
        return True

    def dfs(c: int, i: int, cur: int) -> None:
        nonlocal best
        if i == c:
            c += 1
            i = 0
            if c == n:
                if cur > best:
                    best = cur
                    sols.clear()
                    sols.append(tuple(adj))
                    if publish is not None:
                        publish(best)
                elif collect and cur == best:
                    sols.append(tuple(adj))
                return
        stats.nodes += 1
        if not stats.nodes % check_every:
            if deadline is not None and time.monotonic() > deadline:
                raise _Abort
            if shared_best is not None:
                other = shared_best()
                if other > best:
                    best = other
                    sols.clear()
        ub = cur + (c - i) + future[c]
        if ub < best or (ub == best and not collect):
            stats.bound_prunes += 1
            return
        k = c * (c - 1) // 2 + i
        forced = prefix[k] if k < len(prefix) else None
        if forced != 0:
            if include_ok(i, c):
                adj[i] |= 1 << c
                adj[c] |= 1 << i
                if lex_ok(i, c):
                    dfs(c, i + 1, cur + 1)
                else:
                    stats.symmetry_prunes += 1
                adj[i] ^= 1 << c
                adj[c] ^= 1 << i
            else:
                stats.book_prunes += 1
        if forced != 1:
            dfs(c, i + 1, cur)

    complete = True
    try:
        if n >= 2:
            dfs(1, 0, 0)
        elif lower <= 0:
            # one labeled graph on at most one vertex, with no edges
            if lower < 0 or collect:
                sols.append((0,) * n)
            best = 0
    except _Abort:
        complete = False
    return BnBResult(best, sols, complete, stats)
