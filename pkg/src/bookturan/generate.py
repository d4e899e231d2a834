"""Isomorph-free generation of small graphs by canonical augmentation.

A child of order ``k + 1`` is kept only when the added vertex lies in the
automorphism orbit of the child's canonical deletion vertex: among the
vertices of maximum degree, then maximum neighbour-degree sum, then maximum
triangle count, the one placed first by the canonical labeling.  Children of
a parent with a nontrivial automorphism group are deduplicated by canonical
code.  Every class then appears exactly once.

With ``max_book`` (``max_degree``) set only graphs with book number
(maximum degree) at most that value are produced; both properties are
hereditary, so pruning parents is exact.
"""
from __future__ import annotations

from typing import Iterator, Sequence

from .graph import _bits, canonical_form_rows

Rows = tuple[int, ...]


def _violates(parent: Sequence[int], s: int, max_book: int) -> bool:
    for u in _bits(s):
        if (parent[u] & s).bit_count() > max_book:
            return True
        for w in _bits(parent[u] & s & ~((2 << u) - 1)):
            if (parent[u] & parent[w]).bit_count() >= max_book:
                return True
    return False


def _argmax(cands: int, score) -> int:
    best = None
    keep = 0
    for v in _bits(cands):
        f = score(v)
        if best is None or f > best:
            best, keep = f, 1 << v
        elif f == best:
            keep |= 1 << v
    return keep


def augment(parent: Rows, max_book: int | None = None, max_degree: int | None = None) -> Iterator[Rows]:
    """Yield the accepted one-vertex extensions of ``parent``."""
    k = len(parent)
    deg = [r.bit_count() for r in parent]
    maxdeg = max(deg, default=-1)
    bydeg = [0] * (k + 2)
    for u, d in enumerate(deg):
        bydeg[d] |= 1 << u
    maxmask = bydeg[maxdeg] if k else 0
    seen: set[bytes] | None = None
    if k > 1 and canonical_form_rows(parent).generators:
        seen = set()
    newbit = 1 << k
    full = bydeg[max_degree] if max_degree is not None and max_degree <= k else 0
    for s in range(1 << k):
        d = s.bit_count()
        if d < maxdeg or (d == maxdeg and s & maxmask):
            continue
        if max_degree is not None and (d > max_degree or s & full):
            continue
        # vertices tying the new one on degree
        top = newbit | (bydeg[d] & ~s) | (bydeg[d - 1] & s if d else 0)
        if max_book is not None and _violates(parent, s, max_book):
            continue
        child = tuple(r | newbit if s >> u & 1 else r for u, r in enumerate(parent)) + (s,)
        cf = None
        if top != newbit:
            cdeg = [r.bit_count() for r in child]
            top = _argmax(top, lambda v: sum(cdeg[u] for u in _bits(child[v])))
            if top & newbit and top != newbit:
                top = _argmax(top, lambda v: sum((child[u] & child[v]).bit_count() for u in _bits(child[v])))
            if not top & newbit:
                continue
            if top != newbit:
                cf = canonical_form_rows(child)
                pos = [0] * (k + 1)
                for i, v in enumerate(cf.labeling):
                    pos[v] = i
                w = min(_bits(top), key=pos.__getitem__)
                if w != k:
                    orb = cf.orbits()
                    if orb[w] != orb[k]:
                        continue
        if seen is not None:
            code = (cf or canonical_form_rows(child)).code
            if code in seen:
                continue
            seen.add(code)
        yield child


def generate(
    n: int, max_book: int | None = None, workers: int = 1, max_degree: int | None = None
) -> Iterator[Rows]:
    """All graphs of order ``n`` up to isomorphism, as adjacency-row tuples."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    if n == 0:
        yield ()
        return
    level: list[Rows] = [()]
    for _ in range(n - 1):
        level = [c for parent in level for c in augment(parent, max_book, max_degree)]
    if workers > 1 and len(level) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(workers) as pool:
            chunk = max(1, len(level) // (8 * workers))
            args = [(parent, max_book, max_degree) for parent in level]
            for batch in pool.map(_augment_all, args, chunksize=chunk):
                yield from batch
        return
    for parent in level:
        yield from augment(parent, max_book, max_degree)


def _augment_all(args) -> list[Rows]:
    return list(augment(*args))


def count_classes(n: int, max_book: int | None = None, max_degree: int | None = None) -> int:
    return sum(1 for _ in generate(n, max_book, max_degree=max_degree))
