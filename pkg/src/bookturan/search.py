"""Exact ex(n, B_p) with all extremal graphs up to isomorphism.

Two independent routes:

* ``Mode.BranchAndBound`` (see :mod:`bookturan.bnb`), seeded with a catalog
  construction when one exists, extremal graphs deduplicated by canonical
  code at the end;
* ``Mode.FullEnumeration``, which generates every B_p-free graph of order
  ``n`` once per isomorphism class and takes the largest.  It shares no
  pruning logic with the first route and serves as its oracle.
"""
from __future__ import annotations

import enum
import itertools
import logging
import math
import os
import time
from dataclasses import dataclass, field
from math import comb
from pathlib import Path

from . import catalog
from . import graph as gc
from .bnb import branch_and_bound
from .books import is_book_free
from .generate import generate
from .graph import Graph, GraphError, OrderTooLarge

log = logging.getLogger(__name__)

CACHE_ENV = "BOOKTURAN_CACHE"
DEFAULT_CACHE = "turan-cache"
MAX_ENUMERATION_ORDER = 10


class BudgetExhausted(GraphError):
    pass


class Mismatch(AssertionError):
    pass


class Mode(enum.Enum):
    BranchAndBound = "bnb"
    FullEnumeration = "enum"


@dataclass(frozen=True)
class SearchConfig:
    mode: Mode = Mode.BranchAndBound
    budget_seconds: float | None = None
    seed_lower_bound: int | None = None
    seed_graph: Graph | None = None
    collect_extremal: bool = True
    worker_count: int = 1
    use_catalog_seed: bool = True

    def __post_init__(self):
        if self.worker_count < 1:
            raise ValueError("worker_count must be positive")
        if (self.seed_lower_bound is None) != (self.seed_graph is None):
            raise ValueError("a seed lower bound needs the graph that attains it")
        if self.seed_graph is not None and self.seed_graph.size != self.seed_lower_bound:
            raise ValueError("seed graph size differs from seed_lower_bound")


@dataclass
class TuranRecord:
    n: int
    p: int
    ex: int
    extremal: list[str]
    count: int
    complete: bool
    stats: dict = field(default_factory=dict)

    def graphs(self) -> list[Graph]:
        return [gc.graph6_decode(line) for line in self.extremal]

    def header(self) -> str:
        return f"{self.n} {self.p} {self.ex} {self.count} {str(self.complete).lower()}"


def _canonical_lines(graphs) -> list[str]:
    by_code = {}
    for g in graphs:
        by_code.setdefault(gc.canonical_code(g), g)
    return [gc.graph6_encode(gc.canonical_graph(by_code[c])) for c in sorted(by_code)]


# ---------------------------------------------------------------- full enumeration


_enum_memo: dict[tuple[int, int], tuple[int, list[Graph], dict]] = {}


def _full_enumeration(n: int, p: int, deadline: float | None) -> tuple[int, list[Graph], bool, dict]:
    if (n, p) in _enum_memo:
        best, graphs, stats = _enum_memo[n, p]
        return best, list(graphs), True, dict(stats)
    if n > MAX_ENUMERATION_ORDER:
        raise OrderTooLarge(f"full enumeration is limited to order {MAX_ENUMERATION_ORDER}")
    best = -1
    keep: list[tuple[int, ...]] = []
    seen = 0
    complete = True
    for rows in generate(n, max_book=p - 1 if n >= p + 2 else None):
        seen += 1
        if deadline is not None and not seen % 4096 and time.monotonic() > deadline:
            complete = False
            break
        e = sum(r.bit_count() for r in rows) // 2
        if e > best:
            best, keep = e, [rows]
        elif e == best:
            keep.append(rows)
    graphs = [Graph(n, rows) for rows in keep]
    if complete:
        _enum_memo[n, p] = best, graphs, {"classes": seen}
    return best, list(graphs), complete, {"classes": seen}


# ---------------------------------------------------------------- branch and bound


_ex_exact: dict[tuple[int, int], int] = {}


def _small_bounds(n: int, p: int, deadline: float | None) -> list[int]:
    """Upper bounds on ex(m, B_p) for m < n, exact unless time runs out.

    Exact values come from the search itself.  Past the deadline the
    averaging bound ex(m) <= m * ex(m - 1) / (m - 2) is used instead: each
    edge survives in m - 2 of the m vertex-deleted subgraphs.
    """
    out: list[int] = []
    for m in range(n):
        if m <= p + 1:
            out.append(comb(m, 2))
            continue
        if (m, p) not in _ex_exact:
            exact_prev = m - 1 <= p + 1 or (m - 1, p) in _ex_exact
            lower = out[m - 1] if exact_prev else -1
            try:
                w = catalog.witness_graph(m, p)
                if is_book_free(w, p):
                    lower = max(lower, w.size)
            except GraphError:
                pass
            # an order m-1 extremal graph plus an isolated vertex attains ex(m-1)
            r = branch_and_bound(m, p, lower, out, collect=False, deadline=deadline)
            if r.complete:
                _ex_exact[m, p] = r.best
        out.append(_ex_exact.get((m, p), m * out[m - 1] // (m - 2)))
    return out


_shared = None


def _init_worker(value):
    global _shared
    _shared = value


def _read_shared() -> int:
    return _shared.value


def _publish(v: int) -> None:
    with _shared.get_lock():
        if v > _shared.value:
            _shared.value = v


def _bnb_task(args):
    n, p, lower, small, collect, deadline, prefix = args
    r = branch_and_bound(n, p, lower, small, collect, deadline, prefix, _read_shared, _publish)
    return r.best, r.solutions, r.complete, r.stats


def _split_prefixes(n: int, workers: int) -> list[tuple[int, ...]]:
    depth = min(comb(n, 2), max(1, math.ceil(math.log2(8 * workers))))
    return list(itertools.product((1, 0), repeat=depth))


def _branch_and_bound(n, p, lower, seed, collect, deadline, workers):
    stats = {"nodes": 0, "bound_prunes": 0, "book_prunes": 0, "symmetry_prunes": 0}
    if collect:
        # a strict pass first: collecting below the optimum wastes equality branches
        best, found, complete, stats = _branch_and_bound(n, p, lower, seed, False, deadline, workers)
        if not complete:
            return best, found, complete, stats
        lower, seed = best, (found[0] if found else seed)
    small = _small_bounds(n, p, deadline)
    if workers == 1:
        r = branch_and_bound(n, p, lower, small, collect, deadline)
        results = [(r.best, r.solutions, r.complete, r.stats)]
    else:
        import multiprocessing as mp
        from concurrent.futures import ProcessPoolExecutor

        shared = mp.Value("i", lower)
        tasks = [(n, p, lower, small, collect, deadline, pre) for pre in _split_prefixes(n, workers)]
        with ProcessPoolExecutor(workers, initializer=_init_worker, initargs=(shared,)) as pool:
            results = list(pool.map(_bnb_task, tasks))
    best = max(r[0] for r in results)
    found: list[Graph] = []
    complete = True
    for b, sols, done, st in results:
        complete &= done
        for k in stats:
            stats[k] += getattr(st, k)
        found.extend(Graph(n, s) for s in sols if sum(r.bit_count() for r in s) // 2 == best)
    if best == lower and seed is not None and not found:
        found = [seed]
    return best, found, complete, stats


# ---------------------------------------------------------------- public API


def _seed(n: int, p: int, cfg: SearchConfig) -> tuple[int, Graph | None]:
    if cfg.seed_graph is not None:
        if cfg.seed_graph.order != n or not is_book_free(cfg.seed_graph, p):
            raise ValueError("seed graph must be B_p-free of order n")
        return cfg.seed_lower_bound, cfg.seed_graph
    if cfg.use_catalog_seed:
        try:
            w = catalog.witness_graph(n, p)
        except GraphError:
            w = None
        if w is not None and w.order == n and is_book_free(w, p):
            return w.size, w
    return -1, None


def exact_turan(n: int, p: int, cfg: SearchConfig | None = None) -> TuranRecord:
    cfg = cfg or SearchConfig()
    if p < 1 or n < 1:
        raise ValueError("n and p must be positive")
    if n > gc.MAX_ORDER:
        raise OrderTooLarge(f"order {n} exceeds {gc.MAX_ORDER}")
    start = time.monotonic()
    deadline = None if cfg.budget_seconds is None else start + cfg.budget_seconds
    if cfg.mode is Mode.FullEnumeration:
        best, graphs, complete, stats = _full_enumeration(n, p, deadline)
    else:
        lower, seed = _seed(n, p, cfg)
        best, graphs, complete, stats = _branch_and_bound(
            n, p, lower, seed, cfg.collect_extremal, deadline, cfg.worker_count
        )
        if best < 0:
            # nothing beat an absent seed: only possible for n == 1
            best, graphs = 0, [gc.empty(n)]
    lines = _canonical_lines(graphs)
    if not cfg.collect_extremal:
        lines = lines[:1]
    stats["seconds"] = round(time.monotonic() - start, 3)
    stats["mode"] = cfg.mode.value
    rec = TuranRecord(n, p, best, lines, len(lines), complete, stats)
    log.info("ex(%d, B_%d) = %d, %d extremal, complete=%s, %s", n, p, best, len(lines), complete, stats)
    return rec


def enumerate_extremal(n: int, p: int, cfg: SearchConfig | None = None) -> list[Graph]:
    cfg = cfg or SearchConfig()
    if not cfg.collect_extremal:
        raise ValueError("enumeration needs collect_extremal")
    rec = exact_turan(n, p, cfg)
    if not rec.complete:
        raise BudgetExhausted(f"budget ran out before ex({n}, B_{p}) was settled")
    return rec.graphs()


def conjecture_check(n: int, cfg: SearchConfig | None = None) -> bool:
    """Whether ex(n, B_ceil(n/6)) <= floor(n^2 / 4)."""
    p = -(-n // 6)
    rec = exact_turan(n, p, cfg or SearchConfig(collect_extremal=False))
    if not rec.complete:
        raise BudgetExhausted(f"budget ran out at n = {n}")
    return rec.ex <= n * n // 4


@dataclass
class CrossReport:
    n: int
    p: int
    ex: int
    count: int
    bnb_seconds: float
    enum_seconds: float


def cross_validate(n: int, p: int) -> CrossReport:
    a = exact_turan(n, p, SearchConfig(Mode.BranchAndBound))
    b = exact_turan(n, p, SearchConfig(Mode.FullEnumeration))
    if a.ex != b.ex or a.extremal != b.extremal:
        raise Mismatch(f"ex({n}, B_{p}): branch and bound {a.ex}/{a.count} vs enumeration {b.ex}/{b.count}")
    return CrossReport(n, p, a.ex, a.count, a.stats["seconds"], b.stats["seconds"])


# ---------------------------------------------------------------- results cache


def cache_dir() -> Path:
    return Path(os.environ.get(CACHE_ENV, DEFAULT_CACHE))


def record_path(n: int, p: int, root: Path | None = None) -> Path:
    return (root or cache_dir()) / f"ex_{n}_{p}.txt"


def format_record(rec: TuranRecord) -> str:
    return "\n".join([rec.header(), *rec.extremal]) + "\n"


def parse_record(text: str) -> TuranRecord:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty record")
    n, p, ex, count, done = lines[0].split()
    if done not in ("true", "false"):
        raise ValueError(f"bad completeness flag {done!r}")
    rec = TuranRecord(int(n), int(p), int(ex), lines[1:], int(count), done == "true")
    if rec.count != len(rec.extremal):
        raise ValueError("record count disagrees with its graph lines")
    return rec


def save_record(rec: TuranRecord, root: Path | None = None) -> Path:
    path = record_path(rec.n, rec.p, root)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_record(rec))
    return path


def load_record(n: int, p: int, root: Path | None = None) -> TuranRecord | None:
    path = record_path(n, p, root)
    if not path.exists():
        return None
    return parse_record(path.read_text())
