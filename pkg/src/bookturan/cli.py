"""``bookturan`` command line.

Graphs travel as graph6 lines (argument, file, or stdin).  Exit codes:
0 ok, 1 check failed, 2 malformed input, 3 no characterization or
construction, 4 budget exhausted, 5 corrupted gadget data.
"""
from __future__ import annotations

import argparse
import logging
import random
import sys
import time
from pathlib import Path

from . import catalog, search, structure
from . import graph as gc
from .books import NoEdges, is_book_free, max_book_witness
from .graph import MalformedGraph6

EXIT_MALFORMED = 2
EXIT_UNCHARACTERIZED = 3
EXIT_BUDGET = 4
EXIT_GADGET = 5


def _read_graphs(source: str | None) -> list[gc.Graph]:
    if source is None or source == "-":
        text = sys.stdin.read()
    elif Path(source).is_file():
        text = Path(source).read_text()
    else:
        text = source
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise MalformedGraph6("no graph6 input")
    return [gc.graph6_decode(ln) for ln in lines]


def _witness_text(g: gc.Graph) -> str:
    try:
        w = max_book_witness(g)
    except NoEdges:
        return "bk=0 edge=none pages=0"
    x, y = w.edge
    return f"bk={w.pages} edge=({x},{y}) pages={w.pages}"


def cmd_bk(args) -> int:
    for g in _read_graphs(args.input):
        print(_witness_text(g))
    return 0


def cmd_check(args) -> int:
    if args.p < 1:
        print("p must be positive", file=sys.stderr)
        return EXIT_MALFORMED
    status = 0
    for g in _read_graphs(args.input):
        if is_book_free(g, args.p):
            print("FREE")
        else:
            x, y = max_book_witness(g).edge
            print(f"CONTAINS edge=({x},{y})")
            status = 1
    return status


def cmd_formula(args) -> int:
    v = catalog.turan_formula(args.n, args.p)
    if not v.known:
        print("unknown")
    else:
        print(f"ex({args.n},B_{args.p})={v.value} [case: {v.case.name}]")
    return 0


def cmd_construct(args) -> int:
    try:
        if args.all:
            fam = catalog.extremal_family(args.n, args.p)
            if not fam.complete:
                raise catalog.NotCharacterized("family is not known to be complete")
            graphs = list(fam.graphs)
        else:
            graphs = [catalog.witness_graph(args.n, args.p)]
    except (catalog.NotCharacterized, catalog.NoConstruction) as e:
        print(e, file=sys.stderr)
        return EXIT_UNCHARACTERIZED
    for g in graphs:
        print(gc.graph6_encode(g))
    return 0


def cmd_exact(args) -> int:
    rec = None if args.force else search.load_record(args.n, args.p)
    if rec is None or not rec.complete:
        cfg = search.SearchConfig(budget_seconds=args.budget, worker_count=args.workers)
        rec = search.exact_turan(args.n, args.p, cfg)
        if rec.complete:
            search.save_record(rec)
        print(f"stats {rec.stats}", file=sys.stderr)
    print(f"ex={rec.ex} count={rec.count} complete={str(rec.complete).lower()}")
    if args.enumerate:
        for line in rec.extremal:
            print(line)
    if not rec.complete:
        print("budget exhausted; values above are a lower bound", file=sys.stderr)
        return EXIT_BUDGET
    return 0


def cmd_gadget(args) -> int:
    try:
        ok = catalog.validate_gadget(args.id)
    except Exception as e:  # unreadable data counts as corruption
        print(f"gadget data unreadable: {e}", file=sys.stderr)
        return EXIT_GADGET
    if not ok:
        print(f"gadget {args.id} failed validation", file=sys.stderr)
        return EXIT_GADGET
    print(gc.graph6_encode(catalog.gadget(args.id)))
    return 0


# ---------------------------------------------------------------- verify suites


def _formula_checks():
    for n in range(4, 10):
        for p in range(1, n - 1):
            v = catalog.turan_formula(n, p)
            if not v.known:
                continue
            rec = search.exact_turan(n, p, search.SearchConfig(search.Mode.FullEnumeration))
            yield f"ex({n},B_{p})={rec.ex} formula={v.value}", rec.ex == v.value


FAMILY_CELLS = (
    [(p + 2, p) for p in range(2, 8)]
    + [(p + 3, p) for p in range(2, 7)]
    + [(p + 4, p) for p in (3, 4, 5)]
    + [(p + 5, p) for p in (4,)]
)


def _family_checks():
    for n, p in FAMILY_CELLS:
        fam = catalog.extremal_family(n, p)
        got = search.enumerate_extremal(n, p, search.SearchConfig(search.Mode.FullEnumeration))
        same = sorted(fam.codes()) == sorted(gc.canonical_code(g) for g in got)
        yield f"family({n},{p}) catalog={len(fam)} search={len(got)}", same


def _gadget_checks():
    for gid in catalog.GadgetId:
        yield f"gadget {gid.value}", catalog.validate_gadget(gid)


def _lemma_checks():
    for p in range(4, 11):
        expect = structure.DegreePattern.TwoRegular if p % 3 == 1 else structure.DegreePattern.FourThrees
        for i, g in enumerate(catalog.extremal_family(p + 5, p).graphs):
            gb = gc.complement(g)
            ok = (
                structure.lemma9_holds(gb, p)
                and structure.lemma10_holds(gb, p)
                and structure.lemma11_degree_check(gb, p) is expect
            )
            yield f"lemmas p={p} graph={i}", ok
    rng = random.Random(2)
    bad = 0
    for _ in range(500):
        p = rng.randint(1, 7)
        g = structure.forced_cycle_instance(rng, p)
        if not structure.lemma2_implies_book(g, p) or is_book_free(g, p):
            bad += 1
    yield "forced cycle soundness (500 instances)", bad == 0


def _conjecture_checks():
    for n in range(3, 11):
        yield f"conjecture n={n}", search.conjecture_check(n)


SUITES = {
    "formulas": _formula_checks,
    "families": _family_checks,
    "gadgets": _gadget_checks,
    "lemmas": _lemma_checks,
    "conjecture": _conjecture_checks,
}


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    failed = 0
    for name in names:
        checks = SUITES[name]()
        while True:
            t0 = time.monotonic()
            try:
                label, ok = next(checks)
            except StopIteration:
                break
            failed += not ok
            print(f"{'PASS' if ok else 'FAIL'} {name}: {label} ({time.monotonic() - t0:.2f}s)", flush=True)
    return 1 if failed else 0


# ---------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bookturan", description="Book Turan numbers of small graphs.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("bk", help="book number with a witness edge")
    s.add_argument("input", nargs="?", help="graph6 line or file (default stdin)")
    s.set_defaults(func=cmd_bk)

    s = sub.add_parser("check", help="is the graph B_p-free")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("input", nargs="?")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("formula", help="closed-form ex(n, B_p)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--p", type=int, required=True)
    s.set_defaults(func=cmd_formula)

    s = sub.add_parser("construct", help="extremal construction(s)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--all", action="store_true")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("exact", help="ex(n, B_p) by search")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--enumerate", action="store_true")
    s.add_argument("--budget", type=float, default=None, help="soft wall-clock seconds")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--force", action="store_true", help="ignore the results cache")
    s.set_defaults(func=cmd_exact)

    s = sub.add_parser("gadget", help="print a validated gadget")
    s.add_argument("--id", required=True, choices=[g.value for g in catalog.GadgetId])
    s.set_defaults(func=cmd_gadget)

    s = sub.add_parser("verify", help="run a check suite")
    s.add_argument("--suite", default="all", choices=[*SUITES, "all"])
    s.set_defaults(func=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args)
    except MalformedGraph6 as e:
        print(f"malformed graph6: {e}", file=sys.stderr)
        return EXIT_MALFORMED
    except gc.GraphError as e:
        print(e, file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
