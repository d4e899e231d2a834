"""Tabulate ex(n, B_p) by search next to the closed form, caching each record.

    python scripts/exact_table.py --n 4 10
    python scripts/exact_table.py --n 12 --p 6 --budget 14400    # long run
"""
import argparse
import logging

from bookturan import catalog, search


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--n", type=int, nargs="+", required=True, help="order, or an inclusive range lo hi")
    ap.add_argument("--p", type=int, nargs="*", help="default: 1..n-2")
    ap.add_argument("--budget", type=float, default=None)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--enumerate", action="store_true", help="also print extremal graph6 lines")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO)

    lo, hi = (args.n[0], args.n[-1])
    print(f"{'n':>3} {'p':>3} {'ex':>5} {'count':>6} {'formula':>8}  complete  seconds")
    for n in range(lo, hi + 1):
        for p in args.p or range(1, n - 1):
            rec = search.load_record(n, p)
            if rec is None or not rec.complete:
                cfg = search.SearchConfig(budget_seconds=args.budget, worker_count=args.workers)
                rec = search.exact_turan(n, p, cfg)
                search.save_record(rec)
            v = catalog.turan_formula(n, p).value
            secs = rec.stats.get("seconds", "cached")
            print(f"{n:>3} {p:>3} {rec.ex:>5} {rec.count:>6} {str(v):>8}  {str(rec.complete):8}  {secs}", flush=True)
            if args.enumerate:
                for line in rec.extremal:
                    print("   ", line)


if __name__ == "__main__":
    main()
