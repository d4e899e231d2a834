"""Enumerate every graph with each gadget's profile and report which pass the plug-in test."""
import argparse
import time

from bookturan import catalog
from bookturan import graph as gc


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("ids", nargs="*", default=[g.value for g in catalog.GadgetId])
    args = ap.parse_args()
    for gid in args.ids:
        t0 = time.monotonic()
        r = catalog.gadget_oracle(gid)
        print(f"{gid}: {r.profile_classes} profile classes, {len(r.passing)} pass, "
              f"embedded passes={r.embedded_passes} ({time.monotonic() - t0:.1f}s)")
        mine = gc.canonical_code(catalog.gadget(gid))
        for g in r.passing:
            tag = "  <- embedded" if gc.canonical_code(g) == mine else ""
            print(f"   {gc.graph6_encode(g)}{tag}")

if __name__ == "__main__":
    main()
