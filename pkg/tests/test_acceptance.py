"""Acceptance criteria, one test (and one printed line) per criterion.

Run with ``pytest -v -s tests/test_acceptance.py`` to see the report lines.
Criterion 5 is a multi-hour stretch run; set ``BOOKTURAN_STRETCH=1`` (and
optionally ``BOOKTURAN_STRETCH_BUDGET`` in seconds) to include it.
"""
import os
import random
import time

import pytest

from bookturan import catalog, search, structure
from bookturan import graph as gc
from bookturan.books import cobook_criterion, is_book_free
from bookturan.search import Mode, SearchConfig, exact_turan

from conftest import random_graph, random_perm

ENUM = SearchConfig(Mode.FullEnumeration)


def report(k, ok, detail, t0):
    print(f"\ncriterion {k}: {'PASS' if ok else 'FAIL'} ({time.monotonic() - t0:.1f}s) {detail}")


def test_criterion_1_formula_grid():
    t0 = time.monotonic()
    bad, cells = [], 0
    for n in range(4, 10):
        for p in range(1, n - 1):
            v = catalog.turan_formula(n, p)
            if not v.known:
                continue
            cells += 1
            ex = exact_turan(n, p, ENUM).ex
            if ex != v.value:
                bad.append((n, p, ex, v.value))
    ok = not bad and time.monotonic() - t0 < 15 * 60
    report(1, ok, f"{cells} cells, mismatches {bad}", t0)
    assert ok


def test_criterion_2_published_counts():
    t0 = time.monotonic()
    want = {(8, 3): (18, 2), (9, 3): (21, 16), (5, 1): (6, 1), (6, 1): (9, 1), (7, 2): (12, 1)}
    got = {}
    for (n, p) in want:
        rec = exact_turan(n, p)
        got[n, p] = (rec.ex, rec.count)
    (k33,) = exact_turan(6, 1).graphs()
    (k34,) = exact_turan(7, 2).graphs()
    shapes = gc.is_isomorphic(k33, gc.complete_bipartite(3, 3)) and gc.is_isomorphic(k34, gc.complete_bipartite(3, 4))
    ok = got == want and shapes
    report(2, ok, f"{got}", t0)
    assert ok


FAMILY_CELLS = (
    [(p + 2, p) for p in range(2, 8)]
    + [(p + 3, p) for p in range(2, 7)]
    + [(p + 4, p) for p in (3, 4, 5)]
    + [(p + 5, p) for p in (4,)]
)


def test_criterion_3_characterizations():
    t0 = time.monotonic()
    bad = []
    for n, p in FAMILY_CELLS:
        fam = catalog.extremal_family(n, p)
        got = search.enumerate_extremal(n, p, ENUM)
        if sorted(fam.codes()) != sorted(map(gc.canonical_code, got)):
            bad.append((n, p))
    ok = not bad
    report(3, ok, f"{len(FAMILY_CELLS)} families, mismatches {bad}", t0)
    assert ok


def test_criterion_4_order_ten():
    t0 = time.monotonic()
    rec = exact_turan(10, 5, SearchConfig(budget_seconds=30 * 60))
    K3, K4 = gc.complete(3), gc.complete(4)
    want = {
        gc.canonical_code(gc.complement(gc.disjoint_union(K3, K3, K4))),
        gc.canonical_code(gc.complement(catalog.gadget("Q"))),
    }
    got = {gc.canonical_code(g) for g in rec.graphs()}
    ok = rec.complete and rec.ex == 33 and rec.count == 2 and got == want
    report(4, ok, f"ex={rec.ex} count={rec.count} complete={rec.complete} nodes={rec.stats['nodes']}", t0)
    assert ok


@pytest.mark.stretch
@pytest.mark.skipif(not os.environ.get("BOOKTURAN_STRETCH"), reason="multi-hour stretch run, set BOOKTURAN_STRETCH=1")
def test_criterion_5_stretch_12_6():
    t0 = time.monotonic()
    budget = float(os.environ.get("BOOKTURAN_STRETCH_BUDGET", 4 * 3600))
    rec = exact_turan(12, 6, SearchConfig(budget_seconds=budget))
    certified = rec.ex >= 48 and any(g.size >= 48 and is_book_free(g, 6) for g in rec.graphs())
    ok = certified and (not rec.complete or (rec.ex, rec.count) == (48, 20))
    report(5, ok, f"ex={rec.ex} count={rec.count} complete={rec.complete}", t0)
    assert ok


def test_criterion_6_gadget_oracle():
    t0 = time.monotonic()
    reports = {g: catalog.gadget_oracle(g) for g in catalog.GadgetId}
    counts = {g.value: (r.profile_classes, len(r.passing)) for g, r in reports.items()}
    F, Y = catalog.GadgetId.F, catalog.GadgetId.Y
    checks = {
        "F unique profile match": reports[F].profile_classes == 1 and reports[F].embedded_passes,
        "Y unique plug-in pass": reports[Y].unique,
        **{f"{g} embedded passes": catalog.validate_gadget(g) and reports[catalog.GadgetId(g)].embedded_passes for g in "WQS"},
    }
    ok = all(checks.values()) and time.monotonic() - t0 < 600
    failed = [k for k, v in checks.items() if not v]
    report(6, ok, f"(profile, passing) per gadget {counts}; failed {failed}", t0)
    assert ok, failed


def test_criterion_7_property_suites():
    t0 = time.monotonic()
    rng = random.Random(77)
    fails = {}

    def tally(name, cond):
        fails[name] = fails.get(name, 0) + (not cond)

    for _ in range(10_000):
        n = rng.randint(5, 12)
        g = random_graph(rng, n)
        p = rng.randint(1, n - 2)
        tally("lemma1", is_book_free(g, p) == cobook_criterion(g, p))
    for _ in range(200):
        g = random_graph(rng, rng.randint(0, 12))
        tally("involution", gc.complement(gc.complement(g)) == g)
        tally("graph6", gc.graph6_decode(gc.graph6_encode(g)) == g)
        code = gc.canonical_code(g)
        for _ in range(100):
            tally("canonical", gc.canonical_code(g.relabel(random_perm(rng, g.order))) == code)
    for _ in range(500):
        p = rng.randint(1, 7)
        g = structure.forced_cycle_instance(rng, p)
        tally("lemma2", structure.lemma2_implies_book(g, p) and not is_book_free(g, p))
    for p in range(4, 11):
        expect = structure.DegreePattern.TwoRegular if p % 3 == 1 else structure.DegreePattern.FourThrees
        for g in catalog.extremal_family(p + 5, p).graphs:
            gb = gc.complement(g)
            tally("lemma9", structure.lemma9_holds(gb, p))
            tally("lemma10", structure.lemma10_holds(gb, p))
            tally("lemma11", structure.lemma11_degree_check(gb, p) is expect)
    ok = not any(fails.values())
    report(7, ok, f"failures {fails}", t0)
    assert ok


def test_criterion_8_conjecture_spot_check():
    t0 = time.monotonic()
    violations = [n for n in range(3, 11) if not search.conjecture_check(n)]
    ok = not violations
    report(8, ok, f"n=3..10, violations {violations}", t0)
    assert ok
