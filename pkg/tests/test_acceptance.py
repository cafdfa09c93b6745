"""Acceptance suite: one test per criterion, each printing a verdict line.

Run with ``pytest tests/test_acceptance.py -v -s``.  Every comparison is
exact (integers / rationals); the only tolerances are the stated wall
clock budgets.  Criteria 4, 8 and 10 share the two full corpus runs.
"""

import time
from fractions import Fraction

import pytest

import oracle
from growthlab import (alternating, character_table, class_count, checks,
                       deleted_semidirect, is_monomial, subgroup_classes,
                       symmetric, zeta)
from growthlab.chartab import constituents
from growthlab.cli import run_verify
from growthlab.corpus import default_corpus
from growthlab.growth import ab_growth, abelianization_order
from growthlab.report import FAIL, PASS, emit_report

INEQUALITY_SUITE = [
    "eqLM", "ab-hered-1", "ab-hered-2", "ab-quotient", "bab-chain",
    "center-remark", "ext-lemma", "rep-hered-1", "rep-hered-2",
    "rel-hered-ab", "rel-hered-rep", "rel-base", "rel-reduce",
    "weak-abnormal",
]


def _verdict(num, ok, detail, elapsed, budget):
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {num}: {status} ({detail}) "
          f"[{elapsed:.1f}s, budget {budget}s]")
    assert ok, f"criterion {num}: {detail}"
    assert elapsed < budget, f"criterion {num} exceeded budget: {elapsed:.1f}s"


@pytest.fixture(scope="module")
def full_runs():
    """Two independent full corpus runs (criteria 4, 8, 10)."""
    t0 = time.monotonic()
    first = run_verify(None, None)
    t_first = time.monotonic() - t0
    second = run_verify(None, None)
    t_both = time.monotonic() - t0
    return first, second, t_first, t_both


def test_criterion_1_oracle_equivalence():
    t0 = time.monotonic()
    small = [e for e in default_corpus() if e.group().order() <= 200]
    assert len(small) >= 15
    for e in small:
        G = e.group()
        gens = [g.images for g in G.generators]
        subs = oracle.all_subgroups(G.degree, gens)
        classes = oracle.group_subgroups_into_classes(G.degree, gens, subs)
        lat = subgroup_classes(G, G.order())
        assert lat.subgroup_count_total() == len(subs), str(e.spec)
        assert sorted((c.order, c.class_length) for c in lat.classes) == \
            sorted((len(next(iter(cl))), len(cl)) for cl in classes), str(e.spec)
        brute = oracle.ab_growth(G.degree, gens, G.order())
        table = ab_growth(G)
        assert all(table(n) == brute[n] for n in brute), str(e.spec)
    _verdict(1, True, f"{len(small)} groups of order <= 200 vs brute force",
             time.monotonic() - t0, 60)


def test_criterion_2_dihedral_example():
    t0 = time.monotonic()
    from growthlab import dihedral
    from growthlab.growth import ab_growth_rel
    for p in (3, 5, 7, 11, 13):
        G = dihedral(p)
        Y = G.point_stabilizer(0)
        t = ab_growth_rel(G, Y)
        assert all(t(n) == 1 for n in range(1, 2 * p + 1)), p
        deg2 = sum(1 for d, _ in constituents(G, Y) if d == 2)
        assert deg2 == (p - 1) // 2, p
    _verdict(2, True, "ab_n(D_2p, Y) = 1 and (p-1)/2 degree-2 constituents",
             time.monotonic() - t0, 5)


def test_criterion_3_symmetric_example():
    t0 = time.monotonic()
    from growthlab.growth import ab_growth_rel
    from growthlab.chartab import rep_growth_rel
    for k in (4, 5, 6):
        G = symmetric(k)
        Y = G.point_stabilizer(0)
        t = ab_growth_rel(G, Y)
        assert all(t(n) == 1 for n in checks.tested_ns(G.order())), k
        assert rep_growth_rel(G, Y)(G.order()) <= 2, k
        assert constituents(G, Y) == [(1, 1), (k - 1, 1)], k
    _verdict(3, True, "ab = 1, Rep <= 2, degrees {1, k-1} for k in 4..6",
             time.monotonic() - t0, 30)


def test_criterion_4_inequality_suite(full_runs):
    report, _, t_first, _ = full_runs
    rows = [r for r in report.results if r.check_id in INEQUALITY_SUITE]
    entries = len(default_corpus())
    bad = [r for r in rows if r.status == FAIL]
    covered = {r.check_id for r in rows}
    ok = not bad and covered == set(INEQUALITY_SUITE) and len(rows) >= entries
    _verdict(4, ok, f"{len(rows)} rows over {entries} entries, "
             f"{len(bad)} failures", t_first, 900)


def test_criterion_5_character_table_integrity():
    t0 = time.monotonic()
    for e in default_corpus():
        G = e.group()
        tab = character_table(G)
        assert tab.sum_of_squares() == G.order(), str(e.spec)
        assert tab.check_orthogonality(), str(e.spec)
    assert class_count(symmetric(5)) == 7
    assert sorted(character_table(alternating(5)).degrees) == [1, 3, 3, 4, 5]
    _verdict(5, True, "orthogonality + sum of squares exact, k(S5)=7, "
             "A5 degrees {1,3,3,4,5}", time.monotonic() - t0, 60)


def test_criterion_6_zeta_data():
    t0 = time.monotonic()
    from growthlab import config
    values = [zeta(alternating(k), 3, cap=config.CLASS_ITER_CAP)
              for k in range(5, 10)]
    assert values[0] == Fraction(237103, 216000)
    assert all(a > b for a, b in zip(values, values[1:]))
    assert all(Fraction(1) < v < Fraction(6, 5) for v in values)
    _verdict(6, True, "zeta_Alt(k)(3) exact, strictly decreasing, in (1, 1.2)",
             time.monotonic() - t0, 120)


def test_criterion_7_construction_facts():
    t0 = time.monotonic()
    G = deleted_semidirect(3, 5)
    assert G.order() == 4860
    assert G.is_perfect()
    V = G.normal_closure([G.generators[0]])
    assert G.order() // V.order() == 60
    assert abelianization_order(V) == 81 and V.order() == 81
    _verdict(7, True, "deleted(3,5): order 4860, perfect, |G:V|=60, |V/V'|=81",
             time.monotonic() - t0, 30)


def test_criterion_8_lower_bound(full_runs):
    report, _, t_first, _ = full_runs
    rows = [r for r in report.results if r.check_id == "lb-abelian"]
    bad = [r for r in rows if r.status == FAIL]
    big = sum(1 for e in default_corpus() if e.group().order() > 4)
    ok = not bad and len([r for r in rows if r.status == PASS]) >= big
    _verdict(8, ok, f"largest abelian section >= |G|^(1/(32 log2 log2 |G|)) "
             f"on {big} groups", 0.0, 900)


def test_criterion_9_monomial():
    t0 = time.monotonic()
    assert is_monomial(symmetric(4)) is True
    assert is_monomial(alternating(5)) is False
    from growthlab.growth import sub_growth
    from growthlab.chartab import rep_growth
    monomial_count = 0
    for e in default_corpus():
        G = e.group()
        if not is_monomial(G):
            continue
        monomial_count += 1
        rep, sub, ab = rep_growth(G), sub_growth(G), ab_growth(G)
        for n in checks.tested_ns(G.order()):
            assert rep(n) <= sub(n) * ab(n), (str(e.spec), n)
    _verdict(9, True, f"S4/A5 classified; bound holds on {monomial_count} "
             "monomial groups", time.monotonic() - t0, 300)


def test_criterion_10_determinism(full_runs):
    first, second, t_first, t_both = full_runs
    ok = True
    for fmt in ("csv", "json"):
        a = emit_report(first.strip_timings(), fmt)
        b = emit_report(second.strip_timings(), fmt)
        ok = ok and a == b
    _verdict(10, ok, "two full corpus runs byte-identical (timing excluded)",
             t_both, 1800)
