"""Acceptance suite: one test per criterion, each printing a pass/fail line.

All checks are exact (finite-field arithmetic has no tolerances); the stated
wall-time budgets are asserted as upper bounds.  Criterion 14 aggregates the
registry through the CLI entry point.
"""

import time

from gapn.cli import main
from gapn.search import reproduce


def _criterion(num, desc, ok, elapsed_ms=None, limit_s=None, extra=""):
    status = "PASS" if ok else "FAIL"
    tail = f" [{extra}]" if extra else ""
    if elapsed_ms is not None:
        tail += f" ({elapsed_ms} ms)"
    print(f"{status} criterion {num:>2}: {desc}{tail}")
    assert ok, f"criterion {num} failed: {desc}"
    if limit_s is not None and elapsed_ms is not None:
        assert elapsed_ms < limit_s * 1000, f"criterion {num} exceeded {limit_s}s"


def _run(num, desc, claim, limit_s, check=None):
    report = reproduce(claim)
    ok = report.passed
    extra = ""
    if check is not None:
        ok2, extra = check(report.details)
        ok = ok and ok2
    _criterion(num, desc, ok, report.elapsed_ms, limit_s, extra)
    return report


def test_criterion_01_gold_monomials():
    _run(
        1,
        "X^(2p-1) GAPN over GF(p^2) for p in {3,5,7,11,13}",
        "gold-monomials",
        5 * 1.0,
        check=lambda d: (len(d) == 5 and all(v["worst_fiber"] == int(k[2:]) for k, v in d.items()), ""),
    )


def test_criterion_02_inverse_monomials():
    _run(
        2,
        "X^(q-2) GAPN over GF(p^2) with degree 2(p-1)-1 for p in {3,5,7,11}",
        "inverse-monomials",
        4 * 1.0,
        check=lambda d: (all(v["degree"] == 2 * (int(k[2:]) - 1) - 1 for k, v in d.items()), ""),
    )


def test_criterion_03_monomial_criteria_soundness():
    _run(
        3,
        "monomial criteria sound vs brute force, p in {3,5,7}, n in {2,3}",
        "monomial-criteria-soundness",
        120,
        check=lambda d: (d["combos"] > 0, f"{d['combos']} parameter combos"),
    )


def test_criterion_04_odd_binomial_sweep():
    _run(
        4,
        "odd-binomial family GAPN with every odd degree in [p, 2p-3], p in {5,7,11}",
        "odd-binomial-degrees",
        120,
        check=lambda d: (
            all(set(range(p, 2 * p - 2, 2)) <= set(d[f"p={p}"]["degrees"]) for p in (5, 7, 11)),
            "",
        ),
    )


def test_criterion_05_even_binomial_sweep():
    _run(
        5,
        "even-binomial family GAPN with every even degree in [p+1, 2p-2], p in {5,11,13}",
        "even-binomial-degrees",
        300,
        check=lambda d: (
            all(d[f"p={p}"]["degrees"] == list(range(p + 1, 2 * p - 1, 2)) for p in (5, 11, 13)),
            "",
        ),
    )


def test_criterion_06_trinomials_at_mersenne_prime():
    _run(
        6,
        "trinomials over GF(49) reach even degrees 8, 10, 12",
        "p7-trinomial-even-degrees",
        30,
        check=lambda d: (sorted(d["degrees"].values()) == [8, 10, 12], f"u={d['u']}"),
    )


def test_criterion_07_p7_binomial_search():
    _run(
        7,
        "exhaustive GF(49) binomial search: degrees 8 and 12 empty, degree 10 nonempty",
        "p7-binomial-even-gaps",
        120,
        check=lambda d: (
            d["examined"] == 54144 and d["hits_degree_8"] == 0 and d["hits_degree_12"] == 0
            and d["hits_degree_10"] >= 1,
            f"degree-10 count {d['hits_degree_10']}",
        ),
    )


def test_criterion_08_p3_even_degree_search():
    _run(
        8,
        "GF(9) digit-sum-reduced search: 648 candidates, no degree-4 GAPN function",
        "p3-no-even-degree",
        10,
        check=lambda d: (
            d["reduction_checks_passed"] == 1000 and d["checked"] == 648
            and d["hits_degree_4"] == 0,
            "",
        ),
    )


def test_criterion_09_fixtures():
    r1 = reproduce("p7-binomial-beyond-criteria")
    r2 = reproduce("p11-mixed-binomial")
    ok = (
        r1.passed
        and r2.passed
        and r1.details["reduction_vanishes_at"] is not None
        and r2.details["binomial_gapn"]
        and not r2.details["term_32_gapn"]
        and not r2.details["term_65_gapn"]
    )
    _criterion(
        9,
        "fixtures: GF(49) binomial GAPN despite degenerate reduction; "
        "GF(121) binomial GAPN with non-GAPN terms",
        ok,
        r1.elapsed_ms + r2.elapsed_ms,
        10,
    )


def test_criterion_10_power_identity():
    _run(
        10,
        "derivative conjugation identity for all d in [0, p^2-1], p in {3,5,7}",
        "derivative-power-identity",
        10,
        check=lambda d: (d == {"p=3": 9, "p=5": 25, "p=7": 49}, ""),
    )


def test_criterion_11_condition_equivalence():
    _run(
        11,
        "closed-form p-to-1 condition matches actual derivative "
        "(p=5 exhaustive, p=7 sampled)",
        "derivative-condition-equivalence",
        60,
        check=lambda d: (
            d["exhaustive_triples"] == 24 ** 3 and d["sampled_triples"] == 2000,
            "",
        ),
    )


def test_criterion_12_degree15_gap_f121():
    _run(
        12,
        "no GAPN monomial of algebraic degree 15 over GF(121)",
        "p11-monomial-deg15-none",
        30,
        check=lambda d: (
            d["exponents"] == [65, 75, 85, 95, 105, 115] and d["gapn_found"] == [],
            f"{len(d['exponents'])} exponents",
        ),
    )


def test_criterion_13_conjugate_premise_obstruction():
    _run(
        13,
        "GF(27): conjugate-premise monomials never GAPN; gold fails the premise",
        "conjugate-premise-obstruction",
        10,
        check=lambda d: (
            d["monomials_with_premise"] > 0 and not d["gold_premise"] and d["gold_gapn"],
            f"{d['monomials_with_premise']} premise monomials",
        ),
    )


def test_criterion_14_reproduce_all():
    t0 = time.perf_counter()
    rc = main(["reproduce", "--claim", "all", "--threads", "1"])
    elapsed = time.perf_counter() - t0
    _criterion(
        14,
        "CLI 'reproduce --claim all' exits 0",
        rc == 0,
        int(elapsed * 1000),
        15 * 60,
    )
