"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line.

All expected values are exact-match; stated runtime budgets are asserted.
Criterion 5b records the one constant this library cannot reproduce: the
published sporadic count for the d = 2, n = 4 Fano enumeration (see the
assertion message and the decisions ledger for the full analysis).
"""

import time

from glci import suite
from glci.classify import enumerate_weight_systems
from glci.coxeter import IntPolynomial, coxeter_polynomial
from glci.grading import Trichotomy, WeightSystem

from test_matfac import expected_4x4

import glci.matfac as matfac


def _report(number: str, ok: bool, detail: str):
    print(f"ACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} - {detail}")


def _all_ok(results):
    bad = [r for r in results if not r.ok]
    return not bad, bad


def test_criterion_01_coxeter_fixture():
    t0 = time.perf_counter()
    expected = (
        IntPolynomial([1, -1]) ** 3
        * IntPolynomial([1, 1]) ** 2
        * IntPolynomial([1, 1, 1]) ** 2
        * IntPolynomial([1, -1, 1])
    )
    chi = coxeter_polynomial(WeightSystem(2, (2, 3)))
    elapsed = time.perf_counter() - t0
    ok = chi == expected and chi.degree == 11 and elapsed < 1.0
    _report("1", ok, f"coxeter fixture (d=2, weights 2,3), {elapsed:.3f}s")
    assert chi == expected
    assert chi.degree == 11
    assert elapsed < 1.0


def test_criterion_02_cross_route_coxeter():
    t0 = time.perf_counter()
    results = suite.battery_coxeter_cross_route()
    elapsed = time.perf_counter() - t0
    ok, bad = _all_ok(results)
    _report("2", ok and elapsed < 60, f"{len(results)} systems cross-checked, {elapsed:.1f}s")
    assert ok, bad[:3]
    assert elapsed < 60


def test_criterion_03_rank_identities():
    results = suite.battery_rank_identities()
    ok, bad = _all_ok(results)
    _report("3", ok, f"{len(results)} systems")
    assert ok, bad[:3]


def test_criterion_04_matrix_factorizations():
    t0 = time.perf_counter()
    results = suite.battery_matrix_factorizations(suite.MF_FIXTURES)
    ok, bad = _all_ok(results)
    # entrywise match with the printed 4x4 matrices in the d = 1 case
    printed_ok = True
    ws = WeightSystem(1, (2, 3, 5))
    for index in matfac.mf_enumerate(ws):
        pair = matfac.mf_build(ws, index)
        m, n = expected_4x4(ws.weights, index.ell)
        if [list(r) for r in pair.m_rows] != m or [list(r) for r in pair.n_rows] != n:
            printed_ok = False
    elapsed = time.perf_counter() - t0
    _report(
        "4",
        ok and printed_ok and elapsed < 30,
        f"5 fixture systems verified, printed 4x4 match: {printed_ok}, {elapsed:.1f}s",
    )
    assert ok, bad[:3]
    assert printed_ok
    assert elapsed < 30


def test_criterion_05a_classification_scan_and_families():
    t0 = time.perf_counter()
    scan = suite.battery_cm_finiteness_scan()
    scan_ok, bad = _all_ok(scan)
    fano = enumerate_weight_systems(2, 4, Trichotomy.FANO)
    families_ok = len(fano.infinite_families) == 7
    cy_counts = {
        n: len(enumerate_weight_systems(2, n, Trichotomy.CALABI_YAU).sporadic)
        for n in (4, 5, 6)
    }
    cy_ok = cy_counts == {4: 14, 5: 3, 6: 1}
    elapsed = time.perf_counter() - t0
    ok = scan_ok and families_ok and cy_ok and elapsed < 120
    _report(
        "5a",
        ok,
        f"finite-type scan, 7 families: {families_ok}, CY totals {cy_counts}, {elapsed:.1f}s",
    )
    assert scan_ok, bad[:3]
    assert families_ok
    assert cy_ok
    assert elapsed < 120


def test_criterion_05b_sporadic_count_as_published():
    fano = enumerate_weight_systems(2, 4, Trichotomy.FANO)
    count = len(fano.sporadic)
    # Cross-check the computed enumeration against an independent bounded scan
    # before comparing with the published constant.
    oracle, complete = suite.boxed_enumeration_oracle(2, 4, Trichotomy.FANO, box=45)
    assert complete and set(fano.sporadic) == oracle
    _report("5b", count == 110, f"sporadic count {count}, published value 110")
    assert count == 110, (
        f"the enumeration yields {count} sporadic Fano tuples, not 110: the "
        "published table has range (2,5,6,p), 7<=p<=9 where only p in {6,7} "
        "satisfies 1/2+1/5+1/6+1/p > 1, and omits (3,4,4,p) for p in {4,5}; "
        "an independent box scan confirms all 112 tuples"
    )


def test_criterion_06_global_dimension_oracle():
    t0 = time.perf_counter()
    results = suite.battery_global_dimension(suite.GLDIM_FIXTURES)
    elapsed = time.perf_counter() - t0
    ok, bad = _all_ok(results)
    _report("6", ok and elapsed < 60, f"4 oracle cases, {elapsed:.1f}s")
    assert ok, bad[:3]
    assert elapsed < 60


def test_criterion_07_atilde_cut():
    results = suite.battery_atilde(suite.ATILDE_FIXTURES)
    ok, bad = _all_ok(results)
    _report("7", ok, f"{len(results)} presentations verified")
    assert ok, bad[:3]


def test_criterion_08_slices():
    results = suite.battery_slices(suite.SLICE_FIXTURES)
    ok, bad = _all_ok(results)
    _report("8", ok, f"{len(results)} slices verified")
    assert ok, bad[:3]


def test_criterion_09_orlov_rank_identity():
    results = suite.battery_orlov()
    ok, bad = _all_ok(results)
    _report("9", ok, f"{len(results)} systems")
    assert ok, bad[:3]


def test_criterion_10_property_suites():
    batteries = [
        suite.battery_group_laws(),
        suite.battery_piece_dims(),
        suite.battery_phi_telescoping(),
        suite.battery_coset_structure(),
    ]
    ok = True
    details = []
    for results in batteries:
        bok, bad = _all_ok(results)
        ok = ok and bok
        details.append(f"{results[0].battery}: {sum(r.ok for r in results)}/{len(results)}")
        assert bok, bad[:3]
    _report("10", ok, ", ".join(details))
