from fractions import Fraction

import pytest

from glci.classify import (
    DCMFiniteness,
    classification_report,
    cm_finite,
    d_cm_finite_sufficient,
    enumerate_weight_systems,
    frac_cy,
    gldim_canonical,
    knoerrer_partner,
    main2_slice,
    orlov_rank_delta,
    vb_finite,
)
from glci.grading import Trichotomy, WeightSystem, coset_key


def test_cm_finite_examples():
    assert cm_finite(WeightSystem(3, (2, 2, 2, 3, 5)))
    assert not cm_finite(WeightSystem(2, (3, 3, 3, 3)))
    assert cm_finite(WeightSystem(2, (2, 3)))
    assert cm_finite(WeightSystem(1, (2, 2, 7)))  # (2,...,2,p)
    assert cm_finite(WeightSystem(1, (2, 2, 2)))
    assert not cm_finite(WeightSystem(1, (2, 3, 7)))
    assert not cm_finite(WeightSystem(1, (2, 2, 2, 3)))  # n = d + 3
    # weight-1 entries are dropped before the membership test
    assert cm_finite(WeightSystem(1, (1, 2, 3, 5)))


def test_d_cm_finite_examples():
    suff = DCMFiniteness.SUFFICIENT_BY_HYPERSURFACE_LIST
    assert d_cm_finite_sufficient(WeightSystem(2, (2, 2, 7, 9))) == suff
    assert d_cm_finite_sufficient(WeightSystem(2, (3, 3, 3, 3))) == suff
    assert d_cm_finite_sufficient(WeightSystem(2, (2, 3, 7, 41))) == DCMFiniteness.UNKNOWN
    assert d_cm_finite_sufficient(WeightSystem(2, (2, 3))) == DCMFiniteness.UNKNOWN
    assert d_cm_finite_sufficient(WeightSystem(3, (2, 3, 4, 9, 11))) == suff


def test_vb_finite_examples():
    assert vb_finite(WeightSystem(1, (2, 3, 5)))
    assert not vb_finite(WeightSystem(2, (2, 2)))
    assert not vb_finite(WeightSystem(1, (2, 3, 7)))


def test_gldim_canonical_examples():
    assert gldim_canonical(WeightSystem(2, (2, 3))) == 2
    assert gldim_canonical(WeightSystem(2, (2, 2, 2, 2))) == 4
    assert gldim_canonical(WeightSystem(1, ())) == 1


def test_frac_cy_examples():
    data = frac_cy(WeightSystem(1, (2, 3, 6)))
    assert (data.m, data.l) == (6, 6) and data.reduced == 1
    data = frac_cy(WeightSystem(1, (2, 2, 2)))
    assert (data.m, data.l) == (0, 2) and data.reduced == 0
    assert frac_cy(WeightSystem(2, (2, 2, 2, 2, 2))).kind == "none"
    assert frac_cy(WeightSystem(2, (2, 3))).kind == "zero"
    data = frac_cy(WeightSystem(1, (2, 3, 5)))
    assert (data.m, data.l) == (28, 30) and data.reduced == Fraction(14, 15)


def test_enumerate_families():
    fano = enumerate_weight_systems(2, 4, Trichotomy.FANO)
    assert set(fano.infinite_families) == {
        (2, 2),
        (2, 3, 3),
        (2, 3, 4),
        (2, 3, 5),
        (2, 3, 6),
        (2, 4, 4),
        (3, 3, 3),
    }
    sporadic = set(fano.sporadic)
    assert all(len(t) == 4 for t in sporadic)
    assert (2, 3, 7, 41) in sporadic and (2, 3, 7, 42) not in sporadic
    assert (2, 4, 5, 19) in sporadic
    # every sporadic tuple really is Fano and really avoids all families
    for t in sporadic:
        assert sum(Fraction(1, p) for p in t) > 1
        assert t[:2] != (2, 2) and t[:3] not in fano.infinite_families


def test_enumerate_calabi_yau_lists():
    cy4 = enumerate_weight_systems(2, 4, Trichotomy.CALABI_YAU)
    assert cy4.infinite_families == ()
    assert set(cy4.sporadic) == {
        (2, 3, 7, 42),
        (2, 3, 8, 24),
        (2, 3, 9, 18),
        (2, 3, 10, 15),
        (2, 3, 12, 12),
        (2, 4, 5, 20),
        (2, 4, 6, 12),
        (2, 4, 8, 8),
        (2, 5, 5, 10),
        (2, 6, 6, 6),
        (3, 3, 4, 12),
        (3, 3, 6, 6),
        (3, 4, 4, 6),
        (4, 4, 4, 4),
    }
    cy5 = enumerate_weight_systems(2, 5, Trichotomy.CALABI_YAU)
    assert set(cy5.sporadic) == {(2, 2, 2, 3, 6), (2, 2, 2, 4, 4), (2, 2, 3, 3, 3)}
    cy6 = enumerate_weight_systems(2, 6, Trichotomy.CALABI_YAU)
    assert cy6.sporadic == ((2, 2, 2, 2, 2, 2),)


def test_enumerate_classical_line():
    fano = enumerate_weight_systems(1, 3, Trichotomy.FANO)
    assert set(fano.infinite_families) == {(2, 2)}
    assert set(fano.sporadic) == {(2, 3, 3), (2, 3, 4), (2, 3, 5)}
    cy = enumerate_weight_systems(1, 3, Trichotomy.CALABI_YAU)
    assert set(cy.sporadic) == {(2, 3, 6), (2, 4, 4), (3, 3, 3)}
    cy4 = enumerate_weight_systems(1, 4, Trichotomy.CALABI_YAU)
    assert set(cy4.sporadic) == {(2, 2, 2, 2)}


def test_enumerate_guards():
    with pytest.raises(ValueError):
        enumerate_weight_systems(2, 4, Trichotomy.ANTI_FANO)
    with pytest.raises(ValueError):
        enumerate_weight_systems(2, 9, Trichotomy.FANO)


def test_orlov_rank_delta_examples():
    assert orlov_rank_delta(WeightSystem(2, (2, 2, 3, 4))) == 28
    assert orlov_rank_delta(WeightSystem(2, (2,) * 6)) == 0
    assert orlov_rank_delta(WeightSystem(2, (2, 3))) == 11
    assert orlov_rank_delta(WeightSystem(1, (2, 3, 7))) == -1


def test_main2_slice_examples():
    data = main2_slice(WeightSystem(2, (2, 2, 3, 4)))
    assert data.report.size == 28 and data.report.ok
    data = main2_slice(WeightSystem(2, (2, 2, 2, 2)))
    assert data.report.size == 16 and data.report.ok
    data = main2_slice(WeightSystem(3, (2, 2, 2, 2, 2)))
    assert data.report.size == 48 and data.report.ok
    # representatives are pairwise distinct modulo omega
    ws = data.ws
    keys = {coset_key(ws, x) for x in data.elements}
    assert len(keys) == len(data.elements)


def test_main2_slice_low_dimensions():
    # odd-d branch at d = 1: the classical (2,2,p) line has 4 orbit classes
    # (|4p * delta(omega)| = 4 independently of p)
    for p in (3, 7):
        data = main2_slice(WeightSystem(1, (2, 2, p)))
        assert data.report.ok and data.report.size == 4
    # even-d branch above the fixtures
    data = main2_slice(WeightSystem(4, (2, 2, 2, 2, 2, 2)))
    assert data.report.ok and data.report.size == 128


def test_main2_slice_reorders_weights():
    data = main2_slice(WeightSystem(2, (3, 2, 4, 2)))
    assert data.ws.weights == (2, 2, 3, 4)
    assert data.report.ok


def test_main2_slice_precondition():
    with pytest.raises(ValueError):
        main2_slice(WeightSystem(2, (2, 3, 3, 4)))
    with pytest.raises(ValueError):
        main2_slice(WeightSystem(2, (2, 2, 3)))


def test_knoerrer_partner_examples():
    assert knoerrer_partner(WeightSystem(1, (2, 3, 3))).weights == (2, 2, 3, 3)
    assert knoerrer_partner(WeightSystem(1, (2, 2, 2))).weights == (2, 2, 2, 2)
    partner = knoerrer_partner(WeightSystem(2, (2, 2, 3, 4)))
    assert partner.d == 3 and partner.weights == (2, 2, 2, 3, 4)
    with pytest.raises(ValueError):
        knoerrer_partner(WeightSystem(2, (2, 3)))


def test_classification_report_consistency():
    report = classification_report(WeightSystem(1, (2, 3, 5)))
    assert report.trichotomy == Trichotomy.FANO
    assert report.cm_finite and report.vb_finite
    assert report.k0_rank == 9 and report.cm_rank == 8
    assert report.orlov_delta == 1 == report.coset_count
    assert report.is_hypersurface and not report.is_regular
    report2 = classification_report(WeightSystem(2, (2, 3)))
    assert report2.is_regular and report2.cm_rank == 0
    assert report2.gldim_canonical == 2
