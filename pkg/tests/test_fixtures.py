"""Internal consistency of the fixture catalog."""

import math
from fractions import Fraction as F
from itertools import product

import numpy as np
import pytest

from rhomean.fixtures import (
    FIXTURE_IDS,
    N3M2_PSD_THRESHOLD,
    get_fixture,
    n4m3_entry_formulas,
    spectrum_pi_parts_cancel,
    spectrum_rational_sum,
    spectrum_values,
)
from rhomean.linalg import validate_density_matrix
from rhomean.spectral import substitute_v


def test_catalog_lists_all_ids():
    expected = {
        "n2m2", "n2m3", "n2m4.eigs", "n2m5.eigs", "n2m6.eigs",
        "n3m2", "n3m2.vecs", "n3m3.partial", "n3m4.partial",
        "n4m2", "n4m3.partial", "n5m2.diag",
        "n6m2.eigs", "n12.232.eigs", "n12.322.eigs",
    }
    assert set(FIXTURE_IDS) == expected
    with pytest.raises(ValueError):
        get_fixture("n9m9")


def test_matrices_are_symmetric_and_unit_trace():
    for fid in ("n2m2", "n2m3", "n3m2", "n3m3.partial", "n4m2"):
        fix = get_fixture(fid)
        assert fix.matrix.is_symmetric(), fid
        assert sum(fix.matrix.rpart[i, i] for i in range(fix.matrix.dim)) == 1, fid
        assert sum(fix.matrix.spart[i, i] for i in range(fix.matrix.dim)) == 0, fid


def test_complete_spectra_sum_to_one_exactly():
    for fid in ("n2m2", "n2m3", "n2m4.eigs", "n2m5.eigs", "n2m6.eigs",
                "n3m2", "n4m2", "n6m2.eigs", "n12.232.eigs", "n12.322.eigs"):
        fix = get_fixture(fid)
        assert spectrum_rational_sum(fix.spectrum) == 1, fid
        assert spectrum_pi_parts_cancel(fix.spectrum), fid
        if fix.limit_spectrum:
            assert sum(F(v) * k for v, k in fix.limit_spectrum) == 1, fid


def test_n3m3_spectrum_accounting():
    fix = get_fixture("n3m3.partial")
    symbolic_mult = sum(k for _, k in fix.spectrum)
    decimal_mult = sum(k for _, _, k in fix.decimal_spectrum)
    assert symbolic_mult + decimal_mult == 27
    # the eight isolated decimals sit symmetrically around 31/600
    assert spectrum_rational_sum(fix.spectrum) + F(31, 600) * decimal_mult == 1
    assert spectrum_pi_parts_cancel(fix.spectrum)
    assert sum(k for _, k in fix.limit_spectrum) == 27


def test_fixture_matrices_are_density_matrices_at_pi():
    for fid in ("n2m2", "n2m3", "n3m2", "n4m2"):
        mat = substitute_v(get_fixture(fid).matrix, math.pi)
        validate_density_matrix(mat, hermiticity_tol=1e-12, psd_tol=1e-12)


def test_n3m2_psd_threshold():
    fix = get_fixture("n3m2")
    above = np.linalg.eigvalsh(substitute_v(fix.matrix, N3M2_PSD_THRESHOLD * 1.0000001))
    below = np.linalg.eigvalsh(substitute_v(fix.matrix, N3M2_PSD_THRESHOLD * 0.999))
    assert above.min() >= -1e-12
    assert below.min() < -1e-9


def test_n3m2_decimal_values():
    # published decimals for the four unrepeated eigenvalues
    fix = get_fixture("n3m2")
    vals = [v for v, mult in spectrum_values(fix.spectrum) if mult == 1]
    assert np.allclose(sorted(vals), [0.12184, 0.123784, 0.126216, 0.12816], atol=5e-6)
    g = 1 / (864 * math.pi)
    assert abs(g - 0.000368414) < 5e-10


def test_n6m2_decimals_match_symbolic_values():
    fix = get_fixture("n6m2.eigs")
    values = spectrum_values(fix.spectrum)
    decs = sorted(fix.decimal_spectrum)
    assert len(values) == len(decs) == 12
    for (val, mult), (dval, tol, dmult) in zip(values, decs):
        assert mult == dmult
        assert abs(val - dval) <= tol


def test_n3m3_rational_classification_counts():
    fix = get_fixture("n3m3.partial")
    rp = fix.matrix.rpart
    off = {}
    for i in range(27):
        for j in range(27):
            if i != j and rp[i, j] != 0:
                off[rp[i, j]] = off.get(rp[i, j], 0) + 1
    assert off == {F(3, 400): 36, F(7, 1200): 18, F(1, 600): 12}
    # diagonal pattern: 3 / 18 / 6 occurrences
    from collections import Counter

    diag = Counter(rp[i, i] for i in range(27))
    assert diag == {F(31, 600): 3, F(11, 300): 18, F(37, 1200): 6}


def test_n3m3_diagonal_matches_index_pattern():
    # transcribed pattern vs the multiset structure of the basis index
    fix = get_fixture("n3m3.partial")
    rp = fix.matrix.rpart
    for pos, idx in enumerate(product(range(3), repeat=3)):
        distinct = len(set(idx))
        want = {1: F(31, 600), 2: F(11, 300), 3: F(37, 1200)}[distinct]
        assert rp[pos, pos] == want


def test_n3m4_diag_counts():
    fix = get_fixture("n3m4.partial")
    total = sum(k for _, k in fix.diag_counts)
    assert total == 81
    assert sum(v * k for v, k in fix.diag_counts) == 1


def test_n4m3_formulas():
    formulas = n4m3_entry_formulas()
    f5252, flagged = formulas[(52, 52)]
    assert not flagged
    assert f5252(F(0)) == F(43581, 172800 * 5 * 3)
    _, flagged = formulas[(52, 61)]
    assert flagged


def test_n5m2_diag_payload():
    fix = get_fixture("n5m2.diag")
    assert fix.diag == {0: F(2, 45), 1: F(7, 180), 5: F(7, 180)}


def test_matrix_payloads_reproduce_their_spectra():
    from rhomean.linalg import hermitian_eig
    from rhomean.spectral import cluster_spectrum, substitute_v

    for fid in ("n2m2", "n2m3", "n3m2", "n4m2"):
        fix = get_fixture(fid)
        vals, vecs = hermitian_eig(substitute_v(fix.matrix, math.pi))
        dec = cluster_spectrum(vals, vecs, 1e-9)
        want = spectrum_values(fix.spectrum)
        assert len(dec.clusters) == len(want), fid
        for cluster, (value, mult) in zip(dec.clusters, want):
            assert cluster.multiplicity == mult, fid
            assert abs(cluster.value - value) < 1e-12, fid


def test_eigenvector_sets_are_orthonormal():
    for fid in ("n2m3", "n3m2.vecs", "n3m3.partial"):
        fix = get_fixture(fid)
        for name, vs in fix.vectors.items():
            gram = vs.vectors @ vs.vectors.T
            assert np.abs(gram - np.eye(len(vs.vectors))).max() < 1e-12, (fid, name)
