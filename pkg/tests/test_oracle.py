"""Exact oracle: simplex moments, permutation-span solve, published tables.

Derived expectations are checked against independent oracles (quadrature over
the simplex, explicit enumeration); published values are asserted exactly.
"""

from fractions import Fraction as F
from itertools import permutations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rhomean.fixtures import get_fixture
from rhomean.linalg import Scenario, permutation_operator
from rhomean.measures import RandomStream, sample_haar_unitary
from rhomean.oracle import (
    composite_haar_mean,
    dirichlet_moment,
    haar_mean,
    power_sum_moment,
    reconstruct_from_coefficients,
    solve_rational_system,
)


def simplex_quadrature_moment(exponents, steps=400):
    """Centroid-rule integral of e1^k1 e2^k2 e3^k3 over the uniform 2-simplex.

    The square grid cells split into lower/upper triangles that tile the
    simplex exactly, so the equal-weight centroid rule is O(h^2) unbiased.
    """
    h = 1.0 / steps
    i = np.arange(steps)
    ii, jj = np.meshgrid(i, i, indexing="ij")
    lower = ii + jj <= steps - 1
    upper = ii + jj <= steps - 2
    e1 = np.concatenate([(ii[lower] + 1 / 3) * h, (ii[upper] + 2 / 3) * h])
    e2 = np.concatenate([(jj[lower] + 1 / 3) * h, (jj[upper] + 2 / 3) * h])
    e3 = 1.0 - e1 - e2
    vals = e1 ** exponents[0] * e2 ** exponents[1] * e3 ** exponents[2]
    return vals.mean()


def test_dirichlet_moment_uniform_simplex():
    assert dirichlet_moment(3, 0, (1, 0, 0)) == F(1, 3)
    assert dirichlet_moment(3, 0, (2, 0, 0)) == F(1, 6)
    assert dirichlet_moment(3, 0, (3, 0, 0)) == F(1, 10)
    # independent quadrature oracle
    for k in [(2, 0, 0), (3, 0, 0), (1, 1, 0), (2, 1, 0)]:
        quad = simplex_quadrature_moment(k)
        assert abs(float(dirichlet_moment(3, 0, k)) - quad) < 2e-4


def test_dirichlet_moment_nonuniform_and_asymmetric():
    # N = 2, q = 1/2: e1 ~ Beta(1/2, 1/2), E[e1] = 1/2, E[e1^2] = 3/8
    assert dirichlet_moment(2, F(1, 2), (1, 0)) == F(1, 2)
    assert dirichlet_moment(2, F(1, 2), (2, 0)) == F(3, 8)
    # asymmetric exponents: alpha = (1, 1/2), E[e1] = alpha1/(alpha1+alpha2)
    assert dirichlet_moment(2, [0, F(1, 2)], (1, 0)) == F(2, 3)
    with pytest.raises(ValueError):
        dirichlet_moment(2, 1, (1, 0))
    with pytest.raises(ValueError):
        dirichlet_moment(2, 0, (1,))


@given(
    st.integers(2, 5),
    st.fractions(min_value=-3, max_value=F(3, 4), max_denominator=8),
)
@settings(max_examples=40, deadline=None)
def test_power_sum_moment_all_singletons_is_one(n, q):
    assert power_sum_moment(n, q, tuple([1] * 4)) == 1


def test_power_sum_moment_examples():
    assert power_sum_moment(2, 0, (2,)) == F(2, 3)
    assert power_sum_moment(3, 0, (2,)) == F(1, 2)
    assert power_sum_moment(3, 0, (2, 1)) == F(1, 2)
    # quadrature oracle for E[p2 * p2] on the 2-simplex
    quad = sum(
        simplex_quadrature_moment(k) * c
        for k, c in [
            ((4, 0, 0), 3),  # sum e_i^4, by symmetry
            ((2, 2, 0), 6),  # cross terms e_i^2 e_j^2
        ]
    )
    assert abs(float(power_sum_moment(3, 0, (2, 2))) - quad) < 2e-4


def test_haar_mean_matches_published_4x4():
    result = haar_mean(2, 2, 0)
    fix = get_fixture("n2m2")
    assert np.all(result.mean == fix.matrix.rpart)
    assert result.trace() == 1
    assert result.spectrum() == [(F(1, 6), 1), (F(5, 18), 3)]


def test_haar_mean_n5_diagonal():
    mean = haar_mean(5, 2, 0).mean
    assert mean[0, 0] == F(2, 45)
    assert mean[1, 1] == F(7, 180)
    assert mean[5, 5] == F(7, 180)


@pytest.mark.parametrize("q", [F(0), F(1, 2), F(-1)])
def test_haar_mean_q_family_spectrum(q):
    spec = haar_mean(2, 2, q).spectrum()
    iso = (1 - q) / (2 * (3 - 2 * q))
    triplet = (5 - 3 * q) / (6 * (3 - 2 * q))
    assert spec == sorted([(iso, 1), (triplet, 3)])


@pytest.mark.parametrize(
    "m,table",
    [
        (2, [(F(1, 6), 1), (F(5, 18), 3)]),
        (3, [(F(1, 12), 4), (F(1, 6), 4)]),
        (4, [(F(1, 30), 2), (F(2, 45), 9), (F(8, 75), 5)]),
        (5, [(F(1, 60), 10), (F(1, 40), 16), (F(13, 180), 6)]),
        (6, [(F(1, 140), 5), (F(11, 1260), 27), (F(31, 2100), 25), (F(151, 2940), 7)]),
    ],
)
def test_two_level_spectra(m, table):
    assert haar_mean(2, m, 0).spectrum() == sorted(table)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("m", [2, 3])
@pytest.mark.parametrize("q", [F(0), F(1, 2)])
def test_reconstruction_and_exactness(n, m, q):
    result = haar_mean(n, m, q)
    assert np.all(reconstruct_from_coefficients(result) == result.mean)
    assert result.trace() == 1
    # real and exactly symmetric: classes are closed under inversion
    assert np.all(result.mean == result.mean.T)
    spec = result.spectrum()
    assert sum(v * k for v, k in spec) == 1
    assert sum(k for _, k in spec) == n**m


def test_asymmetric_dirichlet_two_parameter_family():
    # hand check: alpha = (1, 1/2) gives E[p2] = 8/15 + 1/5 = 11/15, hence
    # coefficients 19/90 and 7/90 and the triplet/singlet pair below
    r = haar_mean(2, 2, [F(0), F(1, 2)])
    assert r.trace() == 1
    assert r.spectrum() == [(F(2, 15), 1), (F(13, 45), 3)]
    # eigenspaces keep the symmetric/antisymmetric split of the symmetric case
    sym_spec = haar_mean(2, 2, 0).spectrum()
    assert [k for _, k in r.spectrum()] == [k for _, k in sym_spec]


def test_mean_is_unitarily_invariant():
    mean = haar_mean(3, 2, 0).mean.astype(np.float64)
    for seed in range(20):
        u = sample_haar_unitary(3, RandomStream(seed, 77))
        u2 = np.kron(u, u)
        assert np.abs(u2 @ mean @ u2.conj().T - mean).max() < 1e-10


def test_mean_commutes_with_slot_permutations():
    from rhomean.symmetry import conjugacy_classes

    result = haar_mean(3, 3, 0)
    mean_f = result.mean.astype(np.float64)
    for sigma in permutations(range(3)):
        v = permutation_operator(sigma, 3, 3)
        assert np.abs(v @ mean_f @ v.T - mean_f).max() == 0.0
    # coefficients are class functions
    classes = conjugacy_classes(3)
    for elems in classes.values():
        coeffs = {result.coefficients[s] for s in elems}
        assert len(coeffs) == 1


def test_dependent_permutation_operators_still_solve():
    # for two-level systems and m >= 3 the permutation operators are linearly
    # dependent; any exact solution of the projection system gives the mean
    result = haar_mean(2, 4, 0)
    assert np.all(reconstruct_from_coefficients(result) == result.mean)
    assert result.trace() == 1


def test_composite_single_factor_matches_plain():
    plain = haar_mean(2, 2, 0)
    comp = composite_haar_mean(Scenario(factors=(2,), power=2))
    assert np.all(plain.mean == comp.mean)
    assert plain.spectrum() == comp.spectrum()


def test_composite_two_by_three():
    comp = composite_haar_mean(Scenario(factors=(2, 3), power=2))
    assert comp.spectrum() == [
        (F(1, 72), 3),
        (F(1, 48), 6),
        (F(5, 216), 9),
        (F(5, 144), 18),
    ]
    assert sum(comp.mean[i, i] for i in range(36)) == 1
    # the published matrix has 966 zero entries with its 240 rational/pi cells
    # kept; the invariant mean zeroes those cells as well
    assert int((comp.mean == 0).sum()) == 966 + 240


def test_composite_two_by_two_factorizes():
    comp = composite_haar_mean(Scenario(factors=(2, 2), power=2))
    values = {F(5, 18) * F(5, 18): 9, F(5, 18) * F(1, 6): 6, F(1, 6) * F(1, 6): 1}
    assert comp.spectrum() == sorted(values.items())


def test_composite_reorders_to_power_major_blocks():
    # m = 1 composite mean is the tensor product of fully mixed states
    comp = composite_haar_mean(Scenario(factors=(2, 3), power=1))
    want = np.full((6, 6), F(0), dtype=object)
    for i in range(6):
        want[i, i] = F(1, 6)
    assert np.all(comp.mean == want)


def test_solve_rational_system_errors():
    with pytest.raises(ValueError):
        # inconsistent: x = 0 and x = 1
        solve_rational_system([[F(1)], [F(1)]], [F(0), F(1)])


def test_haar_mean_input_validation():
    with pytest.raises(ValueError):
        haar_mean(2, 0, 0)
    with pytest.raises(ValueError):
        haar_mean(1, 2, 0)
    with pytest.raises(ValueError):
        haar_mean(2, 2, 1)
    with pytest.raises(ValueError):
        haar_mean(2, 13, 0)  # exceeds the dimension cap
