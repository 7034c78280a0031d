"""Samplers: distributional checks with fixed seeds and 5-sigma gates."""

import numpy as np
import pytest

from rhomean.linalg import validate_density_matrix
from rhomean.measures import (
    BlochBallMeasure,
    HaarDirichletMeasure,
    ProductMeasure,
    RandomStream,
    haar_unitaries,
    measure_from_json,
    sample_density,
    sample_density_batch,
    sample_density_euler,
    sample_haar_unitary,
    sample_simplex,
    simplex_points,
    su2_euler_unitaries,
)


def gen(seed=0, stream=0):
    return RandomStream(seed, stream).generator()


def mean_with_stderr(x):
    x = np.asarray(x, dtype=float)
    return x.mean(), x.std(ddof=1) / np.sqrt(len(x))


def test_haar_unitarity():
    for n in (2, 3, 4):
        u = sample_haar_unitary(n, RandomStream(1))
        assert np.abs(u @ u.conj().T - np.eye(n)).max() < 1e-12


def test_haar_first_entry_moment():
    # |U_11|^2 averages to 1/N
    for n in (2, 3):
        u = haar_unitaries(n, 100_000, gen(2))
        m, se = mean_with_stderr(np.abs(u[:, 0, 0]) ** 2)
        assert abs(m - 1 / n) < 5 * se


def test_haar_diagonal_pair_moment():
    # E|U_11 U_22|^2 = 1/3 for N = 2: |U_22| = |U_11| and |U_11|^2 ~ U(0,1)
    u = haar_unitaries(2, 100_000, gen(3))
    m, se = mean_with_stderr(np.abs(u[:, 0, 0] * u[:, 1, 1]) ** 2)
    assert abs(m - 1 / 3) < 5 * se


def test_haar_left_invariance():
    # trace moments of VU match those of U (two-sample gate at 5 sigma)
    n = 3
    v = sample_haar_unitary(n, RandomStream(99))
    u1 = haar_unitaries(n, 100_000, gen(4))
    u2 = v @ haar_unitaries(n, 100_000, gen(5))
    for f in (
        lambda u: np.einsum("bii->b", u).real,
        lambda u: np.einsum("bii->b", u).imag,
        lambda u: np.einsum("bij,bji->b", u, u).real,
    ):
        m1, s1 = mean_with_stderr(f(u1))
        m2, s2 = mean_with_stderr(f(u2))
        assert abs(m1 - m2) < 5 * np.hypot(s1, s2)


def test_simplex_moments():
    e = simplex_points(3, 0.0, 100_000, gen(6))
    assert np.abs(e.sum(axis=1) - 1).max() < 1e-12
    assert e.min() >= 0
    m, se = mean_with_stderr(e[:, 0])
    assert abs(m - 1 / 3) < 5 * se
    m, se = mean_with_stderr(e[:, 0] ** 2)
    assert abs(m - 1 / 6) < 5 * se  # E[e^2] = 2/(N(N+1))
    e = simplex_points(2, 0.5, 100_000, gen(7))
    m, se = mean_with_stderr(e[:, 0])
    assert abs(m - 1 / 2) < 5 * se
    with pytest.raises(ValueError):
        sample_simplex(2, 1.0, RandomStream(0))


def test_bloch_radial_law():
    # r^2 ~ Beta(3/2, 1-u): E[r^2] = (3/2)/(5/2-u) = 3/4 at u = 1/2
    rho = sample_density_batch(BlochBallMeasure(u=0.5), 100_000, gen(8))
    # r^2 = 2 tr(rho^2) - 1
    purity = np.einsum("bij,bji->b", rho, rho).real
    m, se = mean_with_stderr(2 * purity - 1)
    assert abs(m - 3 / 4) < 5 * se


def test_sampled_states_are_valid():
    specs = [
        HaarDirichletMeasure(n=2),
        HaarDirichletMeasure(n=3, q=(0.5, 0.5, 0.5)),
        BlochBallMeasure(u=-2.0),
        ProductMeasure(factors=(HaarDirichletMeasure(n=2), HaarDirichletMeasure(n=3))),
    ]
    for spec in specs:
        for seed in range(3):
            rho = sample_density(spec, RandomStream(seed))
            assert rho.shape == (spec.dim, spec.dim)
            validate_density_matrix(rho, hermiticity_tol=1e-10, psd_tol=1e-10)


def test_determinism_and_stream_independence():
    spec = HaarDirichletMeasure(n=3)
    a = sample_density_batch(spec, 50, gen(11, 5))
    b = sample_density_batch(spec, 50, gen(11, 5))
    assert np.array_equal(a, b)
    c = sample_density_batch(spec, 50, gen(11, 6))
    assert not np.array_equal(a, c)
    d = sample_density_batch(spec, 50, gen(12, 5))
    assert not np.array_equal(a, d)


def test_product_measure_dim_and_kron_structure():
    spec = ProductMeasure(
        factors=(HaarDirichletMeasure(n=2), HaarDirichletMeasure(n=3))
    )
    assert spec.dim == 6
    rho = sample_density(spec, RandomStream(0))
    # reduced factors are unit trace and valid
    from rhomean.linalg import partial_trace

    for keep, dim in [((0,), 2), ((1,), 3)]:
        red = partial_trace(rho, [2, 3], keep)
        validate_density_matrix(red)
        assert red.shape == (dim, dim)


def test_measure_json_round_trip():
    specs = [
        HaarDirichletMeasure(n=3, q=(0.0, 0.0, 0.0)),
        BlochBallMeasure(u=-2.0),
        ProductMeasure(
            factors=(HaarDirichletMeasure(n=2), BlochBallMeasure(u=0.5))
        ),
    ]
    for spec in specs:
        assert measure_from_json(spec.to_json()) == spec
    with pytest.raises(ValueError):
        measure_from_json({"type": "nope"})
    with pytest.raises(ValueError):
        HaarDirichletMeasure(n=2, q=(1.0, 0.0))
    with pytest.raises(ValueError):
        BlochBallMeasure(u=1.0)


def test_euler_angle_sampler_agrees_with_qr_haar():
    # same distribution as the QR route: SU(2) column moments
    u = su2_euler_unitaries(50_000, gen(13))
    assert np.abs(np.einsum("bij,bkj->bik", u, u.conj()) - np.eye(2)).max() < 1e-10
    m, se = mean_with_stderr(np.abs(u[:, 0, 0]) ** 2)
    assert abs(m - 1 / 2) < 5 * se
    m, se = mean_with_stderr(np.abs(u[:, 0, 0] * u[:, 1, 1]) ** 2)
    assert abs(m - 1 / 3) < 5 * se
    rho = sample_density_euler(0.0, RandomStream(14))
    validate_density_matrix(rho)


def test_euler_sampler_mean_matches_published_4x4():
    # cross-check sampler: mean of rho x rho reproduces the published matrix
    g = gen(15)
    total = np.zeros((4, 4), dtype=complex)
    count = 60_000
    u = su2_euler_unitaries(count, g)
    e = simplex_points(2, 0.0, count, g)
    rho = np.einsum("bij,bj,bkj->bik", u, e, u.conj())
    r2 = np.einsum("bij,bkl->bikjl", rho, rho).reshape(count, 4, 4)
    mean = r2.mean(axis=0)
    se = r2.real.std(axis=0, ddof=1) / np.sqrt(count)
    from rhomean.fixtures import get_fixture

    want = get_fixture("n2m2").matrix.rpart.astype(float)
    assert (np.abs(mean.real - want) <= 5 * np.maximum(se, 1e-12)).all()
