"""Streaming, parallel, reproducible Monte Carlo estimation of E[rho^(x m)].

Work is split into fixed-size chunks; chunk i draws from the Philox stream
keyed by (seed, i), so the sample set is a pure function of (seed, n_samples)
and cannot depend on the number of workers or on scheduling.  Each chunk
reduces to (count, mean, sum-of-squared-deviations) with numpy's pairwise
summation; chunks are then merged in a deterministic binary tree, which keeps
repeated runs bitwise identical.
"""

from __future__ import annotations

import multiprocessing
import os
from dataclasses import dataclass

import numpy as np

from .linalg import DIM_CAP, Scenario, check_dim_cap
from .measures import (
    MeasureSpec,
    ProductMeasure,
    RandomStream,
    sample_density_batch,
)

#: target number of complex matrix entries held per chunk batch
_CHUNK_ENTRY_BUDGET = 2_000_000


def _measure_factors(spec: MeasureSpec) -> tuple[int, ...]:
    if isinstance(spec, ProductMeasure):
        out: tuple[int, ...] = ()
        for f in spec.factors:
            out += _measure_factors(f)
        return out
    return (spec.dim,)


def scenario_for(spec: MeasureSpec, m: int) -> Scenario:
    return Scenario(factors=_measure_factors(spec), power=m)


def chunk_size_for(dim: int) -> int:
    return max(32, min(8192, _CHUNK_ENTRY_BUDGET // (dim * dim)))


@dataclass(frozen=True)
class MeanEstimate:
    """Monte Carlo mean of rho^(x m) with per-entry standard errors.

    ``stderr`` holds, per entry, the larger of the standard errors of the
    real and imaginary parts -- the conservative choice for z-score gates.
    """

    mean: np.ndarray
    n_samples: int
    stderr: np.ndarray
    stderr_real: np.ndarray
    stderr_imag: np.ndarray
    measure: MeasureSpec
    scenario: Scenario
    seed: int
    workers: int

    @property
    def stderr_max(self) -> float:
        return float(self.stderr.max())


def _chunk_stats(args) -> tuple[int, np.ndarray, np.ndarray, np.ndarray]:
    spec, m, seed, chunk_index, count = args
    gen = RandomStream(seed, chunk_index).generator()
    rho = sample_density_batch(spec, count, gen)
    power = rho
    for _ in range(m - 1):
        b, p, _ = power.shape
        q = rho.shape[1]
        power = np.einsum("bij,bkl->bikjl", power, rho).reshape(b, p * q, p * q)
    mean = power.mean(axis=0)
    m2_re = np.square(power.real - mean.real).sum(axis=0)
    m2_im = np.square(power.imag - mean.imag).sum(axis=0)
    return count, mean, m2_re, m2_im


def _merge(a, b):
    """Chan/Welford merge of (count, mean, M2_re, M2_im) accumulators."""
    na, mean_a, re_a, im_a = a
    nb, mean_b, re_b, im_b = b
    n = na + nb
    delta = mean_b - mean_a
    mean = mean_a + delta * (nb / n)
    w = na * nb / n
    m2_re = re_a + re_b + np.square(delta.real) * w
    m2_im = im_a + im_b + np.square(delta.imag) * w
    return n, mean, m2_re, m2_im


def _tree_reduce(items):
    """Binary-tree fold in index order; the shape is fixed by len(items) alone."""
    while len(items) > 1:
        items = [
            _merge(items[i], items[i + 1]) if i + 1 < len(items) else items[i]
            for i in range(0, len(items), 2)
        ]
    return items[0]


def default_workers() -> int:
    env = os.environ.get("RHOMEAN_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def estimate_mean(
    spec: MeasureSpec,
    m: int,
    n_samples: int,
    seed: int = 0,
    workers: int = 1,
    cap: int = DIM_CAP,
) -> MeanEstimate:
    """Unbiased sample mean of rho^(x m) with deterministic chunked reduction."""
    scenario = scenario_for(spec, m)
    check_dim_cap(scenario.dim, cap)
    if n_samples < 100:
        raise ValueError("need at least 100 samples")
    workers = max(1, workers)

    size = chunk_size_for(scenario.dim)
    counts = [size] * (n_samples // size)
    if n_samples % size:
        counts.append(n_samples % size)
    jobs = [(spec, m, seed, i, c) for i, c in enumerate(counts)]

    if workers == 1 or len(jobs) == 1:
        stats = [_chunk_stats(j) for j in jobs]
    else:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(processes=min(workers, len(jobs))) as pool:
            stats = pool.map(_chunk_stats, jobs, chunksize=1)

    n, mean, m2_re, m2_im = _tree_reduce(stats)
    denom = n * (n - 1)
    stderr_re = np.sqrt(m2_re / denom)
    stderr_im = np.sqrt(m2_im / denom)
    return MeanEstimate(
        mean=mean,
        n_samples=n,
        stderr=np.maximum(stderr_re, stderr_im),
        stderr_real=stderr_re,
        stderr_imag=stderr_im,
        measure=spec,
        scenario=scenario,
        seed=seed,
        workers=workers,
    )


@dataclass(frozen=True)
class ConvergenceReport:
    """Entrywise comparison of an estimate against a reference matrix."""

    max_abs_delta: float
    max_z: float
    n_entries_over_5: int
    zero_pattern_matches: int
    zero_pattern_total: int

    @property
    def zero_pattern_agrees(self) -> bool:
        return self.zero_pattern_matches == self.zero_pattern_total


def _z_scores(delta_part: np.ndarray, stderr_part: np.ndarray) -> np.ndarray:
    z = np.zeros_like(delta_part)
    hit = stderr_part > 0
    z[hit] = np.abs(delta_part[hit]) / stderr_part[hit]
    z[~hit & (np.abs(delta_part) > 0)] = np.inf
    return z


def convergence_report(est: MeanEstimate, reference: np.ndarray) -> ConvergenceReport:
    """Max deviation, max z-score and zero-pattern agreement versus a reference.

    An estimate entry counts as "zero" when its magnitude is at most 5x its
    standard error; the pattern comparison scores those calls against exact
    zeros of the reference.
    """
    ref = np.asarray(reference)
    if ref.dtype == object:
        ref = ref.astype(np.float64)
    ref = ref.astype(complex)
    if ref.shape != est.mean.shape:
        raise ValueError("reference shape differs from estimate")
    delta = est.mean - ref
    z = np.maximum(
        _z_scores(delta.real, est.stderr_real), _z_scores(delta.imag, est.stderr_imag)
    )
    est_zero = np.abs(est.mean) <= 5 * est.stderr
    ref_zero = ref == 0
    return ConvergenceReport(
        max_abs_delta=float(np.abs(delta).max()),
        max_z=float(z.max()),
        n_entries_over_5=int((z > 5).sum()),
        zero_pattern_matches=int((est_zero == ref_zero).sum()),
        zero_pattern_total=int(ref.size),
    )
