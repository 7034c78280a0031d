"""Exact mean density matrices of tensor powers under unitarily invariant measures.

For a random density matrix rho = U diag(e) U+ with U Haar on U(N) and
eigenvalues e drawn from a symmetric simplex law, the mean of rho^(x m)
commutes with every W^(x m) and therefore lies in the span of the tensor-slot
permutation operators V_sigma.  Conjugation invariance under S_m further
restricts it to the span of class sums, so the coefficients are obtained from
a p(m) x p(m) rational linear system

    sum_K a_K tr(W_K V_tau) = E[prod_{cycles c of tau} tr(rho^{|c|})],

whose right-hand side reduces to simplex moments.  Everything is computed in
exact rational arithmetic; eigenvalues and multiplicities come from the
irreducible-component decomposition of (C^N)^(x m), not from floating-point
diagonalization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from .linalg import DIM_CAP, Scenario, check_dim_cap, reorder_subsystems
from .symmetry import (
    character,
    compose,
    conjugacy_classes,
    cycle_type,
    partitions,
    symmetric_group_dimension,
    unitary_group_dimension,
)

QLike = Fraction | int | list | tuple


def _as_q_vector(n: int, q: QLike) -> tuple[Fraction, ...]:
    if isinstance(q, (list, tuple)):
        qs = tuple(Fraction(x) for x in q)
        if len(qs) != n:
            raise ValueError(f"expected {n} Dirichlet parameters, got {len(qs)}")
    else:
        qs = (Fraction(q),) * n
    if any(x >= 1 for x in qs):
        raise ValueError("Dirichlet parameters must satisfy q < 1")
    return qs


def dirichlet_moment(n: int, q: QLike, k: tuple[int, ...]) -> Fraction:
    """E[prod_i e_i^{k_i}] on the simplex under Dirichlet exponents -q_i.

    The density is proportional to prod e_i^{-q_i}, i.e. Dirichlet with
    concentrations alpha_i = 1 - q_i; the moment is a ratio of rising
    factorials and hence exactly rational for rational q.
    """
    qs = _as_q_vector(n, q)
    if len(k) != n or any(x < 0 for x in k):
        raise ValueError("exponent vector must list one value >= 0 per level")
    alphas = [1 - x for x in qs]
    num = Fraction(1)
    for a, ki in zip(alphas, k):
        for t in range(ki):
            num *= a + t
    den = Fraction(1)
    total = sum(alphas)
    for t in range(sum(k)):
        den *= total + t
    return num / den


def power_sum_moment(n: int, q: QLike, cycle_lengths: tuple[int, ...]) -> Fraction:
    """E[prod_j p_{l_j}(e)] with p_l the l-th power sum of the eigenvalues.

    This is E[prod_cycles tr(rho^{cycle length})], the quantity pairing the
    mean of rho^(x m) with a permutation operator of the given cycle type.
    Length-1 cycles contribute p_1 = 1 exactly and are skipped; the rest are
    expanded over level assignments into Dirichlet moments.
    """
    if any(l < 1 for l in cycle_lengths):
        raise ValueError("cycle lengths must be positive")
    lens = [l for l in cycle_lengths if l > 1]
    total = Fraction(0)
    for assign in product(range(n), repeat=len(lens)):
        k = [0] * n
        for level, l in zip(assign, lens):
            k[level] += l
        total += dirichlet_moment(n, q, tuple(k))
    return total


def solve_rational_system(
    rows: list[list[Fraction]], rhs: list[Fraction]
) -> list[Fraction]:
    """Exact solution of a (possibly singular but consistent) linear system.

    Gauss-Jordan over Fraction with free variables pinned to zero.  Any such
    solution of the commutant projection system reproduces the same matrix,
    because the residual would be simultaneously inside the permutation span
    and orthogonal to it.
    """
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    m = [list(row) + [b] for row, b in zip(rows, rhs)]
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot_row = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    for i in range(r, n_rows):
        if m[i][n_cols] != 0:
            raise ValueError("inconsistent linear system")
    sol = [Fraction(0)] * n_cols
    for i, c in enumerate(pivots):
        sol[c] = m[i][n_cols]
    return sol


@dataclass(frozen=True)
class OracleResult:
    """Exact mean of rho^(x m): rational matrix plus permutation coefficients.

    ``coefficients`` maps each sigma in S_m to its coefficient c_sigma in
    mean = sum_sigma c_sigma V_sigma (constant on conjugacy classes).  For
    composite scenarios built from independent factors the permutation-span
    picture applies per factor, so ``coefficients`` is None there.
    """

    mean: np.ndarray  # object array of Fraction
    coefficients: dict[tuple[int, ...], Fraction] | None
    scenario: Scenario
    q: tuple[tuple[Fraction, ...], ...]  # per factor
    factor_spectra: tuple[tuple[tuple[Fraction, int], ...], ...] | None = None

    def spectrum(self) -> list[tuple[Fraction, int]]:
        return exact_spectrum(self)

    def mean_float(self) -> np.ndarray:
        return self.mean.astype(np.float64)

    def trace(self) -> Fraction:
        return sum(self.mean[i, i] for i in range(self.mean.shape[0]))


def _class_coefficients(
    n: int, m: int, q: QLike
) -> dict[tuple[int, ...], Fraction]:
    classes = conjugacy_classes(m)
    types = sorted(classes)
    gram_rows = []
    rhs = []
    nf = Fraction(n)
    for ct_row in types:
        tau = classes[ct_row][0]
        row = [
            sum(nf ** len(cycle_type(compose(s, tau))) for s in classes[ct_k])
            for ct_k in types
        ]
        gram_rows.append(row)
        rhs.append(power_sum_moment(n, q, ct_row))
    sol = solve_rational_system(gram_rows, rhs)
    return dict(zip(types, sol))


def haar_mean(
    n: int, m: int, q: QLike = 0, cap: int = DIM_CAP
) -> OracleResult:
    """Exact E[rho^(x m)] for N x N states with Haar eigenvectors, Dirichlet spectrum.

    ``q`` is the common simplex exponent (q = 0 is the uniform simplex) or a
    length-N sequence of exponents; all must be < 1.
    """
    if m < 1:
        raise ValueError("power m must be >= 1")
    if n < 2:
        raise ValueError("dimension must be >= 2")
    d = n**m
    check_dim_cap(d, cap)
    qs = _as_q_vector(n, q)
    class_coeff = _class_coefficients(n, m, qs)
    classes = conjugacy_classes(m)

    mean = np.full((d, d), Fraction(0), dtype=object)
    weights = [n ** (m - 1 - k) for k in range(m)]
    index_tuples = list(product(range(n), repeat=m))
    coefficients: dict[tuple[int, ...], Fraction] = {}
    for ct, elems in classes.items():
        c = class_coeff[ct]
        for sigma in elems:
            coefficients[sigma] = c
            if c == 0:
                continue
            for col, digits in enumerate(index_tuples):
                row = sum(digits[k] * weights[sigma[k]] for k in range(m))
                mean[row, col] += c
    return OracleResult(
        mean=mean,
        coefficients=coefficients,
        scenario=Scenario(factors=(n,), power=m),
        q=(qs,),
    )


def exact_spectrum(result: OracleResult) -> list[tuple[Fraction, int]]:
    """Exact eigenvalues with multiplicities, ascending.

    Single factor: the mean is central in the image of the group algebra of
    S_m, so it acts as a scalar on each irreducible component lam of
    (C^N)^(x m); the scalar is sum_K a_K |K| chi^lam(K) / f^lam and the
    component has dimension f^lam * (Weyl dimension).  Composite scenarios
    multiply the factor spectra.
    """
    if result.coefficients is not None:
        (n,) = result.scenario.factors
        m = result.scenario.power
        classes = conjugacy_classes(m)
        class_coeff = {ct: result.coefficients[elems[0]] for ct, elems in classes.items()}
        spec: dict[Fraction, int] = {}
        for lam in partitions(m):
            wdim = unitary_group_dimension(lam, n)
            if wdim == 0:
                continue
            f = symmetric_group_dimension(lam)
            val = (
                sum(
                    class_coeff[ct] * len(classes[ct]) * character(lam, ct)
                    for ct in classes
                )
                / f
            )
            spec[val] = spec.get(val, 0) + f * wdim
        return sorted(spec.items())
    if result.factor_spectra is None:
        raise ValueError("no exact spectrum available for this result")
    merged: dict[Fraction, int] = {Fraction(1): 1}
    for spec in result.factor_spectra:
        nxt: dict[Fraction, int] = {}
        for v, mult in merged.items():
            for fv, fmult in spec:
                nxt[v * fv] = nxt.get(v * fv, 0) + mult * fmult
        merged = nxt
    return sorted(merged.items())


def composite_haar_mean(
    scenario: Scenario, qs: list[QLike] | None = None, cap: int = DIM_CAP
) -> OracleResult:
    """Exact mean of (rho_1 x ... x rho_k)^(x m) for independent factors.

    Independence factorizes the mean into the tensor product of per-factor
    means; the subsystems are then reordered from factor-major order
    (A_1..A_m, B_1..B_m, ...) to power-major order ((A_1 B_1..), (A_2 B_2..)).
    """
    scenario.check_cap(cap)
    if qs is None:
        qs = [0] * len(scenario.factors)
    if len(qs) != len(scenario.factors):
        raise ValueError("one Dirichlet parameter (set) per factor required")
    m = scenario.power
    factor_results = [
        haar_mean(n, m, q, cap=cap) for n, q in zip(scenario.factors, qs)
    ]
    mean = factor_results[0].mean
    for fr in factor_results[1:]:
        mean = np.kron(mean, fr.mean)
    k = len(scenario.factors)
    # factor-major subsystem list: factor i repeated over power slots
    dims = [n for n in scenario.factors for _ in range(m)]
    perm = tuple(i * m + s for s in range(m) for i in range(k))
    mean = reorder_subsystems(mean, dims, perm)
    return OracleResult(
        mean=mean,
        coefficients=None,
        scenario=scenario,
        q=tuple(fr.q[0] for fr in factor_results),
        factor_spectra=tuple(tuple(fr.spectrum()) for fr in factor_results),
    )


def permutation_images(sigma: tuple[int, ...], n: int) -> list[int]:
    """Column -> row index map of V_sigma on (C^n)^(x m), without the matrix."""
    m = len(sigma)
    weights = [n ** (m - 1 - k) for k in range(m)]
    rows = []
    for digits in product(range(n), repeat=m):
        rows.append(sum(digits[k] * weights[sigma[k]] for k in range(m)))
    return rows


def reconstruct_from_coefficients(result: OracleResult) -> np.ndarray:
    """Rebuild sum_sigma c_sigma V_sigma; used to assert exact reconstruction."""
    if result.coefficients is None:
        raise ValueError("composite results carry no permutation coefficients")
    (n,) = result.scenario.factors
    m = result.scenario.power
    d = n**m
    out = np.full((d, d), Fraction(0), dtype=object)
    for sigma, c in result.coefficients.items():
        if c == 0:
            continue
        for col, row in enumerate(permutation_images(sigma, n)):
            out[row, col] += c
    return out
