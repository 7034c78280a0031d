"""Dense tensor-space linear algebra for density matrices.

Matrices are plain numpy arrays (complex128 for numeric work, object arrays
of Fraction for exact work).  The Kronecker index convention is row-major,
i.e. ``tensor_product(a, b)`` maps row indices to ``i_a * rows_b + i_b``,
which fixes the basis ordering every fixture in this package relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

import numpy as np

#: Largest total dimension any tensor-space operation will materialize.
DIM_CAP = 4096

HERMITICITY_TOL = 1e-10
PSD_TOL = 1e-10


@dataclass(frozen=True)
class Scenario:
    """An ordered list of subsystem dimensions raised to a tensor power."""

    factors: tuple[int, ...]
    power: int = 1

    def __post_init__(self):
        if self.power < 1:
            raise ValueError("power must be >= 1")
        if any(n < 2 for n in self.factors) or not self.factors:
            raise ValueError("every subsystem dimension must be >= 2")

    @property
    def base_dim(self) -> int:
        return prod(self.factors)

    @property
    def dim(self) -> int:
        return self.base_dim**self.power

    def check_cap(self, cap: int = DIM_CAP) -> None:
        if self.dim > cap:
            raise ValueError(f"total dimension {self.dim} exceeds cap {cap}")


def check_dim_cap(dim: int, cap: int = DIM_CAP) -> None:
    if dim > cap:
        raise ValueError(f"dimension {dim} exceeds cap {cap}")


def tensor_product(a: np.ndarray, b: np.ndarray, cap: int = DIM_CAP) -> np.ndarray:
    """Kronecker product with the row-major index convention."""
    check_dim_cap(a.shape[0] * b.shape[0], cap)
    return np.kron(a, b)


def tensor_power(rho: np.ndarray, m: int, cap: int = DIM_CAP) -> np.ndarray:
    """m-fold tensor power rho^(x m)."""
    if m < 1:
        raise ValueError("tensor power requires m >= 1")
    check_dim_cap(rho.shape[0] ** m, cap)
    out = rho
    for _ in range(m - 1):
        out = np.kron(out, rho)
    return out


def _subsystem_letters(n_subsystems: int) -> tuple[str, str]:
    letters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"
    if 2 * n_subsystems > len(letters):
        raise ValueError("too many subsystems")
    return letters[:n_subsystems], letters[n_subsystems : 2 * n_subsystems]


def partial_trace(rho: np.ndarray, dims: list[int], keep: tuple[int, ...]) -> np.ndarray:
    """Trace out all subsystems not in ``keep`` (0-based indices).

    ``dims`` lists the subsystem dimensions whose product must equal the
    matrix dimension; the kept subsystems stay in their original order.
    """
    dims = list(dims)
    if prod(dims) != rho.shape[0] or rho.shape[0] != rho.shape[1]:
        raise ValueError("subsystem dimensions inconsistent with matrix shape")
    keep = tuple(sorted(set(keep)))
    if not keep or any(k < 0 or k >= len(dims) for k in keep):
        raise ValueError("keep must be a nonempty subset of subsystem indices")
    rows, cols = _subsystem_letters(len(dims))
    in_cols = "".join(rows[k] if k not in keep else cols[k] for k in range(len(dims)))
    out = "".join(rows[k] for k in keep) + "".join(cols[k] for k in keep)
    expr = f"{rows}{in_cols}->{out}"
    kept_dim = prod(dims[k] for k in keep)
    return np.einsum(expr, rho.reshape(dims + dims)).reshape(kept_dim, kept_dim)


def reorder_subsystems(rho: np.ndarray, dims: list[int], perm: tuple[int, ...]) -> np.ndarray:
    """Conjugate by the subsystem permutation placing old subsystem perm[k] at slot k.

    Works for numeric and exact (object dtype) matrices alike; the spectrum is
    unchanged since this is a unitary conjugation.
    """
    dims = list(dims)
    if prod(dims) != rho.shape[0]:
        raise ValueError("subsystem dimensions inconsistent with matrix shape")
    if sorted(perm) != list(range(len(dims))):
        raise ValueError("perm must be a permutation of the subsystem indices")
    n = len(dims)
    axes = list(perm) + [p + n for p in perm]
    new_dims = [dims[p] for p in perm]
    d = prod(dims)
    return rho.reshape(dims + dims).transpose(axes).reshape(d, d)


def permutation_operator(sigma: tuple[int, ...], n: int, m: int, cap: int = DIM_CAP) -> np.ndarray:
    """Matrix of the tensor-slot permutation sigma (0-based images) on (C^n)^(x m).

    Sends e_{i_1} x ... x e_{i_m} to the basis vector whose sigma(k)-th slot
    carries i_k; columns therefore hold exactly one 1.
    """
    if sorted(sigma) != list(range(m)):
        raise ValueError("sigma must be a permutation of range(m)")
    d = n**m
    check_dim_cap(d, cap)
    op = np.zeros((d, d))
    # strides of each slot in the row-major mixed-radix index
    weights = [n ** (m - 1 - k) for k in range(m)]
    for col in range(d):
        digits = []
        c = col
        for k in range(m):
            digits.append(c // weights[k])
            c %= weights[k]
        row = sum(digits[k] * weights[sigma[k]] for k in range(m))
        op[row, col] = 1.0
    return op


def hermitian_eig(h: np.ndarray, tol: float = HERMITICITY_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix; eigenvalues ascending.

    Rejects inputs whose Hermiticity defect exceeds ``tol`` and diagonalizes
    the Hermitian average, so roundoff in the input cannot leak into complex
    eigenvalues.
    """
    h = np.asarray(h)
    if h.dtype == object:
        h = h.astype(np.complex128)
    defect = np.abs(h - h.conj().T).max()
    if defect > tol:
        raise ValueError(f"matrix is not Hermitian within tol: defect {defect:.3e}")
    vals, vecs = np.linalg.eigh((h + h.conj().T) / 2)
    return vals, vecs


def validate_density_matrix(
    rho: np.ndarray,
    hermiticity_tol: float = HERMITICITY_TOL,
    psd_tol: float = PSD_TOL,
) -> None:
    """Raise ValueError unless rho is Hermitian, unit-trace and PSD to tolerance."""
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError("density matrix must be square")
    if not np.all(np.isfinite(rho.view(float))):
        raise ValueError("density matrix has non-finite entries")
    defect = np.abs(rho - rho.conj().T).max()
    if defect > hermiticity_tol:
        raise ValueError(f"hermiticity defect {defect:.3e} exceeds {hermiticity_tol:.1e}")
    tr = abs(rho.trace() - 1)
    if tr > hermiticity_tol:
        raise ValueError(f"trace defect {tr:.3e} exceeds {hermiticity_tol:.1e}")
    smallest = np.linalg.eigvalsh((rho + rho.conj().T) / 2)[0]
    if smallest < -psd_tol:
        raise ValueError(f"negative eigenvalue {smallest:.3e} below -{psd_tol:.1e}")


def bloch_density(r: float, theta: float, phi: float) -> np.ndarray:
    """2x2 density matrix with Bloch-ball coordinates (r, theta, phi)."""
    if not 0 <= r <= 1:
        raise ValueError("Bloch radius must lie in [0, 1]")
    z = r * np.cos(theta)
    x = r * np.sin(theta) * np.cos(phi)
    y = r * np.sin(theta) * np.sin(phi)
    return 0.5 * np.array([[1 + z, x - 1j * y], [x + 1j * y, 1 - z]])
