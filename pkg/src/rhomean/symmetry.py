"""Combinatorics of the symmetric group and tensor-space representation data.

Everything here is exact: partitions, cycle types, irreducible characters
(Murnaghan-Nakayama), hook-length dimensions and the dimensions of the
unitary-group representations that pair with them on (C^N)^(x m).  These are
the ingredients needed to turn permutation-operator coefficients into exact
eigenvalue/multiplicity tables.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial


def partitions(n: int, _cap: int | None = None) -> list[tuple[int, ...]]:
    """All partitions of n as weakly decreasing tuples, in reverse-lex order."""
    if _cap is None:
        _cap = n
    if n == 0:
        return [()]
    out = []
    for k in range(min(n, _cap), 0, -1):
        for rest in partitions(n - k, k):
            out.append((k,) + rest)
    return out


def cycle_type(perm: tuple[int, ...]) -> tuple[int, ...]:
    """Cycle type of a permutation given as a tuple of 0-based images."""
    m = len(perm)
    seen = [False] * m
    lengths = []
    for start in range(m):
        if seen[start]:
            continue
        n, j = 0, start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            n += 1
        lengths.append(n)
    return tuple(sorted(lengths, reverse=True))


def compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Composition p*q acting as (p*q)(i) = p(q(i))."""
    return tuple(p[q[i]] for i in range(len(p)))


def inverse(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def identity(m: int) -> tuple[int, ...]:
    return tuple(range(m))


@lru_cache(maxsize=None)
def conjugacy_classes(m: int) -> dict[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Map cycle type -> all permutations of S_m with that type.

    Full enumeration; intended for the small m (<= 6 or so) that arise here.
    """
    classes: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for p in permutations(range(m)):
        classes.setdefault(cycle_type(p), []).append(p)
    return {ct: tuple(ps) for ct, ps in classes.items()}


def class_size(ct: tuple[int, ...]) -> int:
    """|K| = m! / z_ct with z the size of the centralizer."""
    m = sum(ct)
    z = 1
    mult: dict[int, int] = {}
    for length in ct:
        z *= length
        mult[length] = mult.get(length, 0) + 1
    for k in mult.values():
        z *= factorial(k)
    return factorial(m) // z


def _conjugate_partition(lam: tuple[int, ...]) -> tuple[int, ...]:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def hook_length(lam: tuple[int, ...], i: int, j: int) -> int:
    conj = _conjugate_partition(lam)
    return lam[i] - j + conj[j] - i - 1


def symmetric_group_dimension(lam: tuple[int, ...]) -> int:
    """Dimension f^lam of the S_m irrep labelled by lam (hook-length formula)."""
    n = sum(lam)
    d = factorial(n)
    for i, row in enumerate(lam):
        for j in range(row):
            d //= hook_length(lam, i, j)
    return d


def unitary_group_dimension(lam: tuple[int, ...], n: int) -> int:
    """Dimension of the U(n) irrep with highest weight lam; 0 if lam has > n rows."""
    if len(lam) > n:
        return 0
    val = Fraction(1)
    for i, row in enumerate(lam):
        for j in range(row):
            val *= Fraction(n + j - i, hook_length(lam, i, j))
    assert val.denominator == 1
    return int(val)


def _beta_set(lam: tuple[int, ...]) -> tuple[int, ...]:
    ell = len(lam)
    return tuple(lam[i] + (ell - 1 - i) for i in range(ell))


def _partition_from_beta(beta: list[int]) -> tuple[int, ...]:
    beta = sorted(beta, reverse=True)
    ell = len(beta)
    lam = tuple(beta[i] - (ell - 1 - i) for i in range(ell))
    return tuple(x for x in lam if x > 0)


@lru_cache(maxsize=None)
def character(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Irreducible S_m character chi^lam evaluated on cycle type mu.

    Murnaghan-Nakayama recursion in the beta-set picture: removing a border
    strip of length k is subtracting k from one first-column hook length,
    with sign (-1)^(number of hooks jumped).
    """
    if sum(lam) != sum(mu):
        raise ValueError("partition sizes differ")
    if not mu:
        return 1
    k = mu[0]
    beta = _beta_set(lam)
    in_beta = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in in_beta:
            continue
        height = sum(1 for x in beta if nb < x < b)
        newbeta = [x for x in beta if x != b] + [nb]
        total += (-1) ** height * character(_partition_from_beta(newbeta), mu[1:])
    return total
