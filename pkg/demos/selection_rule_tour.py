"""The 9x9 fixture, the pi -> v substitution, and the selection rule.

The published mean of two-fold tensor products of three-level states has
entries r + s/pi.  Replacing pi by a free parameter v leaves every
eigenvector fixed while the four unrepeated eigenvalues move; sending
v -> infinity (equivalently, deleting the rational/pi entries) collapses the
spectrum onto a sextet and an antitriplet -- exactly the invariant mean the
permutation-span oracle computes.
"""

import math

import numpy as np

from rhomean import (
    cluster_spectrum,
    eigenvector_check,
    get_fixture,
    haar_mean,
    hermitian_eig,
    selection_rule,
    substitute_v,
)
from rhomean.fixtures import N3M2_PSD_THRESHOLD, N3M2_SPECIAL_V, spectrum_values

fix = get_fixture("n3m2")
print("fixture n3m2: 9x9 symmetric, entries r + s/pi, g = 1/(864 pi) =",
      f"{1 / (864 * math.pi):.9f}")

# at v = pi this is the published matrix
mat = substitute_v(fix.matrix, math.pi)
vals, vecs = hermitian_eig(mat)
dec = cluster_spectrum(vals, vecs, cluster_tol=1e-9)
print("\nclustered spectrum at v = pi:")
for c in dec.clusters:
    print(f"  {c.value:.6f}  (x{c.multiplicity})")
print("published values:", [round(v, 6) for v, _ in spectrum_values(fix.spectrum)])

# the published eigenvectors: residuals at machine precision
vecsets = get_fixture("n3m2.vecs").vectors
for v, ev in zip(vecsets["isolated"].vectors, vecsets["isolated"].eigenvalues):
    print("isolated eigenvector residual:",
          f"{eigenvector_check(mat, v, ev.value()):.2e}  at lambda = {ev.value():.6f}")

# the same vectors stay eigenvectors for every v
print("\nv-independence of the one-dimensional eigenspaces:")
for v_param in (1.0, math.pi, 10.0):
    worst = max(
        eigenvector_check(substitute_v(fix.matrix, v_param), vec, ev.value(v_param))
        for vec, ev in zip(vecsets["isolated"].vectors, vecsets["isolated"].eigenvalues)
    )
    print(f"  v = {v_param:8.5f}: worst residual {worst:.2e}")

print("\nthe family is PSD for |v| >=", f"{N3M2_PSD_THRESHOLD:.7f}")
for v_param in N3M2_SPECIAL_V:
    eigs = np.linalg.eigvalsh(substitute_v(fix.matrix, v_param))
    print(f"  at v = {v_param:.6f} two unrepeated eigenvalues land on "
          f"1/12 and 1/6: {sorted(round(x, 6) for x in eigs)}")

# selection rule: delete the 1/pi parts and compare with the invariant mean
limit = selection_rule(fix.matrix)
oracle = haar_mean(3, 2, 0)
print("\nselection rule == exact invariant mean:", bool(np.all(limit == oracle.mean)))
print("limit spectrum:", [(str(v), k) for v, k in oracle.spectrum()],
      " <- sextet + antitriplet")

# the 27x27 case works the same way
fix27 = get_fixture("n3m3.partial")
oracle27 = haar_mean(3, 3, 0)
print("\n27x27 selection rule == invariant mean:",
      bool(np.all(selection_rule(fix27.matrix) == oracle27.mean)))
print("limit spectrum:", [(str(v), k) for v, k in oracle27.spectrum()])
