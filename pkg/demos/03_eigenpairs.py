# l^p eigenpairs of cubical tensors.
#
# A cubical order-K tensor defines K families of eigenpairs: fix one mode,
# contract every other mode with the same vector x, and ask for the result
# to be proportional to the signed power map phi(x).  At p = 2 and order 2
# this is exactly the matrix eigenproblem.

import math

import numpy as np

import tenperm as tp

# ---------------------------------------------------------------------------
# The signed power map and its inverse.

x = np.array([2.0, -3.0])
print("phi(x, 3)          =", tp.phi(x, 3.0))          # signed squares
print("phi_inverse back   =", tp.phi_inverse(tp.phi(x, 3.0), 3.0))
print("phi(x, 2) is x     =", np.array_equal(tp.phi(x, 2.0), x))

# ---------------------------------------------------------------------------
# The all-ones 2x2x2 tensor has a closed-form eigenpair: the uniform unit
# vector with eigenvalue 2*sqrt(2).

ones = np.ones((2, 2, 2))
pair = tp.solve_power_iteration(ones, 1)
print("\nall-ones tensor, mode 1:")
print("  lambda =", pair.value, " (exact 2*sqrt(2) =", 2 * math.sqrt(2), ")")
print("  x      =", pair.vector)
print("  residual =", tp.residual(ones, pair))

# ---------------------------------------------------------------------------
# A superdiagonal tensor has the basis vectors as eigenvectors, with the
# diagonal entries as eigenvalues; which one the iteration finds depends on
# where it starts.

diag = np.zeros((2, 2, 2))
diag[0, 0, 0], diag[1, 1, 1] = 3.0, 5.0
for seed in (0, 1):
    pair = tp.solve_power_iteration(diag, 1, tp.SolverConfig(seed=seed))
    print(f"seed {seed}: lambda = {pair.value:.6f}, x = {pair.vector.round(6)}")

# The residual of a hand-built pair is zero exactly.
basis_pair = tp.EigenPair(mode=1, value=5.0, vector=np.array([0.0, 1.0]), p=2.0)
print("residual at (5, e2):", tp.residual(diag, basis_pair))

# ---------------------------------------------------------------------------
# Eigenpairs of a fixed mode survive any transpose that keeps that mode in
# place: the contraction sums are the same sums, reordered.

rng = np.random.default_rng(7)
a = rng.standard_normal((3, 3, 3))
keep_mode_1 = tp.Permutation((1, 3, 2))
v = rng.standard_normal(3)
m_original = tp.multilinear_map(a, 1, v)
m_transposed = tp.multilinear_map(tp.transpose(a, keep_mode_1), 1, v)
print("\nmode-1 map unchanged under a mode-1-fixing transpose:",
      np.max(np.abs(m_original - m_transposed)) < 1e-12)

# Contracting the map against the vector itself gives the value of the
# associated homogeneous form, whatever the mode.
form = tp.homogeneous_value(a, v)
print("form value recovered from every mode:",
      all(abs(float(np.dot(v, tp.multilinear_map(a, i, v))) - form) < 1e-12
          for i in (1, 2, 3)))
