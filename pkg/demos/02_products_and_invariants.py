# Products that interact nicely with tensor transposition.
#
# The n-mode product contracts one mode of a tensor with a matrix; inner
# products pair two tensors entrywise.  Both behave predictably when the
# tensors are transposed, which is what this script demonstrates.

import numpy as np

import tenperm as tp

rng = np.random.default_rng(1)

# ---------------------------------------------------------------------------
# For matrices the mode products are the familiar ones.

a = tp.build((2, 2), (1, 2, 3, 4))
b = tp.build((2, 2), (0, 1, 1, 0))
print("A x_1 B == B A   :", np.array_equal(tp.nmode_product(a, 1, b), b @ a))
print("A x_2 B == A B^T :", np.array_equal(tp.nmode_product(a, 2, b), a @ b.T))

# ---------------------------------------------------------------------------
# On higher order tensors the matrix multiplies into the chosen mode.

x = rng.standard_normal((3, 4, 5))
u = rng.standard_normal((7, 4))
y = tp.nmode_product(x, 2, u)
print("\nshape of (3,4,5) x_2 (7x4):", y.shape)

# Transposing first works too, provided the mode index is relabeled through
# the permutation: mode n of x is mode sigma^-1(n) of transpose(x, sigma).
sigma = tp.Permutation((2, 3, 1))
lhs = tp.nmode_product(tp.transpose(x, sigma), sigma.inverse()(2), u)
rhs = tp.transpose(y, sigma)
print("transpose-then-multiply matches:", np.max(np.abs(lhs - rhs)) < 1e-12)

# ---------------------------------------------------------------------------
# Inner products and the Frobenius norm ignore simultaneous transposition:
# both sides just reorder the same sum.

p = rng.standard_normal((2, 3, 4))
q = rng.standard_normal((2, 3, 4))
base = tp.inner_product(p, q)
print("\n<p, q> =", round(base, 12))
for sigma in tp.enumerate_permutations(3):
    moved = tp.inner_product(tp.transpose(p, sigma), tp.transpose(q, sigma))
    assert abs(moved - base) <= 1e-12 * abs(base)
print("invariant under all 6 simultaneous transposes")
print("norm invariance:", tp.frobenius_norm(tp.transpose(p, sigma)) == tp.frobenius_norm(p))

# ---------------------------------------------------------------------------
# Rank-one tensors are outer products of vectors; their inner products
# factor mode by mode.

u1, v1 = rng.standard_normal(3), rng.standard_normal(4)
u2, v2 = rng.standard_normal(3), rng.standard_normal(4)
lhs = tp.inner_product(tp.outer_product([u1, v1]), tp.outer_product([u2, v2]))
rhs = float(np.dot(u1, u2) * np.dot(v1, v2))
print("\nouter-product inner products factor:", abs(lhs - rhs) < 1e-12)
