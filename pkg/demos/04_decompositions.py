# Kruskal (CP) and Tucker forms, and how they transpose.
#
# Both factored representations turn a tensor transpose into pure
# bookkeeping: permute the factor list (and transpose the small core, for
# Tucker).  No arithmetic on the big tensor is needed, and the number of
# rank-one terms never changes, which is why representation rank is
# invariant under every transpose.

import numpy as np

import tenperm as tp

rng = np.random.default_rng(3)

# ---------------------------------------------------------------------------
# Fit a CP model to an exactly rank-2 tensor.

factors = []
for size in (4, 4, 4):
    f = rng.standard_normal((size, 2))
    factors.append(f / np.sqrt((f * f).sum(axis=0)))
target = tp.kruskal_reconstruct(tp.KruskalTensor(tuple(factors)))

kt, errors = tp.cp_als(target, rank=2, seed=5, return_errors=True)
print(f"cp_als: {len(errors)} sweeps, final relative error {errors[-1]:.2e}")
print("fit error never increases:", bool(np.all(np.diff(errors) <= 1e-12)))

# ---------------------------------------------------------------------------
# Transposing the Kruskal form = permuting its factor matrices.

sigma = tp.Permutation((3, 1, 2))
moved = tp.kruskal_transpose(kt, sigma)
direct = tp.transpose(tp.kruskal_reconstruct(kt), sigma)
print("kruskal transpose commutes with reconstruction:",
      np.max(np.abs(tp.kruskal_reconstruct(moved) - direct)) < 1e-12)
print("terms before/after:", kt.rank, "/", moved.rank)

# ---------------------------------------------------------------------------
# Tucker: a small core contracted with one factor per mode.  Full ranks
# reproduce the input; truncated ranks compress it.

x = rng.standard_normal((4, 5, 6))
full = tp.hosvd(x, (4, 5, 6))
err_full = tp.frobenius_norm(tp.tucker_reconstruct(full) - x) / tp.frobenius_norm(x)
small = tp.hosvd(x, (2, 3, 3))
err_small = tp.frobenius_norm(tp.tucker_reconstruct(small) - x) / tp.frobenius_norm(x)
print(f"\nhosvd full ranks: relative error {err_full:.2e}")
print(f"hosvd ranks (2,3,3): core {small.core.shape}, relative error {err_small:.2f}")

# ---------------------------------------------------------------------------
# Transposing the Tucker form transposes the core and permutes the factors.

tt_moved = tp.tucker_transpose(small, sigma)
lhs = tp.tucker_reconstruct(tt_moved)
rhs = tp.transpose(tp.tucker_reconstruct(small), sigma)
print("tucker transpose commutes with reconstruction:",
      np.max(np.abs(lhs - rhs)) < 1e-12)

# Round trip through the inverse permutation restores the exact objects.
back = tp.tucker_transpose(tt_moved, sigma.inverse())
print("inverse transpose restores the core bitwise:",
      np.array_equal(back.core, small.core))
