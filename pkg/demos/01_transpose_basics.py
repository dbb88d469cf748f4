# Transposing tensors with permutations.
#
# A matrix transpose swaps the two modes of an order-2 tensor.  For higher
# order there is one transpose per non-identity permutation of the mode set,
# so an order-N tensor has N!-1 of them.  This script walks through the
# permutation type, the transpose operator, and the bookkeeping around them.

import numpy as np

import tenperm as tp

# ---------------------------------------------------------------------------
# Permutations are 1-based image tuples.

sigma = tp.Permutation((2, 3, 1))  # the cycle 1 -> 2 -> 3 -> 1
tau = tp.Permutation.from_cycles(3, [(1, 2)])
print("sigma =", sigma.images, " tau =", tau.images)
print("tau after sigma =", tp.compose(tau, sigma).images)
print("sigma inverse   =", sigma.inverse().images)

# ---------------------------------------------------------------------------
# Build a small order-3 tensor; data is row-major, last index fastest.

x = tp.build((2, 2, 2), range(1, 9))
print("\nx(1,1,2) =", tp.element_at(x, (1, 1, 2)))

# Transposing by sigma puts old mode sigma(p) at position p: the entry at
# (i1, i2, i3) shows up at (i2, i3, i1).
y = tp.transpose(x, sigma)
print("y(1,2,1) =", tp.element_at(y, (1, 2, 1)), " (same value)")

# ---------------------------------------------------------------------------
# Order 3 is common enough that its five transposes have short names:
# the two 3-cycles T+ and T-, and the three mode swaps T1, T2, T3.

for name, perm in sorted(tp.NAMED_TRANSPOSES.items()):
    kind = tp.transpose_kind(perm)
    print(f"{name}: images {perm.images}, {kind.value} transpose")

# T+ and T- undo each other, the swaps undo themselves.
z = tp.named_transpose3(tp.named_transpose3(x, "T+"), "T-")
print("\nT- after T+ restores x bitwise:", np.array_equal(z, x))

# ---------------------------------------------------------------------------
# Transposes compose through permutation composition.  Note the order: doing
# sigma first and tau second matches compose(sigma, tau).

lhs = tp.transpose(tp.transpose(x, sigma), tau)
rhs = tp.transpose(x, tp.compose(sigma, tau))
print("composition law holds bitwise:", np.array_equal(lhs, rhs))

# ---------------------------------------------------------------------------
# A transpose is "total" when its permutation moves every mode, i.e. is a
# derangement.  Derangement counts grow like n!/e and are computed exactly.

print("\nderangements per degree:", [tp.derangement_count(n) for n in range(8)])
pairs = tp.enumerate_transposes(x)
total = sum(1 for s, _ in pairs if s.is_derangement)
print(f"an order-3 tensor has {len(pairs)} transposes, {total} of them total")

# ---------------------------------------------------------------------------
# A tensor that equals all of its transposes is supersymmetric.  Symmetrizing
# over the full group always produces one.

rng = np.random.default_rng(0)
a = rng.standard_normal((3, 3, 3))
sym = (sum(t for _, t in tp.enumerate_transposes(a)) + a) / 6.0
print("\nrandom tensor supersymmetric?   ", tp.is_supersymmetric(a))
print("symmetrized supersymmetric?     ", tp.is_supersymmetric(sym, tol=1e-12))
