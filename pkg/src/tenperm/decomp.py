"""Kruskal (CP) and Tucker representations, their transpose transforms, and
two fitting algorithms.

Both factored forms transform under a mode permutation without touching any
numbers: a Kruskal form permutes its factor list, a Tucker form additionally
transposes its core.  Reconstruction commutes with transposition in either
form, which is what makes the representation rank of a tensor invariant
under every transpose.

The fitting routines (``cp_als``, ``hosvd``) are ordinary workhorses layered
on the in-repo matrix kernel; they carry no novelty and no guarantees beyond
the ones documented on each function.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .dense import transpose
from .linalg import gram, jacobi_eigh, solve_spd
from .multilinear import frobenius_norm, nmode_product, outer_product
from .perm import Permutation

__all__ = [
    "KruskalTensor",
    "TuckerTensor",
    "kruskal_reconstruct",
    "kruskal_transpose",
    "tucker_reconstruct",
    "tucker_transpose",
    "mode_unfold",
    "hosvd",
    "cp_als",
]


def _factor_matrices(factors: Sequence[np.ndarray]) -> tuple[np.ndarray, ...]:
    mats = []
    for k, f in enumerate(factors, start=1):
        f = np.array(f, dtype=np.float64, copy=True)
        if f.ndim != 2 or f.shape[0] < 1 or f.shape[1] < 1:
            raise ValueError(f"factor {k} must be a non-empty order-2 tensor")
        mats.append(f)
    return tuple(mats)


@dataclass(frozen=True, eq=False)
class KruskalTensor:
    """A sum of R rank-one tensors, stored as N factor matrices of shape I_k x R.

    Column r of every factor together defines the r-th rank-one term; there
    is no separate weight vector, norms live in the columns.
    """

    factors: tuple[np.ndarray, ...]

    def __post_init__(self) -> None:
        factors = _factor_matrices(self.factors)
        if len(factors) == 0:
            raise ValueError("a Kruskal tensor needs at least one factor matrix")
        ranks = {f.shape[1] for f in factors}
        if len(ranks) > 1:
            raise ValueError(
                f"factor column counts differ: {[f.shape[1] for f in factors]}"
            )
        object.__setattr__(self, "factors", factors)

    @property
    def order(self) -> int:
        return len(self.factors)

    @property
    def rank(self) -> int:
        return self.factors[0].shape[1]

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(f.shape[0] for f in self.factors)


@dataclass(frozen=True, eq=False)
class TuckerTensor:
    """A core tensor of shape (J_1, ..., J_N) with factor matrices I_k x J_k."""

    core: np.ndarray
    factors: tuple[np.ndarray, ...]

    def __post_init__(self) -> None:
        core = np.array(self.core, dtype=np.float64, copy=True)
        factors = _factor_matrices(self.factors)
        if core.ndim != len(factors):
            raise ValueError(
                f"core order {core.ndim} does not match {len(factors)} factor matrices"
            )
        for k, f in enumerate(factors, start=1):
            if f.shape[1] != core.shape[k - 1]:
                raise ValueError(
                    f"factor {k} has {f.shape[1]} columns, core mode {k} has "
                    f"size {core.shape[k - 1]}"
                )
        object.__setattr__(self, "core", core)
        object.__setattr__(self, "factors", factors)

    @property
    def order(self) -> int:
        return len(self.factors)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(f.shape[0] for f in self.factors)


def kruskal_reconstruct(k: KruskalTensor) -> np.ndarray:
    """Dense tensor equal to the sum of the rank-one terms, added in column order."""
    out = np.zeros(k.shape)
    for r in range(k.rank):
        out += outer_product([f[:, r] for f in k.factors])
    return out


def kruskal_transpose(k: KruskalTensor, sigma: Permutation) -> KruskalTensor:
    """Permute the factor list: factor at position p becomes the old factor sigma(p).

    Pure bookkeeping, no numeric work; reconstruction commutes with
    :func:`tenperm.dense.transpose` under the same permutation, and the
    number of rank-one terms is untouched.
    """
    if sigma.n != k.order:
        raise ValueError(
            f"permutation degree {sigma.n} does not match tensor order {k.order}"
        )
    return KruskalTensor(tuple(k.factors[image - 1] for image in sigma.images))


def tucker_reconstruct(t: TuckerTensor) -> np.ndarray:
    """Contract the core with every factor matrix, modes ascending."""
    out = t.core
    for mode, factor in enumerate(t.factors, start=1):
        out = nmode_product(out, mode, factor)
    return out


def tucker_transpose(t: TuckerTensor, sigma: Permutation) -> TuckerTensor:
    """Transpose the core and permute the factor list by the same permutation."""
    if sigma.n != t.order:
        raise ValueError(
            f"permutation degree {sigma.n} does not match tensor order {t.order}"
        )
    return TuckerTensor(
        transpose(t.core, sigma),
        tuple(t.factors[image - 1] for image in sigma.images),
    )


def mode_unfold(x: np.ndarray, n: int) -> np.ndarray:
    """Matricize along mode ``n``: rows carry mode n, columns the other modes
    with earlier modes varying fastest.

    Entry (i_1, ..., i_N) lands at row i_n and 1-based column
    ``1 + sum_{k != n} (i_k - 1) * prod(I_m for m < k, m != n)``.
    """
    x = np.asarray(x, dtype=np.float64)
    if not 1 <= n <= x.ndim:
        raise ValueError(f"mode {n} is out of range 1..{x.ndim}")
    moved = np.moveaxis(x, n - 1, 0)
    return np.ascontiguousarray(moved.reshape(x.shape[n - 1], -1, order="F"))


def hosvd(x: np.ndarray, ranks: Sequence[int]) -> TuckerTensor:
    """Higher-order SVD: factor k holds the top eigenvectors of the mode-k
    unfolding's outer Gram matrix, the core is the input contracted with the
    transposed factors.

    With full ranks the reconstruction matches the input to roundoff; with
    truncated ranks it is the usual HOSVD quasi-optimal approximation.
    """
    x = np.asarray(x, dtype=np.float64)
    ranks = tuple(int(r) for r in ranks)
    if len(ranks) != x.ndim:
        raise ValueError(f"expected {x.ndim} ranks, got {len(ranks)}")
    for k, (r, size) in enumerate(zip(ranks, x.shape), start=1):
        if not 1 <= r <= size:
            raise ValueError(f"rank {r} at mode {k} is out of range 1..{size}")
    factors = []
    for k, r in enumerate(ranks, start=1):
        unfolding = mode_unfold(x, k)
        _, vectors = jacobi_eigh(gram(unfolding.T))
        factors.append(np.ascontiguousarray(vectors[:, :r]))
    core = x
    for k, factor in enumerate(factors, start=1):
        core = nmode_product(core, k, factor.T)
    return TuckerTensor(core, tuple(factors))


def _khatri_rao(mats: Sequence[np.ndarray]) -> np.ndarray:
    # Columnwise Kronecker products with the FIRST matrix's index fastest,
    # matching the mode_unfold column order.
    out = mats[0]
    for m in mats[1:]:
        out = (m[:, np.newaxis, :] * out[np.newaxis, :, :]).reshape(-1, out.shape[1])
    return out


def cp_als(
    x: np.ndarray,
    rank: int,
    max_iter: int = 500,
    tol: float = 1e-10,
    seed: int = 0,
    return_errors: bool = False,
) -> KruskalTensor | tuple[KruskalTensor, list[float]]:
    """Fit a rank-``rank`` Kruskal form by alternating least squares.

    Each sweep updates every factor in ascending mode order from the normal
    equations of the unfolded problem (Hadamard product of the other
    factors' Gram matrices on the left, matricized-tensor-times-Khatri-Rao
    on the right).  Iteration stops when the relative fit error changes by
    at most ``tol`` between sweeps, or after ``max_iter`` sweeps.  The fit
    error never increases beyond roundoff from one sweep to the next; no
    optimality of the final fit is guaranteed.

    Factors start from a seeded random draw with unit columns, so runs are
    reproducible.  With ``return_errors=True`` also returns the per-sweep
    relative fit errors.  The zero tensor short-circuits to zero factors.
    """
    x = np.asarray(x, dtype=np.float64)
    if rank < 1:
        raise ValueError("rank must be at least 1")
    if x.ndim < 1:
        raise ValueError("tensor must have order at least 1")
    norm_x = frobenius_norm(x)
    if norm_x == 0.0:
        kt = KruskalTensor(tuple(np.zeros((size, rank)) for size in x.shape))
        return (kt, [0.0]) if return_errors else kt
    if x.ndim == 1:
        # Degenerate order-1 problem: the first column alone is an exact fit.
        f = np.zeros((x.shape[0], rank))
        f[:, 0] = x
        kt = KruskalTensor((f,))
        return (kt, [0.0]) if return_errors else kt

    rng = np.random.default_rng(seed)
    factors = []
    for size in x.shape:
        f = rng.standard_normal((size, rank))
        factors.append(f / np.sqrt((f * f).sum(axis=0)))

    unfoldings = [mode_unfold(x, n) for n in range(1, x.ndim + 1)]
    errors: list[float] = []
    for _ in range(max_iter):
        for n in range(x.ndim):
            others = [factors[k] for k in range(x.ndim) if k != n]
            lhs = np.ones((rank, rank))
            for f in others:
                lhs = lhs * gram(f)
            mttkrp = unfoldings[n] @ _khatri_rao(others)
            factors[n] = solve_spd(lhs, mttkrp.T).T
        fit = kruskal_reconstruct(KruskalTensor(tuple(factors)))
        errors.append(frobenius_norm(x - fit) / norm_x)
        if len(errors) >= 2 and abs(errors[-2] - errors[-1]) <= tol:
            break
    kt = KruskalTensor(tuple(factors))
    return (kt, errors) if return_errors else kt
