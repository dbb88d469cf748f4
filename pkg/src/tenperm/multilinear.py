"""Tensor-matrix and tensor-tensor products: n-mode products, outer and inner
products, the Frobenius norm, and the vector-valued multilinear maps used by
the eigenpair equations.

Each contraction runs through one fixed kernel, so a given call is
reproducible run to run; identities that reassociate sums hold to roundoff,
not bitwise.
"""

from __future__ import annotations

import math
from functools import reduce
from typing import Sequence

import numpy as np

__all__ = [
    "nmode_product",
    "outer_product",
    "inner_product",
    "frobenius_norm",
    "homogeneous_value",
    "multilinear_map",
]


def nmode_product(x: np.ndarray, n: int, u: np.ndarray) -> np.ndarray:
    """Contract mode ``n`` of ``x`` with the columns of the matrix ``u``.

    With ``x`` of shape (I_1, ..., I_N) and ``u`` of shape (J, I_n), the
    result has shape (I_1, ..., I_{n-1}, J, I_{n+1}, ..., I_N) and entries

        out(i_1, ..., j, ..., i_N) = sum over i_n of x(i_1, ..., i_N) * u(j, i_n)

    For matrices this reduces to ``nmode_product(a, 1, b) == b @ a`` and
    ``nmode_product(a, 2, b) == a @ b.T``.

    >>> a = build((2, 2), (1, 2, 3, 4))
    >>> b = build((2, 2), (0, 1, 1, 0))
    >>> nmode_product(a, 1, b)
    array([[3., 4.],
           [1., 2.]])
    """
    x = np.asarray(x, dtype=np.float64)
    u = np.asarray(u, dtype=np.float64)
    if u.ndim != 2:
        raise ValueError(f"expected an order-2 tensor (matrix), got order {u.ndim}")
    if not 1 <= n <= x.ndim:
        raise ValueError(f"mode {n} is out of range 1..{x.ndim}")
    if u.shape[1] != x.shape[n - 1]:
        raise ValueError(
            f"inner dimension mismatch: matrix has {u.shape[1]} columns, "
            f"mode {n} has size {x.shape[n - 1]}"
        )
    y = np.tensordot(x, u, axes=((n - 1,), (1,)))  # contracted mode lands last
    return np.ascontiguousarray(np.moveaxis(y, -1, n - 1))


def outer_product(vectors: Sequence[np.ndarray]) -> np.ndarray:
    """Outer product of order-1 tensors; entry (i_1, ..., i_N) is the product
    of the k-th vector at i_k.  A single vector comes back unchanged."""
    if len(vectors) == 0:
        raise ValueError("outer product needs at least one vector")
    vs = []
    for k, v in enumerate(vectors, start=1):
        v = np.asarray(v, dtype=np.float64)
        if v.ndim != 1 or v.size == 0:
            raise ValueError(f"argument {k} must be a non-empty order-1 tensor")
        vs.append(v)
    return reduce(np.multiply.outer, vs).copy()


def inner_product(a: np.ndarray, b: np.ndarray) -> float:
    """Sum of elementwise products of two same-shaped tensors."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return float(np.dot(a.ravel(), b.ravel()))


def frobenius_norm(a: np.ndarray) -> float:
    """Square root of the self inner product."""
    a = np.asarray(a, dtype=np.float64)
    return math.sqrt(inner_product(a, a))


def _require_cubical(a: np.ndarray) -> int:
    if a.ndim < 1 or len(set(a.shape)) > 1:
        raise ValueError(f"tensor with shape {a.shape} is not cubical")
    return a.shape[0]


def _contract_first(y: np.ndarray, x: np.ndarray) -> np.ndarray:
    # Contract mode 1 with x viewed as a 1-row matrix, then drop the
    # singleton mode it leaves behind.
    return nmode_product(y, 1, x[np.newaxis, :])[0]


def homogeneous_value(a: np.ndarray, x: np.ndarray) -> float:
    """Value of the degree-K form attached to a cubical order-K tensor:
    every mode contracted with the same vector."""
    a = np.asarray(a, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64)
    n = _require_cubical(a)
    if x.ndim != 1 or x.size != n:
        raise ValueError(f"expected a vector of length {n}, got shape {x.shape}")
    y = a
    for _ in range(a.ndim):
        y = _contract_first(y, x)
    return float(y)


def multilinear_map(a: np.ndarray, i: int, x: np.ndarray) -> np.ndarray:
    """Contract every mode except ``i`` with ``x``, in ascending mode order.

    Returns the vector m with m(j) the sum over all other indices of
    ``a(..., j at slot i, ...)`` times the product of ``x`` at those indices.
    Pairing the result with ``x`` once more recovers ``homogeneous_value``.
    """
    a = np.asarray(a, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64)
    n = _require_cubical(a)
    if not 1 <= i <= a.ndim:
        raise ValueError(f"mode {i} is out of range 1..{a.ndim}")
    if x.ndim != 1 or x.size != n:
        raise ValueError(f"expected a vector of length {n}, got shape {x.shape}")
    y = a
    for _ in range(i - 1):
        y = _contract_first(y, x)
    # Mode i now sits first; contract the remaining trailing modes.
    for _ in range(a.ndim - i):
        y = nmode_product(y, 2, x[np.newaxis, :])[:, 0]
    return np.array(y, order="C", copy=True)
