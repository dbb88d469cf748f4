"""Dense tensors and permutation-driven transposition.

A dense tensor is a plain ``numpy.ndarray`` of ``float64`` in row-major (C)
order; the order of the tensor is ``ndim`` and mode k (1-based) is axis k-1.
The transpose of a tensor by a permutation ``sigma`` of its modes is the
tensor ``y`` with ``y.shape[p] == x.shape[sigma(p)]`` (1-based positions) and

    y(j1, ..., jN) == x(j_{sigma^-1(1)}, ..., j_{sigma^-1(N)})

which for order 2 and the swap (1 2) reduces to the matrix transpose.  All
transposes are eager copies; no views escape this module.
"""

from __future__ import annotations

import itertools
from enum import Enum
from math import prod
from typing import Iterable, Sequence

import numpy as np

from .perm import Permutation, enumerate_permutations

__all__ = [
    "TransposeKind",
    "NAMED_TRANSPOSES",
    "build",
    "element_at",
    "transpose",
    "named_transpose3",
    "transpose_kind",
    "is_supersymmetric",
    "enumerate_transposes",
    "MAX_SUPERSYMMETRY_ORDER",
    "MAX_TRANSPOSE_ENUMERATION_ORDER",
]

MAX_SUPERSYMMETRY_ORDER = 8
MAX_TRANSPOSE_ENUMERATION_ORDER = 6


class TransposeKind(Enum):
    """Classification of a transpose by its permutation: fixed-point-free or not."""

    TOTAL = "total"
    PARTIAL = "partial"


# The five standard transposes of an order-3 tensor, keyed by their short
# names: the two 3-cycles and the three mode swaps.
NAMED_TRANSPOSES: dict[str, Permutation] = {
    "T+": Permutation((2, 3, 1)),  # cycle 1->2->3->1
    "T-": Permutation((3, 1, 2)),  # cycle 1->3->2->1
    "T1": Permutation((1, 3, 2)),  # swap modes 2 and 3
    "T2": Permutation((3, 2, 1)),  # swap modes 1 and 3
    "T3": Permutation((2, 1, 3)),  # swap modes 1 and 2
}


def build(shape: Sequence[int], data: Iterable[float]) -> np.ndarray:
    """Assemble a tensor from its shape and row-major payload.

    ``data`` must hold exactly ``prod(shape)`` scalars, ordered with the last
    index varying fastest; ``element_at(build(shape, data), idx)`` then reads
    the payload at offset ``sum((idx[k]-1) * prod(shape[k+1:]))``.
    """
    shape = tuple(int(s) for s in shape)
    if len(shape) < 1 or any(s < 1 for s in shape):
        raise ValueError(f"shape {shape} must be a non-empty tuple of positive sizes")
    if not isinstance(data, np.ndarray):
        data = list(data)
    flat = np.asarray(data, dtype=np.float64).reshape(-1)
    if flat.size != prod(shape):
        raise ValueError(
            f"data length {flat.size} does not match shape {shape} "
            f"(expected {prod(shape)} values)"
        )
    return flat.reshape(shape).copy()


def element_at(x: np.ndarray, index: Sequence[int]) -> float:
    """Read one entry with a 1-based multi-index."""
    x = np.asarray(x, dtype=np.float64)
    index = tuple(int(i) for i in index)
    if len(index) != x.ndim:
        raise ValueError(f"index {index} has {len(index)} entries, tensor has order {x.ndim}")
    for k, (i, size) in enumerate(zip(index, x.shape), start=1):
        if not 1 <= i <= size:
            raise ValueError(f"index {i} at mode {k} is out of range 1..{size}")
    return float(x[tuple(i - 1 for i in index)])


def transpose(x: np.ndarray, sigma: Permutation) -> np.ndarray:
    """Rearrange modes by a permutation: mode ``sigma(p)`` of ``x`` becomes mode ``p``.

    The result ``y`` satisfies ``y.shape[p] == x.shape[sigma(p)]`` (1-based)
    and ``y(j1, ..., jN) == x(j_{sigma^-1(1)}, ..., j_{sigma^-1(N)})``; it is
    an eager row-major copy, so repeated transposition is bitwise exact.
    The identity permutation is accepted and returns a copy.

    Transposing twice composes through the permutations contravariantly:

        transpose(transpose(x, s), t) == transpose(x, compose(s, t))

    with ``compose(s, t)`` mapping i to s(t(i)).  Transposing by ``sigma``
    and then by ``sigma.inverse()`` always round-trips bitwise.

    >>> x = build((2, 2, 2), range(1, 9))
    >>> y = transpose(x, Permutation((2, 3, 1)))
    >>> element_at(x, (1, 1, 2)), element_at(y, (1, 2, 1))
    (2.0, 2.0)
    """
    x = np.asarray(x, dtype=np.float64)
    if sigma.n != x.ndim:
        raise ValueError(f"permutation degree {sigma.n} does not match tensor order {x.ndim}")
    axes = tuple(image - 1 for image in sigma.images)
    return np.array(np.transpose(x, axes), order="C", copy=True)


def named_transpose3(x: np.ndarray, name: str) -> np.ndarray:
    """One of the five standard order-3 transposes: ``T+``, ``T-``, ``T1``, ``T2``, ``T3``."""
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 3:
        raise ValueError(f"named transposes require an order-3 tensor, got order {x.ndim}")
    try:
        sigma = NAMED_TRANSPOSES[name]
    except KeyError:
        raise ValueError(
            f"unknown transpose name {name!r}; expected one of {sorted(NAMED_TRANSPOSES)}"
        ) from None
    return transpose(x, sigma)


def transpose_kind(sigma: Permutation) -> TransposeKind:
    """Classify the transpose for ``sigma``: TOTAL iff sigma has no fixed point.

    The identity permutation does not define a transpose and is rejected.
    """
    if sigma.is_identity:
        raise ValueError("the identity permutation is not a transpose")
    return TransposeKind.TOTAL if sigma.is_derangement else TransposeKind.PARTIAL


def is_supersymmetric(x: np.ndarray, tol: float = 0.0) -> bool:
    """True iff every mode permutation leaves the tensor unchanged within ``tol``.

    ``tol`` is an absolute elementwise bound; 0 demands exact equality.
    Non-cubical tensors are never supersymmetric (some transpose changes the
    shape) and return False without error.  Cubical orders above 8 are
    rejected rather than enumerating N! permutations.
    """
    x = np.asarray(x, dtype=np.float64)
    if tol < 0:
        raise ValueError("tolerance must be non-negative")
    if len(set(x.shape)) > 1:
        return False
    if x.ndim > MAX_SUPERSYMMETRY_ORDER:
        raise ValueError(
            f"order {x.ndim} too large to check by enumeration "
            f"(limit {MAX_SUPERSYMMETRY_ORDER})"
        )
    modes = tuple(range(x.ndim))
    for axes in itertools.permutations(modes):
        if axes == modes:
            continue
        if np.max(np.abs(x - np.transpose(x, axes))) > tol:
            return False
    return True


def enumerate_transposes(x: np.ndarray) -> list[tuple[Permutation, np.ndarray]]:
    """All N!-1 transposes of ``x`` paired with their permutations, in lexicographic order."""
    x = np.asarray(x, dtype=np.float64)
    if x.ndim > MAX_TRANSPOSE_ENUMERATION_ORDER:
        raise ValueError(
            f"order {x.ndim} too large to enumerate transposes "
            f"(limit {MAX_TRANSPOSE_ENUMERATION_ORDER})"
        )
    return [
        (sigma, transpose(x, sigma))
        for sigma in enumerate_permutations(x.ndim)
        if not sigma.is_identity
    ]
