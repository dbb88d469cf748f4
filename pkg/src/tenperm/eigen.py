"""Eigenpairs of cubical tensors under the l^p normalization.

A mode-i eigenpair of a cubical order-K tensor ``a`` is a scalar ``lam`` and
a unit-l^p vector ``x`` with

    multilinear_map(a, i, x) == lam * phi(x, p)

where ``phi`` is the componentwise signed power map with exponent p-1, so
p = 2 recovers classical matrix eigenpairs.  The defining equations come
with no algorithm attached; ``solve_power_iteration`` is a shifted
fixed-point iteration that finds one pair per call.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoConvergenceError
from .multilinear import multilinear_map

__all__ = [
    "EigenPair",
    "SolverConfig",
    "phi",
    "phi_inverse",
    "residual",
    "solve_power_iteration",
]


def phi(x: np.ndarray, p: float) -> np.ndarray:
    """Componentwise signed power map: sgn(x_j) * |x_j|**(p-1).

    The identity on vectors at p = 2.
    """
    if p <= 1:
        raise ValueError("exponent p must exceed 1")
    x = np.asarray(x, dtype=np.float64)
    return np.sign(x) * np.abs(x) ** (p - 1.0)


def phi_inverse(y: np.ndarray, p: float) -> np.ndarray:
    """Inverse of :func:`phi`: sgn(y_j) * |y_j|**(1/(p-1))."""
    if p <= 1:
        raise ValueError("exponent p must exceed 1")
    y = np.asarray(y, dtype=np.float64)
    return np.sign(y) * np.abs(y) ** (1.0 / (p - 1.0))


def _lp_norm(x: np.ndarray, p: float) -> float:
    return float((np.abs(x) ** p).sum()) ** (1.0 / p)


def _sign_fixed(x: np.ndarray) -> np.ndarray:
    # Resolve the +-x ambiguity: largest-magnitude entry made positive.
    k = int(np.argmax(np.abs(x)))
    return -x if x[k] < 0.0 else x


@dataclass(frozen=True, eq=False)
class EigenPair:
    """One mode-i eigenpair (lam, x) with x unit in the l^p norm."""

    mode: int
    value: float
    vector: np.ndarray
    p: float = 2.0

    def __post_init__(self) -> None:
        vector = np.array(self.vector, dtype=np.float64, copy=True)
        object.__setattr__(self, "vector", vector)
        if vector.ndim != 1 or vector.size == 0:
            raise ValueError("eigenvector must be a non-empty order-1 tensor")
        if self.p <= 1:
            raise ValueError("exponent p must exceed 1")
        if self.mode < 1:
            raise ValueError("mode must be a positive integer")
        mass = float((np.abs(vector) ** self.p).sum())
        if abs(mass - 1.0) > 1e-12:
            raise ValueError(
                f"eigenvector is not unit in the l^{self.p} norm (sum |x|^p = {mass!r})"
            )


@dataclass(frozen=True)
class SolverConfig:
    """Knobs for :func:`solve_power_iteration`; defaults favour robustness."""

    p: float = 2.0
    shift: float = 1.0
    tol: float = 1e-10
    max_iter: int = 1000
    seed: int = 0

    def __post_init__(self) -> None:
        if self.p <= 1:
            raise ValueError("exponent p must exceed 1")
        if self.shift < 0:
            raise ValueError("shift must be non-negative")
        if self.tol <= 0:
            raise ValueError("tolerance must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be at least 1")


def residual(a: np.ndarray, pair: EigenPair) -> float:
    """Scaled defect of the defining equation:
    ||multilinear_map(a, mode, x) - lam * phi(x, p)||_2 / max(1, |lam|)."""
    m = multilinear_map(a, pair.mode, pair.vector)
    defect = m - pair.value * phi(pair.vector, pair.p)
    return float(np.sqrt((defect * defect).sum())) / max(1.0, abs(pair.value))


def solve_power_iteration(
    a: np.ndarray, mode: int, cfg: SolverConfig = SolverConfig()
) -> EigenPair:
    """Find one mode-``mode`` eigenpair by shifted power iteration.

    Iterates

        x <- unit_lp( phi_inverse( multilinear_map(a, mode, x) + shift * phi(x, p), p ) )

    from a seeded random start (uniform entries, l^p-normalized, sign-fixed)
    until successive iterates differ by at most ``cfg.tol`` in the sup norm.
    The eigenvalue is read off as ``<x, multilinear_map(a, mode, x)>``, which
    is exact on a unit-l^p iterate because sum x_j * phi(x)_j == sum |x_j|^p.
    The returned pair is guaranteed to have ``residual <= 10 * cfg.tol``.

    If the update ever vanishes (for instance on the zero tensor) the current
    iterate solves the equation with eigenvalue 0 exactly and is returned.

    Raises NoConvergenceError, carrying the last iterate and its residual,
    when ``cfg.max_iter`` iterations do not reach tolerance.
    """
    a = np.asarray(a, dtype=np.float64)
    if a.ndim == 0:
        raise ValueError("tensor must have order at least 1")
    rng = np.random.default_rng(cfg.seed)
    x = rng.uniform(size=a.shape[0])
    x = _sign_fixed(x / _lp_norm(x, cfg.p))
    # Validates cubical shape, mode range, and vector length up front.
    m = multilinear_map(a, mode, x)

    for iteration in range(1, cfg.max_iter + 1):
        y = m + cfg.shift * phi(x, cfg.p)
        norm_y = _lp_norm(y, cfg.p)
        if norm_y == 0.0:
            # The update vanished, so x solves the equation exactly with
            # eigenvalue <x, m> (0 for the zero tensor, -shift otherwise).
            lam = float(np.dot(x, m))
            return EigenPair(mode=mode, value=lam, vector=x, p=cfg.p)
        x_next = phi_inverse(y, cfg.p)
        x_next = _sign_fixed(x_next / _lp_norm(x_next, cfg.p))
        step = float(np.max(np.abs(x_next - x)))
        x = x_next
        m = multilinear_map(a, mode, x)
        if step <= cfg.tol:
            lam = float(np.dot(x, m))
            pair = EigenPair(mode=mode, value=lam, vector=x, p=cfg.p)
            defect = residual(a, pair)
            if defect <= 10.0 * cfg.tol:
                return pair
            raise NoConvergenceError(
                f"iterates settled after {iteration} iterations but the residual "
                f"{defect:.3e} exceeds 10*tol",
                iterations=iteration,
                residual=defect,
                vector=x,
                value=lam,
            )
    lam = float(np.dot(x, m))
    try:
        defect = residual(a, EigenPair(mode=mode, value=lam, vector=x, p=cfg.p))
    except ValueError:
        defect = float("nan")
    raise NoConvergenceError(
        f"no convergence within {cfg.max_iter} iterations (tol {cfg.tol:g})",
        iterations=cfg.max_iter,
        residual=defect,
        vector=x,
        value=lam,
    )
