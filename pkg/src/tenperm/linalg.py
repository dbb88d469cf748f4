"""Small dense matrix kernel backing the decomposition algorithms.

The two algorithmic routines, the cyclic Jacobi eigensolver and the pivoted
Gaussian solver, are implemented here rather than delegated to LAPACK, so
their sweep and pivot order is fixed and runs are reproducible.  Plain
products go through the array library like everywhere else.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import NoConvergenceError, SingularSystemError

__all__ = ["matmul", "gram", "jacobi_eigh", "solve_spd"]

_JACOBI_SWEEP_CAP = 100
_SYMMETRY_RTOL = 1e-12
_PIVOT_RTOL = 1e-12


def _as_matrix(a: np.ndarray, name: str = "argument") -> np.ndarray:
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2:
        raise ValueError(f"{name} must be an order-2 tensor, got order {a.ndim}")
    return a


def _check_symmetric(s: np.ndarray) -> None:
    scale = float(np.max(np.abs(s))) if s.size else 0.0
    if s.shape[0] != s.shape[1]:
        raise ValueError(f"matrix of shape {s.shape} is not square")
    if float(np.max(np.abs(s - s.T))) > _SYMMETRY_RTOL * scale:
        raise ValueError("matrix is not symmetric")


def _frobenius(a: np.ndarray) -> float:
    return math.sqrt(float((a * a).sum()))


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product with the usual inner-dimension check."""
    a = _as_matrix(a, "left factor")
    b = _as_matrix(b, "right factor")
    if a.shape[1] != b.shape[0]:
        raise ValueError(
            f"inner dimension mismatch: {a.shape[1]} columns vs {b.shape[0]} rows"
        )
    return a @ b


def gram(a: np.ndarray) -> np.ndarray:
    """The Gram matrix A^T A (symmetric positive semidefinite)."""
    a = _as_matrix(a)
    return a.T @ a


def jacobi_eigh(s: np.ndarray, tol: float = 1e-12) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps the strict upper triangle in row-major order, rotating each pivot
    pair to zero, until the off-diagonal Frobenius mass drops below
    ``tol`` times the Frobenius norm of the input (cap: 100 sweeps).

    Returns ``(w, v)`` with eigenvalues ``w`` sorted descending and
    orthonormal eigenvectors in the columns of ``v``, each column's sign
    fixed so its largest-magnitude entry is positive; ``v @ diag(w) @ v.T``
    reconstructs the input to roundoff.
    """
    a = _as_matrix(s, "matrix").copy()
    _check_symmetric(a)
    n = a.shape[0]
    a = (a + a.T) / 2.0  # exact for already-symmetric input
    v = np.eye(n)
    norm_all = _frobenius(a)

    converged = False
    for _ in range(_JACOBI_SWEEP_CAP):
        hollow = a.copy()
        np.fill_diagonal(hollow, 0.0)
        off = _frobenius(hollow)
        if off <= tol * norm_all:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                # hypot keeps huge theta (tiny pivots) from overflowing.
                if theta >= 0.0:
                    t = 1.0 / (theta + math.hypot(1.0, theta))
                else:
                    t = 1.0 / (theta - math.hypot(1.0, theta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                sn = t * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - sn * col_q
                a[:, q] = sn * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - sn * row_q
                a[q, :] = sn * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                vec_p, vec_q = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vec_p - sn * vec_q
                v[:, q] = sn * vec_p + c * vec_q
    if not converged:
        raise NoConvergenceError(
            f"Jacobi eigensolver did not converge in {_JACOBI_SWEEP_CAP} sweeps",
            iterations=_JACOBI_SWEEP_CAP,
            residual=off,
        )

    w = np.diag(a).copy()
    order = np.argsort(-w, kind="stable")
    w = w[order]
    v = np.ascontiguousarray(v[:, order])
    for j in range(n):
        k = int(np.argmax(np.abs(v[:, j])))
        if v[k, j] < 0.0:
            v[:, j] = -v[:, j]
    return w, v


def _gauss_solve(s: np.ndarray, rhs: np.ndarray, pivot_floor: float) -> np.ndarray | None:
    """Gaussian elimination with partial pivoting; None when a pivot falls
    at or below the floor."""
    n = s.shape[0]
    aug = np.concatenate([s.astype(np.float64, copy=True), rhs], axis=1)
    for col in range(n):
        pivot_row = col + int(np.argmax(np.abs(aug[col:, col])))
        if abs(aug[pivot_row, col]) <= pivot_floor:
            return None
        if pivot_row != col:
            aug[[col, pivot_row]] = aug[[pivot_row, col]]
        factors = aug[col + 1 :, col] / aug[col, col]
        aug[col + 1 :, col:] -= factors[:, np.newaxis] * aug[col, col:]
    x = np.zeros((n, rhs.shape[1]))
    for row in range(n - 1, -1, -1):
        x[row] = (aug[row, n:] - aug[row, row + 1 : n] @ x[row + 1 :]) / aug[row, row]
    return x


def solve_spd(s: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Solve ``s @ x == rhs`` for a symmetric positive (semi)definite matrix.

    Uses Gaussian elimination with partial pivoting.  If a pivot falls below
    ``1e-12 * max|s|`` the solve restarts once on the ridge-regularized
    matrix ``s + (1e-12 * trace(s) / n) * I`` so degenerate normal equations
    self-heal.  The returned solution always satisfies

        ||s @ x - rhs||_F <= 1e-10 * max(1, ||rhs||_F)

    against the *original* matrix, otherwise SingularSystemError is raised.
    """
    s = _as_matrix(s, "matrix")
    rhs = _as_matrix(rhs, "right-hand side")
    _check_symmetric(s)
    if rhs.shape[0] != s.shape[0]:
        raise ValueError(
            f"right-hand side has {rhs.shape[0]} rows, matrix has {s.shape[0]}"
        )
    pivot_floor = _PIVOT_RTOL * (float(np.max(np.abs(s))) if s.size else 0.0)
    x = _gauss_solve(s, rhs, pivot_floor)
    if x is None:
        ridge = _PIVOT_RTOL * float(np.trace(s)) / s.shape[0]
        x = _gauss_solve(s + ridge * np.eye(s.shape[0]), rhs, pivot_floor=0.0)
    if x is None:
        raise SingularSystemError("system is singular even after ridge regularization")
    residual = _frobenius(s @ x - rhs)
    if not residual <= 1e-10 * max(1.0, _frobenius(rhs)):
        raise SingularSystemError(
            f"solution residual {residual:.3e} exceeds the required bound"
        )
    return x
