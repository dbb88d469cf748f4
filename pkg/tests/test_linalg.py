import numpy as np
import pytest

from helpers import rel_err

from tenperm import (
    SingularSystemError,
    gram,
    jacobi_eigh,
    matmul,
    solve_spd,
)


def random_spd(rng, n):
    r = rng.standard_normal((n, n))
    return r.T @ r + n * np.eye(n)


class TestMatmul:
    def test_identity(self):
        a = np.arange(6.0).reshape(2, 3)
        assert np.array_equal(matmul(np.eye(2), a), a)

    def test_hand_product(self):
        a = np.array([[0.0, 1.0], [1.0, 0.0]])
        b = np.array([[1.0, 2.0], [3.0, 4.0]])
        assert matmul(a, b).tolist() == [[3.0, 4.0], [1.0, 2.0]]

    def test_zero_annihilates(self):
        a = np.arange(4.0).reshape(2, 2)
        assert np.array_equal(matmul(a, np.zeros((2, 3))), np.zeros((2, 3)))

    def test_inner_dimension_mismatch(self):
        with pytest.raises(ValueError):
            matmul(np.ones((2, 3)), np.ones((2, 3)))

    def test_associativity_exact_on_integers(self):
        rng = np.random.default_rng(0)
        for _ in range(20):
            a = rng.integers(-5, 6, (4, 3)).astype(float)
            b = rng.integers(-5, 6, (3, 5)).astype(float)
            c = rng.integers(-5, 6, (5, 2)).astype(float)
            assert np.array_equal(matmul(matmul(a, b), c), matmul(a, matmul(b, c)))


class TestGram:
    def test_identity(self):
        assert np.array_equal(gram(np.eye(3)), np.eye(3))

    def test_hand_value(self):
        assert gram(np.array([[1.0, 2.0], [3.0, 4.0]])).tolist() == [
            [10.0, 14.0],
            [14.0, 20.0],
        ]

    def test_zero(self):
        assert np.array_equal(gram(np.zeros((3, 2))), np.zeros((2, 2)))

    def test_positive_semidefinite(self):
        rng = np.random.default_rng(1)
        g = gram(rng.standard_normal((5, 3)))
        assert np.array_equal(g, g.T)
        w, _ = jacobi_eigh(g)
        assert np.min(w) >= -1e-12


class TestJacobiEigh:
    def test_identity_matrix(self):
        w, v = jacobi_eigh(np.eye(4))
        assert np.array_equal(w, np.ones(4))
        assert np.array_equal(v, np.eye(4))

    def test_two_by_two(self):
        w, v = jacobi_eigh(np.array([[2.0, 1.0], [1.0, 2.0]]))
        assert np.max(np.abs(w - np.array([3.0, 1.0]))) <= 1e-10
        s = 1.0 / np.sqrt(2.0)
        assert np.max(np.abs(v[:, 0] - np.array([s, s]))) <= 1e-10
        assert np.max(np.abs(v[:, 1] - np.array([s, -s]))) <= 1e-10

    def test_already_diagonal(self):
        w, v = jacobi_eigh(np.diag([5.0, 3.0, 1.0]))
        assert w.tolist() == [5.0, 3.0, 1.0]
        assert np.array_equal(v, np.eye(3))

    def test_descending_order_and_sign_fix(self):
        rng = np.random.default_rng(2)
        s = rng.standard_normal((7, 7))
        s = s + s.T
        w, v = jacobi_eigh(s)
        assert all(w[i] >= w[i + 1] for i in range(6))
        for j in range(7):
            k = int(np.argmax(np.abs(v[:, j])))
            assert v[k, j] > 0

    @pytest.mark.parametrize("n", [2, 3, 8, 12])
    def test_against_library_oracle(self, n):
        rng = np.random.default_rng(n)
        s = rng.standard_normal((n, n))
        s = s + s.T
        w, v = jacobi_eigh(s)
        expected = np.sort(np.linalg.eigvalsh(s))[::-1]
        assert np.max(np.abs(w - expected)) <= 1e-10 * max(1.0, np.max(np.abs(expected)))
        assert np.max(np.abs(v.T @ v - np.eye(n))) <= 1e-10
        recon = v @ np.diag(w) @ v.T
        assert rel_err(recon, s) <= 1e-10

    def test_eigenvalues_invariant_under_symmetric_permutation(self):
        rng = np.random.default_rng(3)
        s = rng.standard_normal((6, 6))
        s = s + s.T
        p = np.eye(6)[rng.permutation(6)]
        w1, _ = jacobi_eigh(s)
        w2, _ = jacobi_eigh(p.T @ s @ p)
        assert np.max(np.abs(w1 - w2)) <= 1e-10

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            jacobi_eigh(np.array([[1.0, 2.0], [0.0, 1.0]]))

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            jacobi_eigh(np.ones((2, 3)))

    def test_zero_matrix(self):
        w, v = jacobi_eigh(np.zeros((3, 3)))
        assert np.array_equal(w, np.zeros(3))
        assert np.array_equal(v, np.eye(3))


class TestSolveSpd:
    def test_identity_system(self):
        rhs = np.arange(6.0).reshape(3, 2)
        assert np.array_equal(solve_spd(np.eye(3), rhs), rhs)

    def test_diagonal_system(self):
        x = solve_spd(np.diag([2.0, 4.0]), np.array([[2.0], [4.0]]))
        assert np.allclose(x, np.array([[1.0], [1.0]]), atol=1e-12)

    @pytest.mark.parametrize("n", [2, 5, 10, 20])
    def test_random_spd_residual(self, n):
        rng = np.random.default_rng(n + 100)
        s = random_spd(rng, n)
        rhs = rng.standard_normal((n, 3))
        x = solve_spd(s, rhs)
        residual = np.sqrt(((s @ x - rhs) ** 2).sum())
        assert residual <= 1e-10 * max(1.0, np.sqrt((rhs**2).sum()))
        assert np.allclose(x, np.linalg.solve(s, rhs), atol=1e-8)

    def test_rank_deficient_regularized(self):
        s = np.diag([1.0, 0.0])
        rhs = np.array([[1.0], [0.0]])
        x = solve_spd(s, rhs)
        assert np.sqrt(((s @ x - rhs) ** 2).sum()) <= 1e-10

    def test_zero_system_is_singular(self):
        with pytest.raises(SingularSystemError):
            solve_spd(np.zeros((2, 2)), np.zeros((2, 1)))

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            solve_spd(np.array([[1.0, 2.0], [0.0, 1.0]]), np.ones((2, 1)))

    def test_row_count_mismatch(self):
        with pytest.raises(ValueError):
            solve_spd(np.eye(3), np.ones((2, 1)))
