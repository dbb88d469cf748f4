"""Acceptance suite: one check per release criterion, at pinned tolerances.

Run under pytest (``pytest tests/test_acceptance.py -v -s``) or directly
(``python tests/test_acceptance.py``); either way each criterion reports one
PASS/FAIL line.
"""

import io
import itertools
import math
import sys
import tempfile
from pathlib import Path

import numpy as np
import pytest

from tenperm import (
    EigenPair,
    KruskalTensor,
    SolverConfig,
    TuckerTensor,
    build,
    compose,
    cp_als,
    derangement_count,
    element_at,
    enumerate_permutations,
    enumerate_transposes,
    frobenius_norm,
    hosvd,
    inner_product,
    jacobi_eigh,
    kruskal_reconstruct,
    kruskal_transpose,
    multilinear_map,
    named_transpose3,
    nmode_product,
    parse_tensor,
    residual,
    serialize_tensor,
    solve_power_iteration,
    transpose,
    tucker_reconstruct,
    tucker_transpose,
)
from tenperm.cli import run


def _bitwise(a, b):
    a, b = np.asarray(a), np.asarray(b)
    return a.shape == b.shape and a.tobytes() == b.tobytes()


def _rel(a, b):
    a, b = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
    scale = max(np.max(np.abs(a)), np.max(np.abs(b)), 1e-300)
    return float(np.max(np.abs(a - b))) / scale


def check_transpose_algebra():
    """Composition, inversion, and distinctness of transposes."""
    rng = np.random.default_rng(100)
    x = rng.standard_normal((2, 3, 4, 5))
    group = enumerate_permutations(4)
    for _ in range(100):
        sigma = group[rng.integers(len(group))]
        tau = group[rng.integers(len(group))]
        stacked = transpose(transpose(x, sigma), tau)
        assert _bitwise(stacked, transpose(x, compose(sigma, tau)))
    for sigma in group:
        assert _bitwise(transpose(transpose(x, sigma), sigma.inverse()), x)
    generic = rng.standard_normal((2, 3, 4))
    seen = {(generic.shape, generic.tobytes())}
    for _, y in enumerate_transposes(generic):
        key = (y.shape, y.tobytes())
        assert key not in seen
        seen.add(key)
    assert len(seen) == 6


def check_named_transposes():
    """The five order-3 inversion identities hold bitwise."""
    rng = np.random.default_rng(101)
    for shape in [(3, 4, 5), (2, 2, 2), (4, 2, 3)]:
        x = rng.standard_normal(shape)
        assert _bitwise(named_transpose3(named_transpose3(x, "T+"), "T-"), x)
        assert _bitwise(named_transpose3(named_transpose3(x, "T-"), "T+"), x)
        for name in ("T1", "T2", "T3"):
            assert _bitwise(named_transpose3(named_transpose3(x, name), name), x)


def check_derangement_counts():
    """Exact counting matches brute force, including the classic value 2 at degree 3."""
    for n in range(0, 9):
        brute = sum(1 for s in enumerate_permutations(n) if s.is_derangement)
        assert derangement_count(n) == brute
    assert derangement_count(3) == 2


def check_nmode_transpose_rule():
    """Contracting a transposed tensor at the relabeled mode commutes with
    transposition, to 1e-12 relative."""
    rng = np.random.default_rng(102)
    x = rng.standard_normal((3, 4, 5))
    for sigma in enumerate_permutations(3):
        if sigma.is_identity:
            continue
        inv = sigma.inverse()
        for n in (1, 2, 3):
            u = rng.standard_normal((7, x.shape[n - 1]))
            lhs = nmode_product(transpose(x, sigma), inv(n), u)
            rhs = transpose(nmode_product(x, n, u), sigma)
            assert _rel(lhs, rhs) <= 1e-12


def check_matrix_reductions():
    """Mode products on matrices reduce to matrix products, exactly on integers."""
    rng = np.random.default_rng(103)
    for _ in range(10):
        a = rng.integers(-9, 10, (3, 3)).astype(float)
        b = rng.integers(-9, 10, (3, 3)).astype(float)
        assert np.array_equal(nmode_product(a, 1, b), b @ a)
        assert np.array_equal(nmode_product(a, 2, b), a @ b.T)


def check_inner_product_and_norm_invariance():
    """Simultaneous transposition preserves inner products and norms, 1e-12 relative."""
    rng = np.random.default_rng(104)
    a = rng.standard_normal((2, 3, 4, 5))
    b = rng.standard_normal((2, 3, 4, 5))
    ip = inner_product(a, b)
    nrm = frobenius_norm(a)
    for sigma in enumerate_permutations(4):
        got = inner_product(transpose(a, sigma), transpose(b, sigma))
        assert abs(got - ip) <= 1e-12 * max(1.0, abs(ip))
        assert abs(frobenius_norm(transpose(a, sigma)) - nrm) <= 1e-12 * max(1.0, nrm)


def check_eigenpairs():
    """Closed-form eigenpairs are found and are transpose-invariant on the fixed mode."""
    ones = np.ones((2, 2, 2))
    pair = solve_power_iteration(ones, 1, SolverConfig(p=2.0))
    s = 1.0 / math.sqrt(2.0)
    assert abs(pair.value - 2.0 * math.sqrt(2.0)) <= 1e-8
    assert np.max(np.abs(pair.vector - np.array([s, s]))) <= 1e-8

    diag = np.zeros((2, 2, 2))
    diag[0, 0, 0], diag[1, 1, 1] = 3.0, 5.0
    for mode in (1, 2, 3):
        assert residual(diag, EigenPair(mode, 3.0, np.array([1.0, 0.0]))) == 0.0
        assert residual(diag, EigenPair(mode, 5.0, np.array([0.0, 1.0]))) == 0.0

    rng = np.random.default_rng(105)
    fixing_mode_1 = [s for s in enumerate_permutations(3) if s(1) == 1]
    assert len(fixing_mode_1) == 2
    for _ in range(50):
        a = rng.standard_normal((3, 3, 3))
        x = rng.standard_normal(3)
        for sigma in fixing_mode_1:
            lhs = multilinear_map(transpose(a, sigma), 1, x)
            rhs = multilinear_map(a, 1, x)
            assert _rel(lhs, rhs) <= 1e-12


def check_factored_transform_rules():
    """Kruskal and Tucker transposes commute with reconstruction, orders 3 and 4."""
    rng = np.random.default_rng(106)
    for shape in [(2, 3, 4), (2, 3, 2, 4)]:
        order = len(shape)
        kt = KruskalTensor(tuple(rng.standard_normal((s, 3)) for s in shape))
        dense_kt = kruskal_reconstruct(kt)
        core = rng.standard_normal((2,) * order)
        tt = TuckerTensor(core, tuple(rng.standard_normal((s, 2)) for s in shape))
        dense_tt = tucker_reconstruct(tt)
        for sigma in enumerate_permutations(order):
            assert _rel(
                kruskal_reconstruct(kruskal_transpose(kt, sigma)),
                transpose(dense_kt, sigma),
            ) <= 1e-12
            assert _rel(
                tucker_reconstruct(tucker_transpose(tt, sigma)),
                transpose(dense_tt, sigma),
            ) <= 1e-12


def check_rank_invariance():
    """An R-term representation stays R-term under every transpose and returns
    bitwise after the inverse transpose."""
    rng = np.random.default_rng(107)
    kt = KruskalTensor(tuple(rng.standard_normal((s, 4)) for s in (2, 3, 4)))
    x = kruskal_reconstruct(kt)
    for sigma in enumerate_permutations(3):
        moved = kruskal_transpose(kt, sigma)
        assert moved.rank == kt.rank
        assert _rel(kruskal_reconstruct(moved), transpose(x, sigma)) <= 1e-12
        back = kruskal_transpose(moved, sigma.inverse())
        for a, b in zip(back.factors, kt.factors):
            assert _bitwise(a, b)


def check_fitting_quality():
    """The fitting plumbing meets its quality gates."""
    rng = np.random.default_rng(108)
    x = rng.standard_normal((4, 4, 4))
    t = hosvd(x, (4, 4, 4))
    assert _rel(tucker_reconstruct(t), x) <= 1e-8

    while True:
        factors = []
        for _ in range(3):
            f = rng.standard_normal((4, 2))
            f = f / np.sqrt((f * f).sum(axis=0))
            factors.append(f)
        cosines = [abs(float((f.T @ f)[0, 1])) for f in factors]
        if max(cosines) <= 0.7:
            break
    target = kruskal_reconstruct(KruskalTensor(tuple(factors)))
    kt, errors = cp_als(target, 2, max_iter=500, seed=11, return_errors=True)
    assert errors[-1] <= 1e-6
    assert len(errors) <= 500
    assert np.all(np.diff(errors) <= 1e-12)

    w, v = jacobi_eigh(np.array([[2.0, 1.0], [1.0, 2.0]]))
    assert np.max(np.abs(w - np.array([3.0, 1.0]))) <= 1e-10
    assert _rel(v @ np.diag(w) @ v.T, np.array([[2.0, 1.0], [1.0, 2.0]])) <= 1e-10

    from tenperm import solve_spd

    for n in (5, 10, 20):
        r = rng.standard_normal((n, n))
        spd = r.T @ r + n * np.eye(n)
        rhs = rng.standard_normal((n, 2))
        sol = solve_spd(spd, rhs)
        assert math.sqrt(float(((spd @ sol - rhs) ** 2).sum())) <= 1e-10 * max(
            1.0, math.sqrt(float((rhs**2).sum()))
        )


def check_cli():
    """Bitwise file round trips, the derangement count, and the golden transpose."""
    rng = np.random.default_rng(109)
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        x = rng.standard_normal((2, 3, 2))
        src = tmp / "x.ten"
        src.write_text(serialize_tensor(x))
        assert _bitwise(parse_tensor(src.read_text()), x)
        copied = tmp / "copy.ten"
        out, err = io.StringIO(), io.StringIO()
        assert run(["transpose", "--perm", "1,2,3", str(src), str(copied)], out, err) == 0
        assert copied.read_text() == src.read_text()

        out = io.StringIO()
        assert run(["derangements", "3"], out, io.StringIO()) == 0
        assert out.getvalue() == "2\n"

        cube = build((2, 2, 2), range(1, 9))
        src2, dst2 = tmp / "cube.ten", tmp / "cube_t.ten"
        src2.write_text(serialize_tensor(cube))
        assert run(["transpose", "--perm", "2,3,1", str(src2), str(dst2)], io.StringIO(), io.StringIO()) == 0
        assert dst2.read_text() == "ten 1\norder 3\nshape 2 2 2\n1 5 2 6 3 7 4 8\n"
        moved = parse_tensor(dst2.read_text())
        for i1, i2, i3 in itertools.product((1, 2), repeat=3):
            assert element_at(moved, (i2, i3, i1)) == element_at(cube, (i1, i2, i3))


CRITERIA = [
    ("transpose algebra: composition, round trip, distinctness", check_transpose_algebra),
    ("named order-3 transposes invert bitwise", check_named_transposes),
    ("derangement counts match brute force", check_derangement_counts),
    ("mode product commutes with transposition", check_nmode_transpose_rule),
    ("matrix mode products reduce to matrix products", check_matrix_reductions),
    ("inner product and norm invariance", check_inner_product_and_norm_invariance),
    ("eigenpairs: closed forms and fixed-mode invariance", check_eigenpairs),
    ("factored forms transform by factor permutation", check_factored_transform_rules),
    ("representation rank invariant under transposes", check_rank_invariance),
    ("fitting plumbing quality gates", check_fitting_quality),
    ("command line: round trips and golden outputs", check_cli),
]


@pytest.mark.parametrize("name,check", CRITERIA, ids=[name for name, _ in CRITERIA])
def test_acceptance(name, check):
    check()
    print(f"PASS  {name}")


if __name__ == "__main__":
    failed = 0
    for name, check in CRITERIA:
        try:
            check()
        except Exception as exc:  # report every criterion, then fail once
            failed += 1
            print(f"FAIL  {name}: {exc}")
        else:
            print(f"PASS  {name}")
    print(f"{len(CRITERIA) - failed}/{len(CRITERIA)} acceptance criteria passed")
    sys.exit(1 if failed else 0)
