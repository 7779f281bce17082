import numpy as np
import pytest

from cxcoulomb.eigensolve import balance, eigenvalues, hessenberg_reduce
from cxcoulomb.suites import leverrier_faddeev, optimal_pair_distance


def test_diagonal_matrix():
    d = np.diag([1.0 + 2j, -3.0, 0.5j])
    res = eigenvalues(d)
    assert res.converged
    assert optimal_pair_distance(res.eigenvalues, [1.0 + 2j, -3.0, 0.5j]) < 1e-14


def test_known_2x2():
    a = np.array([[0.0, 1.0], [-1.0, 0.0]], dtype=complex)
    res = eigenvalues(a)
    assert optimal_pair_distance(res.eigenvalues, [1j, -1j]) < 1e-14


def test_companion_of_cube_roots_of_unity():
    # circulant structure defeats the plain Wilkinson shift; the exceptional
    # shift must still converge it
    a = np.array([[0, 0, 1], [1, 0, 0], [0, 1, 0]], dtype=complex)
    res = eigenvalues(a)
    assert res.converged
    roots = [1.0, np.exp(2j * np.pi / 3), np.exp(-2j * np.pi / 3)]
    assert optimal_pair_distance(res.eigenvalues, roots) < 1e-12


def test_jordan_block():
    a = np.eye(4, dtype=complex) * 2.0
    a += np.diag(np.ones(3), 1)
    res = eigenvalues(a)
    assert res.converged
    # defective eigenvalue: accuracy degrades to eps^(1/4), not eps
    assert optimal_pair_distance(res.eigenvalues, [2.0] * 4) < 1e-3


def test_against_char_poly_oracle():
    rng = np.random.default_rng(3)
    for _ in range(20):
        n = int(rng.integers(2, 13))
        a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        res = eigenvalues(a)
        assert res.converged
        oracle = np.roots(leverrier_faddeev(a))
        assert optimal_pair_distance(res.eigenvalues, oracle) < 1e-8 * np.linalg.norm(a)


def test_trace_and_determinant():
    rng = np.random.default_rng(4)
    a = rng.standard_normal((9, 9)) + 1j * rng.standard_normal((9, 9))
    res = eigenvalues(a)
    assert abs(sum(res.eigenvalues) - np.trace(a)) < 1e-10 * abs(np.trace(a))
    assert abs(np.prod(np.array(res.eigenvalues)) - np.linalg.det(a)) < 1e-8 * abs(
        np.linalg.det(a)
    )


def test_determinism():
    rng = np.random.default_rng(5)
    a = rng.standard_normal((8, 8)) + 1j * rng.standard_normal((8, 8))
    first = eigenvalues(a).eigenvalues
    second = eigenvalues(a).eigenvalues
    assert first == second  # bit-identical


def test_similarity_invariance():
    rng = np.random.default_rng(6)
    a = rng.standard_normal((7, 7)) + 1j * rng.standard_normal((7, 7))
    t = rng.standard_normal((7, 7)) + np.eye(7) * 3.0
    b = np.linalg.solve(t, a @ t)
    d = optimal_pair_distance(eigenvalues(a).eigenvalues, eigenvalues(b).eigenvalues)
    assert d < 1e-10 * np.linalg.norm(a)


def test_balance_preserves_spectrum():
    rng = np.random.default_rng(8)
    a = rng.standard_normal((6, 6)) * np.logspace(-3, 3, 6)[None, :]
    b = balance(a)
    d = optimal_pair_distance(
        np.roots(leverrier_faddeev(a + 0j)), np.roots(leverrier_faddeev(b))
    )
    assert d < 1e-6 * np.linalg.norm(a)


def test_hessenberg_structure_and_spectrum():
    rng = np.random.default_rng(9)
    a = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
    h = hessenberg_reduce(a)
    assert np.max(np.abs(np.tril(h, -2))) == 0.0
    d = optimal_pair_distance(
        np.roots(leverrier_faddeev(a)), np.roots(leverrier_faddeev(h))
    )
    assert d < 1e-10 * np.linalg.norm(a)


def test_input_validation():
    with pytest.raises(ValueError):
        eigenvalues(np.ones((2, 3)))
    with pytest.raises(ValueError):
        eigenvalues(np.array([[np.nan, 0.0], [0.0, 1.0]]))
