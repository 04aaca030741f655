"""Tests for the brute-force oracle: exact charpoly and dense Jacobi eigensolve."""

import math

import numpy as np
import pytest

from dendrispec import (
    CapacityError,
    ConvergenceError,
    IntPolynomial,
    ValidationError,
    adjacency_matrix,
    brute_charpoly,
    brute_energy,
    dendrimer,
    dense_eigenvalues,
)
from dendrispec.polynomials import X


def test_charpoly_edge():
    assert brute_charpoly(np.array([[0, 1], [1, 0]])) == X**2 - 1


def test_charpoly_single_vertex():
    assert brute_charpoly(np.array([[0]])) == X


def test_charpoly_path_four():
    a = np.array([[0, 1, 0, 0], [1, 0, 1, 0], [0, 1, 0, 1], [0, 0, 1, 0]])
    assert brute_charpoly(a) == X**4 - 3 * X**2 + 1


def test_charpoly_triangle():
    # not a tree; the oracle works on any symmetric integer matrix
    a = np.ones((3, 3), dtype=int) - np.eye(3, dtype=int)
    assert brute_charpoly(a) == X**3 - 3 * X - 2


def test_charpoly_star():
    assert brute_charpoly(adjacency_matrix(dendrimer(1, 3))) == X**4 - 3 * X**2


def test_charpoly_accepts_python_int_rows():
    assert brute_charpoly([[0, 2], [2, 0]]) == X**2 - 4


def test_charpoly_rejects_bad_input():
    with pytest.raises(ValidationError):
        brute_charpoly(np.zeros((2, 3), dtype=int))
    with pytest.raises(ValidationError):
        brute_charpoly(np.zeros((2, 2)))  # float dtype


def test_charpoly_size_cap():
    a = np.zeros((3, 3), dtype=int)
    with pytest.raises(CapacityError):
        brute_charpoly(a, size_cap=2)


def test_charpoly_huge_entries_stay_exact():
    big = 10**30
    a = np.array([[0, 1], [1, 0]], dtype=object) * big
    assert brute_charpoly(a) == IntPolynomial((-(big**2), 0, 1))


def test_eigenvalues_edge():
    eigs = dense_eigenvalues(np.array([[0, 1], [1, 0]]))
    assert eigs == pytest.approx([1.0, -1.0], abs=1e-12)


def test_eigenvalues_triangle():
    a = np.ones((3, 3)) - np.eye(3)
    eigs = dense_eigenvalues(a)
    assert eigs == pytest.approx([2.0, -1.0, -1.0], abs=1e-12)


def test_eigenvalues_diagonal_matrix_short_circuits():
    eigs = dense_eigenvalues(np.diag([3.0, -1.0, 2.0]))
    assert eigs == [3.0, 2.0, -1.0]


def test_eigenvalues_sorted_descending():
    a = adjacency_matrix(dendrimer(3, 3)).astype(float)
    eigs = dense_eigenvalues(a)
    assert all(x >= y for x, y in zip(eigs, eigs[1:]))


def test_eigenvalues_match_charpoly_roots():
    # the two oracle halves agree with each other on a small tree
    tree = dendrimer(2, 3)
    a = adjacency_matrix(tree)
    poly = brute_charpoly(a)
    for value in dense_eigenvalues(a):
        scale = max(1.0, abs(value)) ** poly.degree()
        residual = sum(c * value**p for p, c in enumerate(poly.coeffs))
        assert abs(residual) <= 1e-7 * scale


def test_eigenvalue_moment_invariants():
    tree = dendrimer(3, 4)
    a = adjacency_matrix(tree)
    eigs = dense_eigenvalues(a)
    n = tree.total_vertices
    assert abs(math.fsum(eigs)) <= 1e-10 * n
    # sum of squared eigenvalues equals the squared Frobenius norm: 2 (n-1)
    assert math.fsum(v * v for v in eigs) == pytest.approx(2 * (n - 1), rel=1e-10)


def test_eigenvalues_validation():
    with pytest.raises(ValidationError):
        dense_eigenvalues(np.zeros((2, 3)))
    with pytest.raises(ValidationError):
        dense_eigenvalues(np.array([[0.0, 1.0], [0.5, 0.0]]))  # not symmetric
    with pytest.raises(ValidationError):
        dense_eigenvalues(np.zeros((2, 2)), tol=0.0)


def test_eigenvalues_size_cap():
    with pytest.raises(CapacityError):
        dense_eigenvalues(np.zeros((3, 3)), size_cap=2)


def test_eigenvalues_sweep_cap_raises():
    a = np.array([[0.0, 1.0], [1.0, 0.0]])
    with pytest.raises(ConvergenceError):
        dense_eigenvalues(a, max_sweeps=0)


def test_brute_energy_path():
    assert brute_energy(dendrimer(1, 2)) == pytest.approx(2 * math.sqrt(2), abs=1e-12)
