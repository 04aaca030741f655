"""Brute-force spectral reference implementations.

Everything here works straight from a dense matrix, independently of the
factorized fast paths, so the two routes can be compared in tests.  The
characteristic polynomial comes from the Faddeev-LeVerrier recurrence
over exact integers, eigenvalues from cyclic-by-row Jacobi rotations.
Performance is a non-goal; sizes are guarded accordingly.
"""

from __future__ import annotations

import math

import numpy as np

from .caps import CHARPOLY_ORACLE_CAP, EIGENSOLVE_CAP, effective_cap
from .errors import CapacityError, ConvergenceError, ValidationError
from .polynomials import IntPolynomial
from .trees import BalancedTree, adjacency_matrix


def _square_int_rows(matrix) -> list[list[int]]:
    """Validate a square integer matrix and return it as Python-int rows."""
    arr = np.asarray(matrix)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValidationError(f"matrix must be square, got shape {arr.shape}")
    if arr.dtype.kind not in "iu" and arr.dtype != object:
        raise ValidationError(f"matrix entries must be integers, got dtype {arr.dtype}")
    rows = [[int(v) for v in row] for row in arr.tolist()]
    if arr.dtype == object and any(
        not isinstance(v, int) for row in arr.tolist() for v in row
    ):
        raise ValidationError("matrix entries must be integers")
    return rows


def brute_charpoly(matrix, size_cap: int | None = None) -> IntPolynomial:
    """Exact characteristic polynomial det(xI - A) of an integer matrix.

    Runs the Faddeev-LeVerrier recurrence M_{m+1} = A*M_m + c_{n-m} I with
    c_{n-m} = -trace(A*M_m)/m over Python integers; the division by the
    step index is exact at every step.  The O(n^4) cost is tamed by
    skipping zero entries of A, so sparse adjacency matrices stay cheap,
    and by the size cap (default 600).
    """
    rows = _square_int_rows(matrix)
    n = len(rows)
    cap = effective_cap(CHARPOLY_ORACLE_CAP) if size_cap is None else size_cap
    if n > cap:
        raise CapacityError(f"matrix order {n} exceeds charpoly oracle cap {cap}")
    support = [
        [(j, w) for j, w in enumerate(row) if w != 0] for row in rows
    ]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    work = [[int(i == j) for j in range(n)] for i in range(n)]
    for step in range(1, n + 1):
        nxt: list[list[int]] = []
        for entries in support:
            if not entries:
                nxt.append([0] * n)
                continue
            j0, w0 = entries[0]
            row = [w0 * v for v in work[j0]] if w0 != 1 else list(work[j0])
            for j, w in entries[1:]:
                src = work[j]
                if w == 1:
                    row = [a + b for a, b in zip(row, src)]
                else:
                    row = [a + w * b for a, b in zip(row, src)]
            nxt.append(row)
        trace = sum(nxt[i][i] for i in range(n))
        c, rem = divmod(-trace, step)
        if rem:
            raise RuntimeError("trace recurrence produced a non-integer coefficient")
        coeffs[n - step] = c
        if step < n:
            for i in range(n):
                nxt[i][i] += c
            work = nxt
    return IntPolynomial(coeffs)


def dense_eigenvalues(
    matrix, tol: float = 1e-12, max_sweeps: int = 100, size_cap: int | None = None
) -> list[float]:
    """All eigenvalues of a symmetric matrix by cyclic-by-row Jacobi rotations.

    Sweeps rotate every off-diagonal pair in row order, skipping entries
    already below tol * frobenius / n (a full sweep of skips therefore
    certifies convergence), and stop once the off-diagonal norm drops
    below tol * frobenius.  Raises ConvergenceError after ``max_sweeps``
    sweeps without meeting that bound.  Returns eigenvalues sorted
    descending.
    """
    a = np.array(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValidationError(f"matrix must be square, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise ValidationError("matrix must be symmetric")
    if not (tol > 0.0):
        raise ValidationError(f"tol must be positive, got {tol}")
    n = a.shape[0]
    cap = effective_cap(EIGENSOLVE_CAP) if size_cap is None else size_cap
    if n > cap:
        raise CapacityError(f"matrix order {n} exceeds eigensolver cap {cap}")
    frob = float(np.linalg.norm(a))
    if n == 1 or frob == 0.0:
        return [float(v) for v in np.diag(a)]
    skip = tol * frob / n
    for _ in range(max_sweeps):
        off = math.sqrt(max(float(np.sum(a * a) - np.sum(np.diag(a) ** 2)), 0.0))
        if off <= tol * frob:
            break
        rotated = False
        for p in range(n - 1):
            row_p = a[p]
            for q in range(p + 1, n):
                apq = row_p[q]
                if abs(apq) <= skip:
                    continue
                rotated = True
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = a[q, p] = 0.0
        if not rotated:
            # every remaining entry is below the skip threshold, hence
            # off <= n * skip = tol * frobenius
            break
    else:
        raise ConvergenceError(f"Jacobi failed to converge in {max_sweeps} sweeps")
    return sorted((float(v) for v in np.diag(a)), reverse=True)


def brute_energy(tree: BalancedTree, tol: float = 1e-12) -> float:
    """Graph energy (sum of absolute eigenvalues) from the dense eigensolver."""
    eigs = dense_eigenvalues(adjacency_matrix(tree), tol=tol)
    return math.fsum(abs(v) for v in eigs)
