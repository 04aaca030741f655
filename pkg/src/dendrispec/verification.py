"""Cross-checks of the factorized fast paths against the brute-force oracle.

The corpus pairs a fixed family of dendrimers with a seeded sample of
arbitrary characteristic tuples, and runs three checks per tree:

* charpoly: the expanded factorization equals the exact brute-force
  characteristic polynomial, coefficient by coefficient;
* spectrum: the flattened analytic spectrum matches the dense Jacobi
  eigenvalues within 1e-8;
* energy: the analytic energy matches the brute-force energy within
  1e-9 per vertex.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .energy import energy_spectral
from .oracle import brute_charpoly, dense_eigenvalues
from .polynomials import (
    FactoredPolynomial,
    IntPolynomial,
    PolynomialFactor,
    expand,
    factored_charpoly,
)
from .spectra import spectrum
from .trees import BalancedTree, adjacency_matrix, balanced_tree_from_tuple, dendrimer

SPECTRUM_TOL = 1e-8
ENERGY_TOL_PER_VERTEX = 1e-9

# (levels, lowest k, highest k); every listed dendrimer has at most 500 vertices
DENDRIMER_RANGES = (
    (1, 2, 20),
    (2, 2, 12),
    (3, 2, 7),
    (4, 2, 4),
    (5, 2, 3),
    (6, 2, 2),
    (7, 2, 2),
    (8, 2, 2),
)


def dendrimer_corpus(max_vertices: int = 500) -> list[BalancedTree]:
    """The fixed dendrimer family, filtered to at most ``max_vertices``."""
    out = []
    for levels, k_lo, k_hi in DENDRIMER_RANGES:
        for k in range(k_lo, k_hi + 1):
            tree = dendrimer(levels, k)
            if tree.total_vertices <= max_vertices:
                out.append(tree)
    return out


def random_tuple_corpus(
    count: int = 50,
    seed: int = 42,
    max_vertices: int = 500,
    max_entry: int = 4,
    max_levels: int = 6,
) -> list[BalancedTree]:
    """Seeded sample of ``count`` distinct characteristic tuples.

    Tuples draw their length uniformly from 1..max_levels and entries
    uniformly from 1..max_entry; draws whose tree exceeds ``max_vertices``
    or repeat an earlier tuple are rejected.  A draw cap keeps degenerate
    limits (tiny ``max_vertices``) from spinning forever.
    """
    rng = random.Random(seed)
    seen: set[tuple[int, ...]] = set()
    out: list[BalancedTree] = []
    for _ in range(200_000):
        if len(out) >= count:
            break
        width = rng.randint(1, max_levels)
        entries = tuple(rng.randint(1, max_entry) for _ in range(width))
        if entries in seen:
            continue
        tree = balanced_tree_from_tuple(entries)
        if tree.total_vertices > max_vertices:
            continue
        seen.add(entries)
        out.append(tree)
    return out


def verification_corpus(
    max_vertices: int = 500, seed: int = 42, random_count: int = 50
) -> list[BalancedTree]:
    """Dendrimer family plus the seeded random tuples."""
    return dendrimer_corpus(max_vertices) + random_tuple_corpus(
        count=random_count, seed=seed, max_vertices=max_vertices
    )


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one check on one tree."""

    label: str
    total_vertices: int
    check: str
    passed: bool
    detail: str


def _erratum_factor(k: int) -> IntPolynomial:
    """A published but incorrect closing factor for three-layer dendrimers:
    x^4 - 2(k+1)x^2 + 4(k-1).  Used only to demonstrate that verification
    catches a tampered factorization."""
    return IntPolynomial((4 * (k - 1), 0, -2 * (k + 1), 0, 1))


def _tamper_closing_factor(factored: FactoredPolynomial, k: int) -> FactoredPolynomial:
    swapped = tuple(
        PolynomialFactor(_erratum_factor(k), f.multiplicity, f.factor_index)
        if f.factor_index == 4
        else f
        for f in factored.factors
    )
    return FactoredPolynomial(swapped)


def verify_tree(
    tree: BalancedTree, tol: float = 1e-12, inject_erratum: bool = False
) -> list[CheckResult]:
    """Run the three oracle checks on one tree."""
    label = tree.label()
    n = tree.total_vertices
    adjacency = adjacency_matrix(tree)
    results = []

    factored = factored_charpoly(tree)
    if inject_erratum and tree.dendrimer is not None and tree.dendrimer[0] == 3:
        factored = _tamper_closing_factor(factored, tree.dendrimer[1])
    expanded = expand(factored, max_degree=n)
    reference = brute_charpoly(adjacency)
    if expanded == reference:
        results.append(CheckResult(label, n, "charpoly", True, "coefficients match exactly"))
    else:
        pa, pb = expanded.coeffs, reference.coeffs
        worst = next(
            i
            for i in range(max(len(pa), len(pb)))
            if (pa[i] if i < len(pa) else 0) != (pb[i] if i < len(pb) else 0)
        )
        results.append(
            CheckResult(
                label, n, "charpoly", False, f"first mismatch at degree {worst}"
            )
        )

    eigs = dense_eigenvalues(adjacency, tol=min(tol, 1e-12))
    analytic = sorted(spectrum(tree, tol).flattened(), reverse=True)
    worst_gap = max(abs(a - b) for a, b in zip(analytic, eigs))
    results.append(
        CheckResult(
            label,
            n,
            "spectrum",
            worst_gap <= SPECTRUM_TOL,
            f"max eigenvalue gap {worst_gap:.3e}",
        )
    )

    brute = math.fsum(abs(v) for v in eigs)
    gap = abs(energy_spectral(tree, tol) - brute)
    results.append(
        CheckResult(
            label,
            n,
            "energy",
            gap <= ENERGY_TOL_PER_VERTEX * n,
            f"energy gap {gap:.3e}",
        )
    )
    return results


def run_verification(
    max_vertices: int = 500,
    seed: int = 42,
    tol: float = 1e-12,
    inject_erratum: bool = False,
    random_count: int = 50,
) -> list[CheckResult]:
    """Run all checks over the whole corpus."""
    results: list[CheckResult] = []
    for tree in verification_corpus(max_vertices, seed, random_count):
        results.extend(verify_tree(tree, tol=tol, inject_erratum=inject_erratum))
    return results
