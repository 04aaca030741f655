"""Characteristic polynomials, spectra, and graph energy of balanced trees.

A balanced tree is described by its characteristic tuple (the per-level
child counts); dendrimers are the regular special case.  The adjacency
characteristic polynomial factors over a short three-term recurrence,
which gives exact factorizations, closed-form or tightly bracketed
eigenvalues, and explicit energy bounds, all validated against a
brute-force oracle.
"""

from .energy import (
    AsymptoticReport,
    CoefficientTriple,
    EnergyReport,
    asymptotic_report,
    coefficient_sequences,
    energy_path_exact,
    energy_ratio_bounds,
    energy_ratio_limit,
    energy_report,
    energy_series_bounds,
    energy_spectral,
    f_coefficient,
    normalized_ratio_bracket,
    psi_closed_form,
    psi_geronimus_bounds,
)
from .errors import CapacityError, ConvergenceError, ValidationError
from .oracle import brute_charpoly, brute_energy, dense_eigenvalues
from .polynomials import (
    ONE,
    X,
    ZERO,
    FactoredPolynomial,
    IntPolynomial,
    PolynomialFactor,
    dickson_poly,
    divides,
    expand,
    factored_charpoly,
    format_polynomial,
    geronimus_poly,
    q_sequence,
    w_sequence,
)
from .spectra import (
    Spectrum,
    SpectrumEntry,
    dickson_roots,
    dickson_value,
    geronimus_bracket,
    geronimus_roots,
    geronimus_value,
    path_spectrum,
    q_value,
    spectrum,
    tridiagonal_roots,
)
from .trees import (
    BalancedTree,
    adjacency_matrix,
    balanced_tree_from_tuple,
    block_matrix,
    dendrimer,
    validate_tuple,
)
from .verification import (
    CheckResult,
    dendrimer_corpus,
    random_tuple_corpus,
    run_verification,
    verification_corpus,
    verify_tree,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticReport",
    "BalancedTree",
    "CapacityError",
    "CheckResult",
    "CoefficientTriple",
    "ConvergenceError",
    "EnergyReport",
    "FactoredPolynomial",
    "IntPolynomial",
    "ONE",
    "PolynomialFactor",
    "Spectrum",
    "SpectrumEntry",
    "ValidationError",
    "X",
    "ZERO",
    "adjacency_matrix",
    "asymptotic_report",
    "balanced_tree_from_tuple",
    "block_matrix",
    "brute_charpoly",
    "brute_energy",
    "coefficient_sequences",
    "dendrimer",
    "dendrimer_corpus",
    "dense_eigenvalues",
    "dickson_poly",
    "dickson_roots",
    "dickson_value",
    "divides",
    "energy_path_exact",
    "energy_ratio_bounds",
    "energy_ratio_limit",
    "energy_report",
    "energy_series_bounds",
    "energy_spectral",
    "expand",
    "f_coefficient",
    "factored_charpoly",
    "format_polynomial",
    "geronimus_bracket",
    "geronimus_poly",
    "geronimus_roots",
    "geronimus_value",
    "normalized_ratio_bracket",
    "path_spectrum",
    "psi_closed_form",
    "psi_geronimus_bounds",
    "q_sequence",
    "q_value",
    "random_tuple_corpus",
    "run_verification",
    "spectrum",
    "tridiagonal_roots",
    "validate_tuple",
    "verification_corpus",
    "verify_tree",
    "w_sequence",
]
