"""Graph energy of balanced trees: spectral sums, closed forms, bounds.

The energy of a graph is the sum of the absolute values of its adjacency
eigenvalues.  For dendrimers the factor structure turns this into a
weighted sum of per-factor root sums, written here as psi(p), the sum of
|root| over the roots of p.  Dickson factors admit exact psi values in
terms of cot or csc, the closing factor admits a two-sided bound, and
stacking the layers produces explicit sandwich bounds and asymptotics
for the whole energy.

All trigonometric and algebraic constants are computed at call time from
math routines; none are hard-coded as decimal literals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ValidationError
from .spectra import spectrum
from .trees import BalancedTree, dendrimer

DEFAULT_TOL = 1e-12
DEFAULT_LIMIT_TOL = 1e-10

METHOD_EXACT = "exact_closed_form"
METHOD_SPECTRAL = "spectral_sum"


def _cot(x: float) -> float:
    return math.cos(x) / math.sin(x)


def _csc(x: float) -> float:
    return 1.0 / math.sin(x)


def psi_closed_form(degree: int, k: int) -> float:
    """Sum of |root| over the roots of the Dickson factor E_degree(x, k-1).

    Equals 2*sqrt(k-1) * (cot(pi/(2j+2)) - 1) for odd degree j and
    2*sqrt(k-1) * (csc(pi/(2j+2)) - 1) for even degree; zero for j = 0.
    """
    if degree < 0:
        raise ValidationError(f"degree must be >= 0, got {degree}")
    if k < 2:
        raise ValidationError(f"branching number must be >= 2, got {k}")
    if degree == 0:
        return 0.0
    angle = math.pi / (2 * degree + 2)
    base = _cot(angle) if degree % 2 == 1 else _csc(angle)
    return 2.0 * math.sqrt(k - 1.0) * (base - 1.0)


def psi_geronimus_bounds(levels: int, k: int) -> tuple[float, float]:
    """Two-sided bound for the root sum psi of the closing dendrimer factor.

    With angle pi/(2*levels+4) and base cot(angle) for even levels,
    csc(angle) for odd levels:

        2*sqrt(k-1)*(base - 2.2)  <  psi  <  2*sqrt(k-1)*base
    """
    if levels < 1:
        raise ValidationError(f"levels must be >= 1, got {levels}")
    if k < 3:
        raise ValidationError(f"bracket bounds require k >= 3, got {k}")
    angle = math.pi / (2 * levels + 4)
    base = _cot(angle) if levels % 2 == 0 else _csc(angle)
    scale = 2.0 * math.sqrt(k - 1.0)
    return scale * (base - 2.2), scale * base


def energy_spectral(tree: BalancedTree, tol: float = DEFAULT_TOL) -> float:
    """Graph energy as the multiplicity-weighted sum of |eigenvalue|.

    Multiplicities stay exact integers until the final accumulation,
    which runs through math.fsum; float(int) is correctly rounded in
    CPython, so even multiplicities beyond 2**53 contribute at full
    double precision.
    """
    spec = spectrum(tree, tol)
    return math.fsum(float(e.multiplicity) * abs(e.value) for e in spec.entries)


def energy_path_exact(levels: int) -> float:
    """Exact energy of the k = 2 dendrimer (the path on 2*levels+1 vertices):
    2 * (cot(pi/(4*levels+4)) - 1)."""
    if levels < 1:
        raise ValidationError(f"levels must be >= 1, got {levels}")
    return 2.0 * (_cot(math.pi / (4 * levels + 4)) - 1.0)


@dataclass(frozen=True)
class CoefficientTriple:
    """The two layer-coefficient forms at one index and the selected value.

    ``a`` is the csc difference 2*csc(pi/(2j+6)) - 2*csc(pi/(2j+2)),
    ``b`` the cot difference 2*cot(pi/(2j+6)) - 2*cot(pi/(2j+2)); the
    layer coefficient ``f`` equals a for even j and b for odd j.  The a
    sequence increases and the b sequence decreases, both to 8/pi, so
    a_j < 8/pi < b_j for every j.
    """

    index: int
    a: float
    b: float
    f: float


def coefficient_sequences(index: int) -> CoefficientTriple:
    """Both coefficient forms at the given index; see CoefficientTriple."""
    if index < 0:
        raise ValidationError(f"index must be >= 0, got {index}")
    near = math.pi / (2 * index + 6)
    far = math.pi / (2 * index + 2)
    a = 2.0 * _csc(near) - 2.0 * _csc(far)
    b = 2.0 * _cot(near) - 2.0 * _cot(far)
    return CoefficientTriple(index, a, b, a if index % 2 == 0 else b)


def f_coefficient(index: int) -> float:
    """The layer coefficient f_j driving the energy's geometric layer sums."""
    return coefficient_sequences(index).f


def energy_ratio_limit(k: int, tol: float = DEFAULT_LIMIT_TOL) -> float:
    """Limit of energy / (k-1)^(levels - 1/2) as the layer count grows.

    This is the convergent series sum of f_j * (k-1)^(-j).  The partial
    sum is truncated at the first J whose geometric tail bound
    f_1 * (k-1)^(-J) / (1 - 1/(k-1)) drops below ``tol``; f_1 = 2*sqrt(2)
    is the largest layer coefficient, so the bound is valid.
    """
    if k < 3:
        raise ValidationError(f"the ratio limit requires k >= 3, got {k}")
    if not (tol > 0.0):
        raise ValidationError(f"tol must be positive, got {tol}")
    top = f_coefficient(1)
    r = 1.0 / (k - 1.0)
    tail_scale = top / (1.0 - r)
    terms = []
    j = 0
    while j == 0 or tail_scale * r**j >= tol:
        terms.append(f_coefficient(j) * r**j)
        j += 1
    return math.fsum(terms)


def energy_series_bounds(levels: int, k: int) -> tuple[float, float]:
    """Sandwich bounds for the dendrimer energy from the layer sums.

    With S = sum over j < levels of f_j * (k-1)^(levels - 1/2 - j):

        S - 2.4*sqrt(k-1)  <  energy  <  S + 2*sqrt(k-1)

    The width is exactly 4.4*sqrt(k-1).  The lower bound can be negative
    for small levels; it is reported as computed.
    """
    if levels < 1:
        raise ValidationError(f"levels must be >= 1, got {levels}")
    if k < 3:
        raise ValidationError(f"series bounds require k >= 3, got {k}")
    base = float(k - 1)
    s = math.fsum(
        f_coefficient(j) * base ** (levels - 0.5 - j) for j in range(levels)
    )
    root = math.sqrt(base)
    return s - 2.4 * root, s + 2.0 * root


def energy_ratio_bounds(levels: int, k: int) -> tuple[float, float]:
    """Simpler two-sided bounds proportional to (k-1)^(levels - 1/2).

    For levels >= 2 and k >= 3:

        (k-1)^(l-1/2) * (2 + 2*sqrt(2)/(k-1))
          <  energy  <
        (k-1)^(l-1/2) * (2 + (1/2 + sqrt(2) + sqrt(3) + sqrt(5))/(k-1))
    """
    if levels < 2:
        raise ValidationError(f"ratio bounds require levels >= 2, got {levels}")
    if k < 3:
        raise ValidationError(f"ratio bounds require k >= 3, got {k}")
    base = float(k - 1)
    lead = base ** (levels - 0.5)
    upper_slack = 0.5 + math.sqrt(2.0) + math.sqrt(3.0) + math.sqrt(5.0)
    return (
        lead * (2.0 + 2.0 * math.sqrt(2.0) / base),
        lead * (2.0 + upper_slack / base),
    )


def normalized_ratio_bracket() -> tuple[float, float]:
    """Universal open bracket for energy / (k-1)^(levels - 1/2) at k >= 3:
    (2, (4.5 + sqrt(2) + sqrt(3) + sqrt(5)) / 2)."""
    return 2.0, (4.5 + math.sqrt(2.0) + math.sqrt(3.0) + math.sqrt(5.0)) / 2.0


@dataclass(frozen=True)
class AsymptoticReport:
    """How close a dendrimer's normalized energy sits to its two limits.

    ``ratio`` is energy / (k-1)^(levels - 1/2); it tends to 2 as k grows
    with levels fixed and to the ratio limit as levels grow with k fixed.
    """

    levels: int
    k: int
    ratio: float
    ratio_limit: float
    gap_to_leading: float
    gap_to_limit: float


def asymptotic_report(
    levels: int,
    k: int,
    tol: float = DEFAULT_TOL,
    limit_tol: float = DEFAULT_LIMIT_TOL,
) -> AsymptoticReport:
    """Normalized energy of d(levels, k) and its distances to 2 and the limit."""
    if k < 3:
        raise ValidationError(f"asymptotics require k >= 3, got {k}")
    tree = dendrimer(levels, k)
    ratio = energy_spectral(tree, tol) / float(k - 1) ** (levels - 0.5)
    limit = energy_ratio_limit(k, limit_tol)
    return AsymptoticReport(
        levels=levels,
        k=k,
        ratio=ratio,
        ratio_limit=limit,
        gap_to_leading=abs(ratio - 2.0),
        gap_to_limit=abs(ratio - limit),
    )


@dataclass(frozen=True)
class EnergyReport:
    """Energy of one tree plus the bounds that apply to it.

    ``series_bounds`` and ``ratio_bounds`` are the two sandwich bounds
    above (None when out of domain or not requested); ``series_lower_negative``
    flags the small-tree case where the series lower bound dips below zero.
    ``ratio`` and ``ratio_limit`` are populated for dendrimers only.
    """

    energy: float
    method: str
    levels: int
    k: int | None
    ratio: float | None
    series_bounds: tuple[float, float] | None
    series_lower_negative: bool
    ratio_bounds: tuple[float, float] | None
    ratio_limit: float | None

    def to_json_dict(self) -> dict:
        return {
            "l": self.levels,
            "k": self.k,
            "energy": self.energy,
            "method": self.method,
            "ratio": self.ratio,
            "thm51": list(self.series_bounds) if self.series_bounds else None,
            "thmB": list(self.ratio_bounds) if self.ratio_bounds else None,
            "mu_k": self.ratio_limit,
        }


def energy_report(
    tree: BalancedTree,
    tol: float = DEFAULT_TOL,
    include_bounds: bool = True,
    limit_tol: float = DEFAULT_LIMIT_TOL,
) -> EnergyReport:
    """Energy of a balanced tree with whichever bounds apply.

    k = 2 dendrimers use the exact path closed form; everything else is a
    spectral sum.  The sandwich bounds and the ratio limit require a
    dendrimer with k >= 3 (the ratio bounds additionally levels >= 2).
    """
    if tree.dendrimer is not None:
        levels, k = tree.dendrimer
        if k == 2:
            energy = energy_path_exact(levels)
            method = METHOD_EXACT
        else:
            energy = energy_spectral(tree, tol)
            method = METHOD_SPECTRAL
        ratio = energy / float(k - 1) ** (levels - 0.5)
        series = None
        ratio_bounds = None
        limit = None
        if include_bounds and k >= 3:
            series = energy_series_bounds(levels, k)
            limit = energy_ratio_limit(k, limit_tol)
            if levels >= 2:
                ratio_bounds = energy_ratio_bounds(levels, k)
        return EnergyReport(
            energy=energy,
            method=method,
            levels=levels,
            k=k,
            ratio=ratio,
            series_bounds=series,
            series_lower_negative=series is not None and series[0] < 0.0,
            ratio_bounds=ratio_bounds,
            ratio_limit=limit,
        )
    return EnergyReport(
        energy=energy_spectral(tree, tol),
        method=METHOD_SPECTRAL,
        levels=tree.levels,
        k=None,
        ratio=None,
        series_bounds=None,
        series_lower_negative=False,
        ratio_bounds=None,
        ratio_limit=None,
    )
