"""Spectra of balanced trees from their factor polynomials.

Every eigenvalue of a balanced tree is a root of one of the factors
Q_1, ..., Q_{l+1}, so the spectrum is assembled factor by factor:

* dendrimer factors below the closing one are Dickson polynomials with
  the explicit roots 2*sqrt(k-1)*cos(h*pi/(j+1)), h = 1..j;
* the closing dendrimer factor is a Geronimus polynomial whose positive
  roots are isolated by interlacing brackets and found by bisection;
* a branching number of 2 gives an odd path, whose whole spectrum is
  2*cos(h*pi/(2l+2)), h = 1..2l+1;
* factors of arbitrary tuples are handled through the equivalent
  symmetric tridiagonal eigenproblem.

Root residuals are always evaluated through the three-term recurrences,
never through expanded coefficients, to avoid cancellation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import ValidationError
from .trees import BalancedTree, validate_tuple

METHOD_CLOSED_FORM = "closed_form"
METHOD_BRACKETED = "bracketed_root"
METHOD_TRIDIAGONAL = "tridiagonal"

DEFAULT_TOL = 1e-12
GERONIMUS_TOL = 1e-13
COLLAPSE_TOL = 1e-9


@dataclass(frozen=True)
class SpectrumEntry:
    """One eigenvalue with its multiplicity and factor provenance."""

    value: float
    multiplicity: int
    factor_index: int
    method: str


@dataclass(frozen=True)
class Spectrum:
    """All eigenvalues of a balanced tree, sorted descending.

    ``entries`` keeps one entry per (root, factor) pair, so near-equal
    roots coming from different factors stay distinguishable; use
    ``collapsed()`` for the merged view.  Multiplicities are exact
    integers and always sum to the vertex count.
    """

    total_vertices: int
    entries: tuple[SpectrumEntry, ...]

    def multiplicity_total(self) -> int:
        return sum(e.multiplicity for e in self.entries)

    def collapsed(self, merge_tol: float = COLLAPSE_TOL) -> tuple[SpectrumEntry, ...]:
        """Merge entries whose values agree within ``merge_tol``.

        Each merged entry takes its value, factor index, and method from
        the contributor with the largest multiplicity (ties broken by the
        smallest factor index) and sums the multiplicities.
        """
        groups: list[list[SpectrumEntry]] = []
        for entry in self.entries:
            if groups and groups[-1][0].value - entry.value <= merge_tol:
                groups[-1].append(entry)
            else:
                groups.append([entry])
        merged = []
        for group in groups:
            head = max(group, key=lambda e: (e.multiplicity, -e.factor_index))
            merged.append(
                SpectrumEntry(
                    value=head.value,
                    multiplicity=sum(e.multiplicity for e in group),
                    factor_index=head.factor_index,
                    method=head.method,
                )
            )
        return tuple(merged)

    def flattened(self) -> list[float]:
        """Each eigenvalue repeated by multiplicity (descending).

        Only sensible for small trees; the list has total_vertices items.
        """
        out: list[float] = []
        for e in self.entries:
            out.extend([e.value] * e.multiplicity)
        return out

    def to_json_dict(self, collapsed: bool = False) -> dict:
        entries = self.collapsed() if collapsed else self.entries
        return {
            "n": str(self.total_vertices),
            "entries": [
                {
                    "value": e.value,
                    "multiplicity": str(e.multiplicity),
                    "factor": e.factor_index,
                    "method": e.method,
                }
                for e in entries
            ],
        }


def dickson_value(x: float, degree: int, a: float) -> float:
    """Evaluate E_degree at x through the recurrence E_j = x*E_{j-1} - a*E_{j-2}."""
    prev, cur = 1.0, x
    if degree == 0:
        return prev
    for _ in range(degree - 1):
        prev, cur = cur, x * cur - a * prev
    return cur


def geronimus_value(x: float, degree: int, k: float) -> float:
    """Evaluate G_degree at x: G_2 = x^2 - k, then G_j = x*G_{j-1} - (k-1)*G_{j-2}."""
    if degree == 0:
        return 1.0
    if degree == 1:
        return x
    prev, cur = x, x * x - k
    for _ in range(degree - 2):
        prev, cur = cur, x * cur - (k - 1.0) * prev
    return cur


def _geronimus_value_and_derivative(x: float, degree: int, k: float) -> tuple[float, float]:
    """Value and derivative of G_degree at x, both via the recurrence."""
    if degree == 0:
        return 1.0, 0.0
    if degree == 1:
        return x, 1.0
    prev, cur = x, x * x - k
    dprev, dcur = 1.0, 2.0 * x
    for _ in range(degree - 2):
        prev, cur, dprev, dcur = (
            cur,
            x * cur - (k - 1.0) * prev,
            dcur,
            cur + x * dcur - (k - 1.0) * dprev,
        )
    return cur, dcur


def q_value(x: float, entries: Sequence[int], factor_index: int) -> float:
    """Evaluate the factor Q_{factor_index} of a tuple at x via its recurrence."""
    tup = validate_tuple(entries)
    levels = len(tup)
    if not 0 <= factor_index <= levels + 1:
        raise ValidationError(
            f"factor index must lie in 0..{levels + 1}, got {factor_index}"
        )
    prev, cur = 1.0, x
    if factor_index == 0:
        return prev
    for m in range(2, factor_index + 1):
        prev, cur = cur, x * cur - tup[levels - m + 1] * prev
    return cur


def _bisect(fn: Callable[[float], float], lo: float, hi: float, tol: float) -> float:
    """Bisect a sign change down to an interval of width tol; return its midpoint."""
    flo = fn(lo)
    fhi = fn(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0.0) == (fhi > 0.0):
        raise RuntimeError(
            f"bracket [{lo}, {hi}] does not straddle a sign change"
        )
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fmid = fn(mid)
        if fmid == 0.0:
            return mid
        if (fmid > 0.0) == (flo > 0.0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def dickson_roots(degree: int, k: int) -> list[float]:
    """Roots of the Dickson factor E_degree(x, k-1), descending.

    These are exactly 2*sqrt(k-1)*cos(h*pi/(degree+1)) for h = 1..degree.
    """
    if degree < 0:
        raise ValidationError(f"degree must be >= 0, got {degree}")
    if k < 2:
        raise ValidationError(f"branching number must be >= 2, got {k}")
    scale = 2.0 * math.sqrt(k - 1.0)
    # mirror the positive half so the list is exactly symmetric and the
    # middle root of an odd-degree factor is exactly zero
    positive = [
        scale * math.cos(h * math.pi / (degree + 1)) for h in range(1, degree // 2 + 1)
    ]
    middle = [0.0] if degree % 2 == 1 else []
    return positive + middle + [-r for r in reversed(positive)]


def geronimus_bracket(root_index: int, levels: int, k: int) -> tuple[float, float]:
    """Open interval guaranteed to contain the root_index-th positive root
    of the closing dendrimer factor (root_index = 1 is the largest):

        2*sqrt(k-1)*cos((j+1/2)*pi/(l+2)) < alpha_j < 2*sqrt(k-1)*cos((j-1/2)*pi/(l+2))
    """
    scale = 2.0 * math.sqrt(k - 1.0)
    step = math.pi / (levels + 2)
    return (
        scale * math.cos((root_index + 0.5) * step),
        scale * math.cos((root_index - 0.5) * step),
    )


def geronimus_roots(levels: int, k: int, tol: float = GERONIMUS_TOL) -> list[float]:
    """All levels+1 roots of the closing dendrimer factor, descending.

    Requires k >= 3.  The roots are symmetric about zero, with zero
    included exactly when levels+1 is odd.  Each positive root is located
    by bisection inside its interlacing bracket down to width ``tol`` and
    then polished with one Newton step (clamped to the bracket).
    """
    if levels < 1:
        raise ValidationError(f"levels must be >= 1, got {levels}")
    if k < 3:
        raise ValidationError(f"bracketed roots require k >= 3, got {k}")
    if not (tol > 0.0):
        raise ValidationError(f"tol must be positive, got {tol}")
    degree = levels + 1
    positive: list[float] = []
    for j in range(1, degree // 2 + 1):
        lo, hi = geronimus_bracket(j, levels, k)
        root = _bisect(lambda x: geronimus_value(x, degree, k), lo, hi, tol)
        value, slope = _geronimus_value_and_derivative(root, degree, k)
        if slope != 0.0:
            polished = root - value / slope
            if lo < polished < hi:
                root = polished
        positive.append(root)
    middle = [0.0] if degree % 2 == 1 else []
    return positive + middle + [-r for r in reversed(positive)]


def path_spectrum(levels: int) -> list[float]:
    """Spectrum of the odd path with 2*levels+1 vertices (the k = 2 dendrimer):
    2*cos(h*pi/(2*levels+2)) for h = 1..2*levels+1, descending, all simple."""
    if levels < 1:
        raise ValidationError(f"levels must be >= 1, got {levels}")
    n = 2 * levels + 1
    positive = [2.0 * math.cos(h * math.pi / (n + 1)) for h in range(1, levels + 1)]
    return positive + [0.0] + [-v for v in reversed(positive)]


def tridiagonal_roots(
    entries: Iterable[int], factor_index: int, tol: float = DEFAULT_TOL
) -> list[float]:
    """Roots of the factor Q_{factor_index} of an arbitrary tuple, descending.

    The factor's recurrence matches the characteristic-polynomial
    recurrence of the symmetric tridiagonal matrix with zero diagonal and
    off-diagonals sqrt(c_l), sqrt(c_{l-1}), ..., so its roots are that
    matrix's eigenvalues.  Each eigenvalue is then localized by
    sign-change bisection of the recurrence down to width ``tol``.
    """
    tup = validate_tuple(entries)
    levels = len(tup)
    if not 1 <= factor_index <= levels + 1:
        raise ValidationError(
            f"factor index must lie in 1..{levels + 1}, got {factor_index}"
        )
    if not (tol > 0.0):
        raise ValidationError(f"tol must be positive, got {tol}")
    if factor_index == 1:
        return [0.0]
    off = [
        math.sqrt(tup[levels - m + 1]) for m in range(2, factor_index + 1)
    ]
    matrix = np.zeros((factor_index, factor_index))
    idx = np.arange(factor_index - 1)
    matrix[idx, idx + 1] = off
    matrix[idx + 1, idx] = off
    raw = sorted((float(v) for v in np.linalg.eigvalsh(matrix)), reverse=True)
    window = max(tol, 1e-9)
    polished = []
    for value in raw:
        lo, hi = value - window, value + window
        fn = lambda x: q_value(x, tup, factor_index)
        if fn(lo) * fn(hi) < 0.0:
            polished.append(_bisect(fn, lo, hi, tol))
        else:
            polished.append(value)
    return polished


def spectrum(tree: BalancedTree, tol: float = DEFAULT_TOL) -> Spectrum:
    """Full spectrum of a balanced tree, assembled factor by factor.

    Dendrimers with k >= 3 use the closed-form Dickson roots plus the
    bracketed closing factor; k = 2 dendrimers use the odd-path closed
    form; every other tuple goes through the tridiagonal eigenproblem.
    Entries are sorted by descending value (ties by factor index) and
    keep one entry per (root, factor) pair.
    """
    if not (tol > 0.0):
        raise ValidationError(f"tol must be positive, got {tol}")
    entries: list[SpectrumEntry] = []
    if tree.dendrimer is not None and tree.dendrimer[1] == 2:
        levels = tree.dendrimer[0]
        # the closing factor holds the odd-position values, the depth-l
        # factor the even-position ones; both have all multiplicities 1
        for h, value in enumerate(path_spectrum(levels), start=1):
            factor = levels + 1 if h % 2 == 1 else levels
            entries.append(SpectrumEntry(value, 1, factor, METHOD_CLOSED_FORM))
    elif tree.dendrimer is not None:
        levels, k = tree.dendrimer
        for j in range(1, levels + 1):
            mult = tree.factor_multiplicity(j)
            for value in dickson_roots(j, k):
                entries.append(SpectrumEntry(value, mult, j, METHOD_CLOSED_FORM))
        for value in geronimus_roots(levels, k, min(tol, GERONIMUS_TOL)):
            entries.append(SpectrumEntry(value, 1, levels + 1, METHOD_BRACKETED))
    else:
        for j in sorted(tree.active_factors):
            mult = tree.factor_multiplicity(j)
            for value in tridiagonal_roots(tree.entries, j, tol):
                entries.append(SpectrumEntry(value, mult, j, METHOD_TRIDIAGONAL))
    entries.sort(key=lambda e: (-e.value, e.factor_index))
    return Spectrum(total_vertices=tree.total_vertices, entries=tuple(entries))
