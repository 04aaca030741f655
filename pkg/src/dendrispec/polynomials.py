"""Exact integer polynomial arithmetic and the tree factor recurrences.

Characteristic polynomials of balanced trees split into small factors
generated by a three-term recurrence over the characteristic tuple.
Everything here is computed over Python integers, so factorizations and
expansions are exact at any size the degree caps allow.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable, Sequence

from .caps import EXPAND_DEGREE_CAP, effective_cap
from .errors import CapacityError, ValidationError
from .trees import BalancedTree, dendrimer, validate_tuple


class IntPolynomial:
    """Dense univariate polynomial with Python-int coefficients.

    Coefficients are stored low degree first with no trailing zeros, so
    equal polynomials compare equal structurally.  Instances are treated
    as immutable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        stack = list(coeffs)
        while stack and stack[-1] == 0:
            stack.pop()
        self.coeffs: tuple[int, ...] = tuple(stack)

    @classmethod
    def constant(cls, value: int) -> "IntPolynomial":
        return cls((value,))

    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPolynomial((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for i, c in enumerate(b):
            merged[i] += c
        return IntPolynomial(merged)

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPolynomial":
        exponent = operator.index(exponent)
        if exponent < 0:
            raise ValidationError("polynomial exponent must be non-negative")
        result = IntPolynomial((1,))
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __divmod__(self, divisor: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Long division by a monic divisor; stays in integer coefficients."""
        if not isinstance(divisor, IntPolynomial):
            return NotImplemented
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if not divisor.is_monic():
            raise ValidationError("division requires a monic divisor")
        rem = list(self.coeffs)
        d = divisor.degree()
        if len(rem) - 1 < d:
            return IntPolynomial(), IntPolynomial(rem)
        quot = [0] * (len(rem) - d)
        for top in range(len(rem) - 1, d - 1, -1):
            factor = rem[top]
            if factor == 0:
                continue
            quot[top - d] = factor
            for i, c in enumerate(divisor.coeffs):
                rem[top - d + i] -= factor * c
        return IntPolynomial(quot), IntPolynomial(rem)

    def __call__(self, x):
        """Evaluate via Horner's rule; exact for int arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_json_dict(self) -> dict:
        """Serialize as {"coeffs": [...]}, low degree first, decimal strings."""
        return {"coeffs": [str(c) for c in self.coeffs]}

    def __repr__(self) -> str:
        return f"IntPolynomial({format_polynomial(self)!r})"


def _coerce(value) -> "IntPolynomial":
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, int):
        return IntPolynomial((value,))
    return NotImplemented


ZERO = IntPolynomial()
ONE = IntPolynomial((1,))
X = IntPolynomial((0, 1))


def divides(divisor: IntPolynomial, dividend: IntPolynomial) -> bool:
    """True when the monic divisor divides the dividend exactly."""
    _, rem = divmod(dividend, divisor)
    return rem.is_zero()


def format_polynomial(poly: IntPolynomial, var: str = "x") -> str:
    """Human-readable form with descending powers, e.g. ``x^4 - 7*x^2 + 6``."""
    if poly.is_zero():
        return "0"
    parts: list[str] = []
    for power in range(poly.degree(), -1, -1):
        c = poly.coeffs[power]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if power == 0:
            body = str(mag)
        else:
            stem = var if power == 1 else f"{var}^{power}"
            body = stem if mag == 1 else f"{mag}*{stem}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


def q_sequence(entries: Iterable[int]) -> list[IntPolynomial]:
    """Factor polynomials Q_0, ..., Q_{l+1} for the tuple (c_1, ..., c_l).

    Q_0 = 1, Q_1 = x, and Q_{j+2} = x*Q_{j+1} - c_{l-j}*Q_j for
    0 <= j <= l-1, consuming the tuple from its last entry down to the
    first.  The product of Q_j to the power n_{l+1-j} - n_{l-j} is the
    characteristic polynomial of the tree's adjacency matrix.
    """
    tup = validate_tuple(entries)
    levels = len(tup)
    seq = [ONE, X]
    for j in range(levels):
        seq.append(X * seq[-1] - tup[levels - 1 - j] * seq[-2])
    return seq


def w_sequence(levels: int, k: int) -> list[IntPolynomial]:
    """Dendrimer factor polynomials W_0, ..., W_{levels+1}.

    These are the Q-sequence of the tuple (k, k-1, ..., k-1): the
    recurrence multiplier is k-1 at every step except the last, which
    uses k.  For j <= levels the result coincides with the Dickson
    polynomial E_j(x, k-1); the closing factor coincides with the
    Geronimus polynomial G_{levels+1}(x, k).
    """
    return q_sequence(dendrimer(levels, k).entries)


def dickson_poly(degree: int, a: int) -> IntPolynomial:
    """Dickson polynomial of the second kind: E_0 = 1, E_1 = x,
    E_j = x*E_{j-1} - a*E_{j-2}."""
    degree = operator.index(degree)
    if degree < 0:
        raise ValidationError("dickson degree must be >= 0")
    prev, cur = ONE, X
    if degree == 0:
        return prev
    for _ in range(degree - 1):
        prev, cur = cur, X * cur - a * prev
    return cur


def geronimus_poly(degree: int, a: int) -> IntPolynomial:
    """Geronimus polynomial: G_0 = 1, G_1 = x, G_2 = x^2 - a, and
    G_j = x*G_{j-1} - (a-1)*G_{j-2} for j >= 3.

    For j >= 2 it also equals E_j(x, a-1) - E_{j-2}(x, a-1).
    """
    degree = operator.index(degree)
    if degree < 0:
        raise ValidationError("geronimus degree must be >= 0")
    if degree == 0:
        return ONE
    if degree == 1:
        return X
    prev, cur = X, X * X - a * ONE
    for _ in range(degree - 2):
        prev, cur = cur, X * cur - (a - 1) * prev
    return cur


@dataclass(frozen=True)
class PolynomialFactor:
    """One factor of a characteristic polynomial with its multiplicity."""

    poly: IntPolynomial
    multiplicity: int
    factor_index: int


@dataclass(frozen=True)
class FactoredPolynomial:
    """A product of polynomial factors, kept unexpanded."""

    factors: tuple[PolynomialFactor, ...]

    def total_degree(self) -> int:
        return sum(f.poly.degree() * f.multiplicity for f in self.factors)

    def to_json_dict(self) -> dict:
        return {
            "factors": [
                {
                    "factor_index": f.factor_index,
                    "multiplicity": str(f.multiplicity),
                    "poly": f.poly.to_json_dict(),
                }
                for f in self.factors
            ]
        }


def factored_charpoly(tree: BalancedTree) -> FactoredPolynomial:
    """Characteristic polynomial of the tree's adjacency matrix, factored.

    Returns the factors Q_j with multiplicity n_{l+1-j} - n_{l-j}, for the
    indices j where that multiplicity is positive, ordered by ascending j.
    The degrees weighted by multiplicity always sum to the vertex count.
    """
    seq = q_sequence(tree.entries)
    factors = []
    for j in sorted(tree.active_factors):
        mult = tree.factor_multiplicity(j)
        factors.append(PolynomialFactor(seq[j], mult, j))
    return FactoredPolynomial(tuple(factors))


def expand(
    factored: FactoredPolynomial, max_degree: int | None = None
) -> IntPolynomial:
    """Multiply a factored polynomial out to dense coefficients.

    Guarded by the expansion degree cap unless ``max_degree`` overrides it;
    coefficient growth is roughly exponential in the degree, so expanding
    very large trees is refused rather than attempted.
    """
    cap = effective_cap(EXPAND_DEGREE_CAP) if max_degree is None else max_degree
    total = factored.total_degree()
    if total > cap:
        raise CapacityError(f"expanded degree would be {total}, cap is {cap}")
    out = ONE
    for f in factored.factors:
        out = out * f.poly**f.multiplicity
    return out
