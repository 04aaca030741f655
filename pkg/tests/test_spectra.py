"""Tests for analytic eigenvalue computation: closed forms, brackets, tridiagonal."""

import math

import pytest

from dendrispec import (
    ValidationError,
    balanced_tree_from_tuple,
    dendrimer,
    dickson_roots,
    geronimus_bracket,
    geronimus_roots,
    path_spectrum,
    spectrum,
    tridiagonal_roots,
)
from dendrispec.spectra import (
    METHOD_BRACKETED,
    METHOD_CLOSED_FORM,
    METHOD_TRIDIAGONAL,
    dickson_value,
    geronimus_value,
    q_value,
)


def test_dickson_roots_small():
    assert dickson_roots(1, 5) == [0.0]
    assert dickson_roots(2, 3) == pytest.approx([math.sqrt(2), -math.sqrt(2)], abs=1e-15)
    assert dickson_roots(3, 3) == pytest.approx([2.0, 0.0, -2.0], abs=1e-15)


@pytest.mark.parametrize("degree", range(1, 8))
@pytest.mark.parametrize("k", [2, 3, 5])
def test_dickson_roots_closed_form(degree, k):
    roots = dickson_roots(degree, k)
    expected = [
        2.0 * math.sqrt(k - 1) * math.cos(h * math.pi / (degree + 1))
        for h in range(1, degree + 1)
    ]
    assert roots == pytest.approx(expected, abs=1e-12)
    # residual of the recurrence evaluation at each root, scaled by (k-1)^(j/2)
    for r in roots:
        assert abs(dickson_value(r, degree, k - 1)) <= 1e-8 * (k - 1) ** (degree / 2)


def test_dickson_roots_validation():
    with pytest.raises(ValidationError):
        dickson_roots(2, 1)
    with pytest.raises(ValidationError):
        dickson_roots(-1, 3)


def _eval_float(poly, x: float) -> float:
    out = 0.0
    for c in reversed(poly.coeffs):
        out = out * x + c
    return out


def test_dickson_value_matches_polynomial():
    from dendrispec import dickson_poly

    for x in (-2.0, -0.5, 0.0, 1.0, 2.5):
        for j in range(6):
            assert dickson_value(x, j, 3.0) == pytest.approx(
                _eval_float(dickson_poly(j, 3), x), abs=1e-9
            )


def test_geronimus_value_matches_polynomial():
    from dendrispec import geronimus_poly

    for x in (-2.5, -1.0, 0.0, 0.75, 3.0):
        for j in range(2, 7):
            for k in (3, 5):
                assert geronimus_value(x, j, float(k)) == pytest.approx(
                    _eval_float(geronimus_poly(j, k), x), abs=1e-8
                )


def test_q_value_matches_polynomial():
    from dendrispec import q_sequence

    seq = q_sequence([3, 2])
    for x in (-2.0, 0.0, 1.5, 3.0):
        for j in (1, 2, 3):
            assert q_value(x, (3, 2), j) == pytest.approx(_eval_float(seq[j], x), abs=1e-9)


def test_geronimus_roots_small():
    r5 = math.sqrt(5)
    assert geronimus_roots(1, 5) == pytest.approx([r5, -r5], abs=1e-12)
    assert geronimus_roots(2, 3) == pytest.approx([r5, 0.0, -r5], abs=1e-12)
    r6 = math.sqrt(6)
    assert geronimus_roots(3, 3) == pytest.approx([r6, 1.0, -1.0, -r6], abs=1e-12)


@pytest.mark.parametrize("levels", range(1, 9))
@pytest.mark.parametrize("k", [3, 5, 8])
def test_geronimus_roots_structure(levels, k):
    roots = geronimus_roots(levels, k)
    degree = levels + 1
    assert len(roots) == degree
    # symmetric about zero, strictly decreasing, zero present iff degree is odd
    assert all(x > y for x, y in zip(roots, roots[1:]))
    assert roots == pytest.approx([-r for r in reversed(roots)], abs=1e-12)
    assert (0.0 in roots) == (degree % 2 == 1)
    for r in roots:
        assert abs(geronimus_value(r, degree, k)) <= 1e-8 * (k - 1) ** (degree / 2)


@pytest.mark.parametrize("levels", range(1, 9))
@pytest.mark.parametrize("k", [3, 4, 7, 10])
def test_geronimus_roots_inside_brackets(levels, k):
    roots = geronimus_roots(levels, k)
    positive = [r for r in roots if r > 0.0]
    assert len(positive) == (levels + 1) // 2
    for index, root in enumerate(positive, start=1):
        lo, hi = geronimus_bracket(index, levels, k)
        assert lo < root < hi


def test_geronimus_roots_validation():
    with pytest.raises(ValidationError):
        geronimus_roots(1, 2)
    with pytest.raises(ValidationError):
        geronimus_roots(0, 3)


@pytest.mark.parametrize("levels,k", [(1, 3), (2, 5), (4, 3), (6, 10)])
def test_largest_eigenvalue_bounds(levels, k):
    top = geronimus_roots(levels, k)[0]
    assert top < 2.0 * math.sqrt(k - 1) * math.cos(math.pi / (2 * (levels + 2)))
    assert top < k  # spectral radius below the maximum degree


def test_path_spectrum_small():
    assert path_spectrum(1) == pytest.approx([math.sqrt(2), 0.0, -math.sqrt(2)], abs=1e-15)
    assert path_spectrum(2) == pytest.approx(
        [math.sqrt(3), 1.0, 0.0, -1.0, -math.sqrt(3)], abs=1e-15
    )


def test_tridiagonal_roots_match_closed_forms():
    assert tridiagonal_roots((3,), 2) == pytest.approx(
        [math.sqrt(3), -math.sqrt(3)], abs=1e-12
    )
    assert tridiagonal_roots((3, 2), 3) == pytest.approx(
        [math.sqrt(5), 0.0, -math.sqrt(5)], abs=1e-12
    )
    assert tridiagonal_roots((4, 3, 3), 1) == [0.0]


@pytest.mark.parametrize("j", [1, 2, 3, 4])
def test_tridiagonal_agrees_with_dickson(j):
    # dendrimer tuples route the same factor through both root finders
    entries = dendrimer(4, 3).entries
    assert tridiagonal_roots(entries, j) == pytest.approx(dickson_roots(j, 3), abs=1e-9)


def test_spectrum_small_dendrimer():
    spec = spectrum(dendrimer(2, 3))
    collapsed = [(e.value, e.multiplicity) for e in spec.collapsed()]
    values = [v for v, _ in collapsed]
    assert values == pytest.approx(
        [math.sqrt(5), math.sqrt(2), 0.0, -math.sqrt(2), -math.sqrt(5)], abs=1e-12
    )
    assert [m for _, m in collapsed] == [1, 2, 4, 2, 1]


def test_spectrum_star():
    spec = spectrum(dendrimer(1, 3))
    entries = [(e.value, e.multiplicity, e.factor_index) for e in spec.entries]
    assert entries[0][0] == pytest.approx(math.sqrt(3), abs=1e-12)
    assert [(m, f) for _, m, f in entries] == [(1, 2), (2, 1), (1, 2)]


def test_spectrum_methods_by_route():
    # k >= 3 dendrimers: closed forms for inner factors, bracketed closing factor
    methods = {e.factor_index: e.method for e in spectrum(dendrimer(2, 3)).entries}
    assert methods[1] == METHOD_CLOSED_FORM
    assert methods[2] == METHOD_CLOSED_FORM
    assert methods[3] == METHOD_BRACKETED
    # k = 2 dendrimers are paths with fully closed-form spectra
    assert {e.method for e in spectrum(dendrimer(3, 2)).entries} == {METHOD_CLOSED_FORM}
    # everything else goes through the tridiagonal eigensolve
    assert {e.method for e in spectrum(balanced_tree_from_tuple([2, 1, 2])).entries} == {
        METHOD_TRIDIAGONAL
    }


def test_spectrum_path_factor_attribution():
    # odd-index path eigenvalues belong to the closing factor, even to the inner one
    spec = spectrum(dendrimer(3, 2))
    by_value = {round(e.value, 9): e.factor_index for e in spec.entries}
    assert by_value[round(2 * math.cos(math.pi / 8), 9)] == 4
    assert by_value[round(2 * math.cos(2 * math.pi / 8), 9)] == 3
    assert by_value[0.0] == 3  # the zero eigenvalue is h = 4
    assert spec.multiplicity_total() == 7


@pytest.mark.parametrize(
    "entries",
    [[2], [3, 2], [2, 1, 2], [3, 2, 2], [4, 3, 3], [2, 2, 2, 2, 2]],
)
def test_spectrum_moments(entries):
    tree = balanced_tree_from_tuple(entries)
    spec = spectrum(tree)
    n = tree.total_vertices
    assert spec.multiplicity_total() == n
    first = math.fsum(float(e.multiplicity) * e.value for e in spec.entries)
    second = math.fsum(float(e.multiplicity) * e.value**2 for e in spec.entries)
    assert abs(first) <= 1e-8 * n
    assert second == pytest.approx(2 * (n - 1), rel=1e-8)


def test_spectrum_collapse_merges_across_factors():
    # tuple (2,1,2): zero is a root of both the linear and the cubic factor
    spec = spectrum(balanced_tree_from_tuple([2, 1, 2]))
    raw_zero = [e for e in spec.entries if abs(e.value) < 1e-12]
    assert sorted((e.multiplicity, e.factor_index) for e in raw_zero) == [(1, 3), (2, 1)]
    merged = [e for e in spec.collapsed() if abs(e.value) < 1e-12]
    assert len(merged) == 1
    assert merged[0].multiplicity == 3
    assert merged[0].factor_index == 1  # the larger contributor wins


def test_spectrum_flattened():
    flat = spectrum(dendrimer(1, 3)).flattened()
    assert len(flat) == 4
    assert flat == sorted(flat, reverse=True)


def test_spectrum_json_shape():
    payload = spectrum(dendrimer(2, 3)).to_json_dict(collapsed=True)
    assert payload["n"] == "10"
    assert [e["multiplicity"] for e in payload["entries"]] == ["1", "2", "4", "2", "1"]
    entry = payload["entries"][0]
    assert set(entry) == {"value", "multiplicity", "factor", "method"}
    assert isinstance(entry["value"], float)
    assert isinstance(entry["factor"], int)


def test_huge_dendrimer_spectrum_is_cheap():
    # multiplicities are exact big integers even when the tree is astronomically large
    spec = spectrum(dendrimer(30, 5))
    assert spec.multiplicity_total() == dendrimer(30, 5).total_vertices
    assert spec.multiplicity_total() > 2**53
