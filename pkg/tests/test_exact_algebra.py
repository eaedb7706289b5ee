from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from ncsym.combinatorics import SetPartition
from ncsym.lincomb import LinComb, bilinear, format_coeff, tensor
from ncsym.matrix import ExactMatrix, det_exact, kernel_basis, rank
from ncsym.morphisms import union_factorial_matrix
from ncsym.series import PowerSeriesTable
from oracles import cofactor_det

small_ints = st.integers(-6, 6)


def square(max_size):
    return st.integers(1, max_size).flatmap(
        lambda k: st.lists(st.lists(small_ints, min_size=k, max_size=k), min_size=k, max_size=k)
    )


def rectangular(max_size):
    return st.tuples(st.integers(1, max_size), st.integers(1, max_size)).flatmap(
        lambda rc: st.lists(st.lists(small_ints, min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0])
    )


# --- LinComb ------------------------------------------------------------------


def test_zero_coefficients_are_dropped():
    x = LinComb({"a": 1, "b": 0})
    assert dict(x.items()) == {"a": 1}
    assert x + (-x) == 0 and not (x - x).terms
    assert x.scale(0) == 0


def test_coefficients_are_exact():
    x = LinComb({"a": Fraction(1, 3)}) + LinComb({"a": Fraction(2, 3)})
    assert x["a"] == 1 and isinstance(x["a"], Fraction)
    with pytest.raises(TypeError):
        LinComb({"a": 0.5})


def test_format_coeff():
    assert format_coeff(Fraction(3, 1)) == "3"
    assert format_coeff(Fraction(-1, 2)) == "-1/2"


def test_basis_mismatch_raises():
    with pytest.raises(ValueError):
        LinComb({"a": 1}, "m") + LinComb({"a": 1}, "h")


def test_bilinear_extension_reproduces_basis_values():
    def f(a, b):
        return LinComb({a + b: 1, b + a: 2})

    x, y = LinComb({"p": 1}), LinComb({"q": 1})
    assert bilinear(f, x, y) == f("p", "q")
    z = bilinear(f, LinComb({"p": 2, "r": 1}), y)
    assert z == LinComb({"pq": 2, "qp": 4, "rq": 1, "qr": 2})


def test_tensor_keys_are_pairs():
    x, y = LinComb({"a": 2}), LinComb({"b": 3, "c": 1})
    assert tensor(x, y) == LinComb({("a", "b"): 6, ("a", "c"): 2})


def test_lincomb_sorted_printing_is_deterministic():
    x = LinComb({SetPartition.parse("1|2"): 1, SetPartition.parse("12"): 1}, "m")
    assert [str(k) for k, _ in x.sorted_items()] == ["12", "1|2"]


@given(st.dictionaries(st.sampled_from("abcde"), st.fractions(max_denominator=9), max_size=5))
def test_json_round_trip(terms):
    x = LinComb(terms)
    records = x.to_json(lambda k: {"key": k})
    assert LinComb.from_json(records, lambda r: r["key"]) == x


# --- matrices -------------------------------------------------------------------


def test_det_examples():
    assert det_exact(ExactMatrix([[1, 1], [1, 2]])) == 1
    assert det_exact(ExactMatrix.identity(5)) == 1
    assert det_exact(union_factorial_matrix(4)) == 117
    with pytest.raises(ValueError):
        det_exact(ExactMatrix([[1, 2, 3]]))


def test_det_4x4_matrix_entries():
    # rows and columns in the order (111) < (12) < (21) < (3)
    assert union_factorial_matrix(3).entries == [[1, 1, 1, 1], [1, 2, 1, 2], [1, 1, 2, 2], [1, 2, 2, 6]]
    assert det_exact(union_factorial_matrix(3)) == 3


@given(square(5))
def test_det_agrees_with_cofactor_expansion(rows):
    assert det_exact(ExactMatrix(rows)) == cofactor_det(rows)


@given(square(4), st.integers(1, 5))
def test_det_of_rational_matrix(rows, d):
    M = [[Fraction(x, d) for x in r] for r in rows]
    assert det_exact(ExactMatrix(M)) == cofactor_det(M)


def test_det_rejects_floats():
    with pytest.raises(TypeError):
        ExactMatrix([[1.0]])


def test_kernel_examples():
    assert len(kernel_basis(ExactMatrix.zeros(2, 3))) == 3
    assert kernel_basis(ExactMatrix([[1, 2], [3, 4]])) == []
    (v,) = kernel_basis(ExactMatrix([[1, 1]]))
    assert v[0] == -v[1] != 0


@given(rectangular(6))
def test_kernel_vectors_and_rank(rows):
    M = ExactMatrix(rows)
    basis = kernel_basis(M)
    for v in basis:
        assert all(x == 0 for x in M.apply(v))
    assert rank(M) + len(basis) == M.cols
    assert rank(M) == sympy.Matrix(rows).rank()


def test_matrix_json_round_trip():
    M = ExactMatrix([[Fraction(1, 2), 3], [-4, Fraction(5, 7)]])
    assert ExactMatrix.from_json(M.to_json()) == M
    assert "e" not in M.to_json().lower()


# --- power series ---------------------------------------------------------------


def test_series_reciprocal_of_geometric():
    g = PowerSeriesTable.geometric(3, 8)
    inv = g.reciprocal()
    assert list(inv) == [1, -3] + [0] * 7
    assert g * inv == PowerSeriesTable.one(8)


def test_series_needs_unit_constant():
    with pytest.raises(ZeroDivisionError):
        PowerSeriesTable([0, 1], 3).reciprocal()


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=8), st.lists(st.integers(-5, 5), min_size=1, max_size=8))
def test_series_product_matches_sympy(a, b):
    q = sympy.symbols("q")
    p = min(len(a), len(b)) - 1
    A, B = PowerSeriesTable(a, len(a) - 1), PowerSeriesTable(b, len(b) - 1)
    expected = sympy.Poly(sum(c * q**i for i, c in enumerate(a)) * sum(c * q**i for i, c in enumerate(b)), q)
    coeffs = [expected.coeff_monomial(q**k) for k in range(p + 1)]
    assert list(A * B) == coeffs and (A * B).precision == p


def test_series_truncation_is_consistent():
    A = PowerSeriesTable([1, 2, 3], 2)
    B = PowerSeriesTable([1, 1, 1, 1, 1], 4)
    assert (A + B).precision == 2 and (A * B).precision == 2
    with pytest.raises(IndexError):
        A[3]
