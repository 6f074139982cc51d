from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from enhanced_brauer.exact_linalg import (
    DimensionMismatchError, SparseOperator, as_rational, determinant, echelonize, equal, inverse, nullspace,
    nullspace_of_columns, rank, span_of_operators, zero_subspace,
)

small = st.integers(-3, 3)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


def square(max_n=4):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n))


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        as_rational(0.5)
    assert as_rational("3/4") == Fraction(3, 4)


def test_products_and_transpose():
    a = SparseOperator.from_dense([[1, 2], [0, 1]])
    b = SparseOperator.from_dense([[0, 1], [1, 0]])
    assert (a @ b).to_dense() == [[2, 1], [1, 0]]
    assert a.transpose().to_dense() == [[1, 0], [2, 1]]
    assert a.commutator(b) == a @ b - b @ a
    assert (a * 0).is_zero()


def test_shape_errors():
    a = SparseOperator.zero(2, 3)
    with pytest.raises(DimensionMismatchError):
        a @ a
    with pytest.raises(DimensionMismatchError):
        a + SparseOperator.zero(3, 2)


def test_triplet_round_trip():
    a = SparseOperator.from_entries(3, 2, [(0, 1, Fraction(-2, 3)), (2, 0, 5)])
    text = a.to_triplets()
    assert text.splitlines()[0] == "dims 3 2"
    assert SparseOperator.from_triplets(text) == a


def test_vectorization_is_row_major():
    a = SparseOperator.from_entries(2, 3, [(1, 2, 7)])
    assert a.vectorize() == {1 * 3 + 2: 7}
    assert SparseOperator.from_vector(a.vectorize(), 2, 3) == a


def test_monomial_map():
    p = SparseOperator.from_entries(3, 3, [(1, 0, 2), (0, 1, 1), (2, 2, -1)])
    assert p.monomial_map() == {0: (1, 2), 1: (0, 1), 2: (2, -1)}
    assert SparseOperator.from_dense([[1, 1], [0, 1]]).monomial_map() is None


@given(matrices())
def test_rank_matches_sympy(rows):
    assert rank(SparseOperator.from_dense(rows)) == sympy.Matrix(rows).rank()


@given(matrices())
def test_rank_nullity(rows):
    a = SparseOperator.from_dense(rows)
    null = nullspace(a)
    assert rank(a) + null.dim == a.ncols
    for v in null.basis:
        assert not a.apply(v)


@given(matrices())
def test_echelonize_is_idempotent_and_order_free(rows):
    n = len(rows[0])
    s = echelonize(rows)
    assert echelonize(s.basis, length=n) == s
    assert echelonize(list(reversed(rows))) == s
    for r in rows:
        assert r in s


@given(square())
def test_inverse_and_determinant_match_sympy(rows):
    a = SparseOperator.from_dense(rows)
    m = sympy.Matrix(rows)
    assert determinant(a) == Fraction(int(m.det()))
    if m.det() == 0:
        with pytest.raises(ZeroDivisionError):
            inverse(a)
    else:
        assert a @ inverse(a) == SparseOperator.identity(a.nrows)


def test_nullspace_of_columns():
    cols = [{"x": 1, "y": 2}, {"x": 2, "y": 4}, {"y": 1}]
    null = nullspace_of_columns(cols)
    assert len(null) == 1
    c = null[0]
    assert 1 * c.get(0, 0) + 2 * c.get(1, 0) == 0


def test_subspace_equality_and_sum():
    ops = [SparseOperator.identity(2), SparseOperator.from_dense([[0, 1], [0, 0]])]
    a = span_of_operators(ops)
    b = span_of_operators([ops[0] + ops[1], ops[0] - ops[1]])
    assert equal(a, b)
    assert (a + zero_subspace(4)) == a
    assert a.contains_space(span_of_operators(ops[:1]))
    with pytest.raises(DimensionMismatchError):
        equal(a, zero_subspace(3))
