from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles as O
from nkwb.exactfield import FieldMismatch, PrimeField, Q
from nkwb.linalg import (IncrementalSpan, Matrix, NoSolution, _rref_fraction_free, _rref_generic, _rref_mod_p,
                         cokernel, image, kernel, kron, rref_rows, rref_solve)
from strategies import F7, F13, F49, QI, elements, rows, small_matrix_rows, sparse_rationals

LINALG_FIELDS = [Q, F7, F13, QI, F49]


def _sparse_q_rows(max_dim=6):
    return st.tuples(st.integers(1, max_dim), st.integers(1, max_dim)).flatmap(
        lambda s: st.lists(st.lists(sparse_rationals(), min_size=s[1], max_size=s[1]),
                           min_size=s[0], max_size=s[0]).map(lambda r: (r, s[1])))


@given(_sparse_q_rows())
@settings(max_examples=150, deadline=None)
def test_fraction_free_rref_matches_generic(data):
    r, n = data
    assert _rref_fraction_free(r, n) == _rref_generic(Q, r, n)


@given(st.tuples(st.integers(1, 6), st.integers(1, 6)).flatmap(lambda s: rows(F13, *s).map(lambda r: (r, s[1]))))
@settings(max_examples=150, deadline=None)
def test_mod_p_rref_matches_generic(data):
    r, n = data
    assert _rref_mod_p(r, n, 13) == _rref_generic(F13, r, n)


@pytest.mark.parametrize("F", LINALG_FIELDS, ids=repr)
@given(data=st.data())
@settings(max_examples=40, deadline=None)
def test_rank_nullity(F, data):
    r, n = data.draw(small_matrix_rows(F))
    A = Matrix(F, r)
    K = kernel(A)
    assert A.rank() + K.dim == n
    for v in K.vectors():
        assert all(x == F.zero for x in A.apply(v))
    # independent nullspace
    assert K.dim == len(O.nullspace(F, r, n))


@pytest.mark.parametrize("F", LINALG_FIELDS, ids=repr)
@given(data=st.data())
@settings(max_examples=40, deadline=None)
def test_rref_is_reduced(F, data):
    r, n = data.draw(small_matrix_rows(F))
    R, piv = rref_rows(F, r, n)
    assert piv == sorted(piv)
    for i, p in enumerate(piv):
        assert R[i][p] == F.one
        assert all(R[k][p] == F.zero for k in range(len(R)) if k != i)
        assert all(x == F.zero for x in R[i][:p])


@pytest.mark.parametrize("F", LINALG_FIELDS, ids=repr)
@given(data=st.data())
@settings(max_examples=40, deadline=None)
def test_inverse(F, data):
    n = data.draw(st.integers(1, 4))
    A = Matrix(F, data.draw(rows(F, n, n)))
    if A.is_invertible():
        Ai = A.inverse()
        assert (A @ Ai).is_identity() and (Ai @ A).is_identity()
    else:
        assert A.rank() < n
        with pytest.raises(ArithmeticError):
            A.inverse()


@pytest.mark.parametrize("F", [Q, F13], ids=repr)
@given(data=st.data())
@settings(max_examples=40, deadline=None)
def test_solve(F, data):
    m, n, k = (data.draw(st.integers(1, 4)) for _ in range(3))
    A = Matrix(F, data.draw(rows(F, m, n)))
    X0 = Matrix(F, data.draw(rows(F, n, k)))
    B = A @ X0
    res = rref_solve(A, B)
    assert A @ res.solution == B
    assert res.nullspace.dim == n - A.rank()


def test_solve_inconsistent():
    A = Matrix(Q, [[Fraction(1), Fraction(1)], [Fraction(2), Fraction(2)]])
    B = Matrix(Q, [[Fraction(1)], [Fraction(3)]])
    with pytest.raises(NoSolution):
        rref_solve(A, B)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        rref_solve(Matrix.identity(Q, 2), Matrix.identity(F7, 2))


@pytest.mark.parametrize("F", [Q, F7], ids=repr)
@given(data=st.data())
@settings(max_examples=25, deadline=None)
def test_kron_mixed_product(F, data):
    a, b, c, d = (Matrix(F, data.draw(rows(F, 2, 2))) for _ in range(4))
    assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)


@given(data=st.data())
@settings(max_examples=25, deadline=None)
def test_large_mod_p_matmul_matches_python(data):
    F = PrimeField(13)
    n = 18  # large enough for the vectorised path
    A = Matrix(F, data.draw(rows(F, n, n)))
    B = Matrix(F, data.draw(rows(F, n, n)))
    expect = [[sum(A.rows[i][k] * B.rows[k][j] for k in range(n)) % 13 for j in range(n)] for i in range(n)]
    assert (A @ B).rows == expect


@pytest.mark.parametrize("F", [Q, F7], ids=repr)
@given(data=st.data())
@settings(max_examples=25, deadline=None)
def test_cokernel(F, data):
    r, n = data.draw(small_matrix_rows(F, 4))
    A = Matrix(F, r)
    ck = cokernel(A)
    assert ck.dim == A.nrows - A.rank()
    assert (ck.projection @ A).is_zero()
    if ck.dim:
        assert (ck.projection @ ck.section).is_identity()


@given(st.lists(st.lists(st.integers(0, 6), min_size=4, max_size=4), max_size=7))
@settings(max_examples=50, deadline=None)
def test_incremental_span(vectors):
    span = IncrementalSpan(F7, 4)
    for v in vectors:
        span.add(v)
    assert span.dim == Matrix(F7, vectors, len(vectors), 4).rank() if vectors else span.dim == 0
    assert all(span.contains(v) for v in vectors)
    assert image(Matrix.from_columns(F7, vectors, 4)).dim == span.dim if vectors else True


def test_power_and_trace():
    A = Matrix(Q, [[Fraction(0), Fraction(1)], [Fraction(-1), Fraction(0)]])
    assert A.power(4).is_identity()
    assert A.power(-1) == A.power(3)
    assert A.trace() == 0
