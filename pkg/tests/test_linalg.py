import itertools

import pytest
from hypothesis import given, strategies as st

from combdim import linalg as la
from combdim.errors import BudgetExceeded, FieldMismatch
from combdim.linalg import FpMatrix, Subspace

from conftest import all_vectors, brute_span


def mat(p, rows, cols=None):
    return FpMatrix.from_rows(p, rows, cols)


def test_rref_identity():
    I = FpMatrix.identity(2, 3)
    R, r = la.rref(I)
    assert R == I and r == 3


def test_rref_small_f3():
    R, r = la.rref(mat(3, [[2, 1], [1, 2]]))
    assert R == mat(3, [[1, 2], [0, 0]]) and r == 1
    assert brute_span([(2, 1), (1, 2)], 3, 2) == {(0, 0), (1, 2), (2, 1)}


def test_rref_zero():
    R, r = la.rref(FpMatrix.zeros(5, 2, 4))
    assert R.is_zero() and r == 0


def test_kernel_examples():
    assert la.kernel(FpMatrix.identity(3, 3)).is_zero()
    K = la.kernel(mat(2, [[1, 1]]))
    assert K.rank == 1 and K.basis == ((1, 1),)
    assert {v for v in all_vectors(2, 2) if (v[0] + v[1]) % 2 == 0} == brute_span(K.basis, 2, 2)
    assert la.kernel(FpMatrix.zeros(2, 2, 3)).is_full()


def test_span_examples():
    U = la.span([(1, 1), (2, 2)], 2, 3)
    assert U.rank == 1 and U.basis == ((1, 1),)
    assert la.span([], 3, 2).is_zero()
    assert la.span([(1, 0), (0, 1)], 2, 2).is_full()


def test_contains_enumerate_eq():
    assert la.contains(Subspace.zero(2, 3), (0, 0, 0))
    assert set(la.enumerate_vectors(la.span([(1, 2)], 2, 3))) == {(0, 0), (1, 2), (2, 1)}
    assert la.subspace_eq(la.span([(1, 1)], 2, 3), la.span([(2, 2)], 2, 3))


def test_enumerate_budget():
    with pytest.raises(BudgetExceeded) as info:
        la.enumerate_vectors(Subspace.full(3, 5), budget=100)
    assert info.value.required == 243


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        la.subspace_sum(Subspace.full(2, 2), Subspace.full(3, 2))


def test_inverse_roundtrip():
    m = mat(5, [[1, 2], [3, 4]])
    assert la.matmul(m, la.inverse(m)) == FpMatrix.identity(5, 2)


def test_non_prime_rejected():
    with pytest.raises(ValueError):
        FpMatrix.zeros(4, 1, 1)


# -- properties --------------------------------------------------------------

primes = st.sampled_from([2, 3, 5])


@st.composite
def matrices(draw, max_dim=4):
    p = draw(primes)
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(1, max_dim))
    rows = draw(st.lists(st.lists(st.integers(0, p - 1), min_size=c, max_size=c), min_size=r, max_size=r))
    return FpMatrix.from_rows(p, rows, cols=c)


@st.composite
def subspace_pairs(draw):
    p = draw(st.sampled_from([2, 3]))
    d = draw(st.integers(1, 4))
    vec = st.tuples(*[st.integers(0, p - 1)] * d)
    U = draw(st.lists(vec, max_size=3))
    W = draw(st.lists(vec, max_size=3))
    return p, d, U, W


@given(matrices())
def test_rref_idempotent(m):
    R, r = la.rref(m)
    R2, r2 = la.rref(R)
    assert R2 == R and r2 == r


@given(matrices())
def test_rank_nullity(m):
    assert la.rank(m) + la.kernel(m).rank == m.cols


@given(matrices())
def test_kernel_is_annihilated(m):
    for v in la.kernel(m).basis:
        assert not any(la.mat_vec(m, v))


@given(subspace_pairs())
def test_dimension_formula(case):
    p, d, U, W = case
    A, B = la.span(U, d, p), la.span(W, d, p)
    assert la.subspace_sum(A, B).rank + la.intersect(A, B).rank == A.rank + B.rank


@given(subspace_pairs())
def test_intersection_matches_enumeration(case):
    p, d, U, W = case
    A, B = la.span(U, d, p), la.span(W, d, p)
    expect = brute_span(U, p, d) & brute_span(W, p, d)
    assert set(la.enumerate_vectors(la.intersect(A, B))) == expect


@given(subspace_pairs())
def test_span_matches_enumeration(case):
    p, d, U, _ = case
    assert set(la.enumerate_vectors(la.span(U, d, p))) == brute_span(U, p, d)


@given(subspace_pairs())
def test_sum_and_intersect_idempotent(case):
    p, d, U, _ = case
    A = la.span(U, d, p)
    assert la.subspace_sum(A, A) == A == la.intersect(A, A)
