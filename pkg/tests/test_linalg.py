from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from comprelie.errors import InputError
from comprelie.linalg import (
    SubspaceBasis,
    as_fraction,
    complement_basis,
    coordinates,
    eye,
    frac_array,
    in_span,
    integer_scaled,
    inverse,
    kernel_basis,
    rank,
    rref,
    solve,
    zeros,
)

small = st.integers(-4, 4)


@st.composite
def matrices(draw, max_rows=4, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))
    return frac_array(rows)


def test_rref_examples():
    R, rk, piv = rref(eye(2))
    assert np.all(R == eye(2)) and rk == 2 and piv == [0, 1]
    R, rk, piv = rref(zeros((3, 2)))
    assert np.all(R == 0) and rk == 0 and piv == []
    R, rk, piv = rref(frac_array([[1, 2], [2, 4]]))
    assert R.tolist() == [[1, 2], [0, 0]] and rk == 1 and piv == [0]


def test_kernel_examples():
    assert kernel_basis(eye(2)).dim == 0
    assert kernel_basis(zeros((2, 3))).dim == 3
    (k,) = kernel_basis(frac_array([[1, 2]])).vectors
    assert k[0] == -2 * k[1] and k[1] != 0


def test_solve_examples():
    b = frac_array([3, -1])
    assert np.all(solve(eye(2), b) == b)
    assert solve(zeros((2, 2)), frac_array([1, 0])) is None
    assert solve(frac_array([[1, 1]]), frac_array([2])).tolist() == [2, 0]
    with pytest.raises(InputError):
        solve(eye(2), frac_array([1]))


def test_complement_examples():
    full = SubspaceBasis(3, frac_array([[1, 0, 0], [0, 1, 0]]))
    assert complement_basis(full, full).dim == 0
    e1 = SubspaceBasis(1, frac_array([[1]]))
    assert complement_basis(SubspaceBasis(1, zeros((0, 1))), e1).vectors.tolist() == [[1]]
    sub = SubspaceBasis(3, frac_array([[1, 0, 0]]))
    assert complement_basis(sub, full).vectors.tolist() == [[0, 1, 0]]
    with pytest.raises(InputError):
        complement_basis(SubspaceBasis(3, frac_array([[0, 0, 1]])), full)


def test_subspace_rejects_dependent_rows():
    with pytest.raises(InputError):
        SubspaceBasis(2, frac_array([[1, 2], [2, 4]]))
    assert SubspaceBasis.spanned_by(2, frac_array([[1, 2], [2, 4]])).dim == 1


def test_as_fraction_rejects_floats():
    assert as_fraction("3/6") == Fraction(1, 2)
    with pytest.raises(InputError):
        as_fraction(0.5)
    with pytest.raises(InputError):
        as_fraction(True)


def test_inverse():
    A = frac_array([[2, 1], [1, 1]])
    assert np.all(inverse(A) @ A == eye(2))
    assert inverse(frac_array([[1, 2], [2, 4]])) is None


@given(matrices())
def test_rref_idempotent(M):
    R = rref(M)[0]
    assert np.all(rref(R)[0] == R)


@given(matrices())
def test_rank_nullity_and_kernel(M):
    K = kernel_basis(M)
    assert rank(M) + K.dim == M.shape[1]
    for v in K:
        assert not np.any(M @ v)


@given(matrices(), st.lists(small, min_size=5, max_size=5))
def test_solve_consistent_systems(M, x):
    x = frac_array(x[: M.shape[1]])
    b = M @ x
    y = solve(M, b)
    assert y is not None and np.all(M @ y == b)


@given(matrices())
def test_solve_reports_inconsistency(M):
    # a right-hand side outside the column space: append a fresh coordinate
    Mx = np.vstack([M, zeros((1, M.shape[1]))])
    b = zeros(Mx.shape[0])
    b[-1] = 1
    assert solve(Mx, b) is None


@settings(max_examples=50)
@given(matrices(max_rows=3, max_cols=4), matrices(max_rows=3, max_cols=4))
def test_complement_splits_the_span(A, B):
    if A.shape[1] != B.shape[1]:
        return
    dim = A.shape[1]
    sub = SubspaceBasis.spanned_by(dim, A)
    full = SubspaceBasis.spanned_by(dim, np.vstack([A, B]))
    comp = complement_basis(sub, full)
    assert sub.dim + comp.dim == full.dim
    joined = np.vstack([sub.vectors, comp.vectors]) if sub.dim + comp.dim else zeros((0, dim))
    assert rank(joined) == full.dim
    for v in full:
        assert coordinates(joined, v) is not None
        assert in_span(SubspaceBasis(dim, joined), v)


@given(st.lists(st.fractions(max_denominator=20), min_size=1, max_size=6))
def test_integer_scaled(vals):
    a = frac_array(vals)
    D, (ints,) = integer_scaled(a)
    assert all(type(x) is int for x in ints)
    assert np.all(frac_array(ints) / D == a)
