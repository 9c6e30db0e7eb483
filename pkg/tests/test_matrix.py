from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fredpairs import Matrix, identity, zeros
from fredpairs.matrix import as_scalar, block_diag, hstack, vstack

from strategies import low_rank_matrices, matrices, scalars, to_sympy


def test_scalars_are_exact():
    assert as_scalar(3) == 3 and isinstance(as_scalar(3), int)
    assert as_scalar("2/4") == Fraction(1, 2)
    assert as_scalar(Fraction(4, 2)) == 2
    for bad in (0.5, True, "0.5", None):
        with pytest.raises((TypeError, ValueError)):
            as_scalar(bad)


def test_shape_is_checked():
    with pytest.raises(ValueError):
        Matrix([[1, 2], [3]])
    assert Matrix([], shape=(0, 3)).shape == (0, 3)
    assert zeros(2, 0).shape == (2, 0)


def test_product_and_transpose():
    A = Matrix([[1, 2], [0, 1]])
    B = Matrix([["1/2", 0], [1, -1]])
    assert A @ B == Matrix([["5/2", -2], [1, -1]])
    assert (A @ B).T == B.T @ A.T
    assert A @ identity(2) == A


def test_inverse():
    A = Matrix([[2, 1], [1, 1]])
    assert A @ A.inverse() == identity(2)
    with pytest.raises(ZeroDivisionError):
        Matrix([[1, 2], [2, 4]]).inverse()


def test_json_round_trip_uses_strings():
    A = Matrix([["1/3", -2], [0, 5]])
    obj = A.to_json()
    assert obj["entries"][0][0] == "1/3"
    assert Matrix.from_json(obj) == A
    with pytest.raises((TypeError, ValueError)):
        Matrix.from_json({"rows": 1, "cols": 1, "entries": [[0.5]]})


def test_stacking():
    A = Matrix([[1]])
    B = Matrix([[2, 3]])
    assert hstack(A, B) == Matrix([[1, 2, 3]])
    assert vstack(B, B).shape == (2, 2)
    assert block_diag(A, B) == Matrix([[1, 0, 0], [0, 2, 3]])


@given(matrices(elements=scalars, max_dim=5))
def test_rref_matches_sympy(m):
    R, pivots, rank = m.rref()
    Rs, ps = to_sympy(m).rref()
    assert to_sympy(R) == Rs
    assert tuple(pivots) == tuple(ps)
    assert rank == len(ps)


@given(low_rank_matrices(max_dim=6))
def test_kernel_is_exact_and_complete(m):
    K = m.kernel_basis()
    assert K.rows == m.cols
    assert (m @ K).is_zero()
    assert K.rank() == K.cols == m.cols - m.rank()


@given(matrices(elements=scalars), st.data())
def test_product_matches_sympy(a, data):
    b = data.draw(matrices(rows=a.cols, elements=scalars))
    assert to_sympy(a @ b) == to_sympy(a) * to_sympy(b)
