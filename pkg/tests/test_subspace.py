import pytest
from hypothesis import given, strategies as st

from fredpairs import Matrix, zeros
from fredpairs.errors import ContainmentError, DimensionError, InfeasibleComplementError
from fredpairs.subspace import (
    complement_in,
    constrained_complement,
    direct_sum_of,
    full,
    image,
    intersect,
    is_subset,
    kernel,
    preimage,
    quotient_map,
    rel_codim,
    span,
    span_vectors,
    sum_of,
    zero,
)

from strategies import low_rank_matrices, to_sympy

N = 5


def spaces(n=N):
    return low_rank_matrices(rows=n, max_dim=4).map(span)


def test_canonical_form_makes_equality_structural():
    a = span_vectors(3, [(1, 1, 0), (0, 1, 0)])
    b = span_vectors(3, [(2, 0, 0), (0, 3, 0), (1, 1, 0)])
    assert a == b and hash(a) == hash(b)
    assert a.basis == Matrix([[1, 0], [0, 1], [0, 0]])


def test_zero_and_full():
    assert zero(3).dim == 0 and full(3).dim == 3
    assert span(zeros(2, 0)) == zero(2)
    assert kernel(Matrix([], shape=(0, 2))) == full(2)


def test_ambient_mismatch():
    with pytest.raises(DimensionError):
        sum_of(zero(2), zero(3))


@given(spaces(), spaces())
def test_modular_dimension_formula(U, V):
    assert sum_of(U, V).dim + intersect(U, V).dim == U.dim + V.dim
    I = intersect(U, V)
    assert is_subset(I, U) and is_subset(I, V)
    assert is_subset(U, sum_of(U, V))


@given(spaces(), spaces())
def test_intersection_against_sympy(U, V):
    # a vector lies in U ∩ V iff it is in both column spaces
    I = intersect(U, V)
    for v in I.vectors():
        for W in (U, V):
            M = to_sympy(W.basis)
            col = to_sympy(Matrix([[x] for x in v], shape=(N, 1)))
            assert M.rank() == M.row_join(col).rank()


@given(spaces(), spaces())
def test_complement(U, V):
    inner = intersect(U, V)
    C = complement_in(inner, V)
    assert direct_sum_of(inner, C)
    assert sum_of(inner, C) == V


def test_complement_requires_containment():
    with pytest.raises(ContainmentError):
        complement_in(span_vectors(2, [(1, 0)]), span_vectors(2, [(0, 1)]))


def test_constrained_complement():
    outer = full(2)
    inner = span_vectors(2, [(1, 0)])
    pool = span_vectors(2, [(1, 1)])
    C = constrained_complement(inner, outer, pool)
    assert C == pool
    with pytest.raises(InfeasibleComplementError):
        constrained_complement(inner, outer, inner)


@given(low_rank_matrices(rows=4, cols=N), spaces())
def test_image_and_preimage(A, U):
    im = image(A, U)
    assert im.dim == rel_codim(U, kernel(A))
    pre = preimage(A, im)
    assert is_subset(U, pre)
    assert pre == sum_of(U, kernel(A))


@given(spaces())
def test_quotient_map(W):
    Q, sec = quotient_map(W)
    assert kernel(Q) == W
    assert Q @ sec == Matrix([[int(i == j) for j in range(N - W.dim)] for i in range(N - W.dim)], shape=(N - W.dim,) * 2)


@given(spaces())
def test_json_round_trip(U):
    from fredpairs import Subspace

    assert Subspace.from_json(U.to_json()) == U


@given(spaces(), st.data())
def test_coordinates(U, data):
    coeffs = data.draw(st.lists(st.integers(-3, 3), min_size=U.dim, max_size=U.dim))
    v = U.basis.apply(coeffs)
    assert U.contains(v)
    assert U.basis.apply(U.coordinates(v)) == v
