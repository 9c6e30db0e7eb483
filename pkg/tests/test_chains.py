import pytest
from hypothesis import given, strategies as st

from fredpairs import C1, C2, ChainComplex, Matrix, identity, zeros
from fredpairs.chains import chain_report, fold, homotopy_defect, is_split_chain, splitting_homotopy
from fredpairs.errors import DimensionError, NotAComplexError
from fredpairs.generators import exact_chain, random_chain
from fredpairs.pair import is_symmetrical, pair_index
from fredpairs.subspace import span

seeds = st.integers(0, 2**32)


def test_c1_is_exact():
    r = chain_report(C1)
    assert r.homology_dims == (0, 0, 0) and r.index == 0


def test_c2():
    r = chain_report(C2)
    assert r.homology_dims == (0, 1)
    assert r.index == -1 == C2.dims[0] - C2.dims[1]


def test_single_space():
    assert chain_report(ChainComplex((3,), ())).index == 3


def test_fold_fixtures():
    p = fold(C1)
    assert (p.x_dim, p.y_dim) == (2, 2) and pair_index(p) == 0
    q = fold(C2)
    assert q.S == zeros(2, 1) and q.T == Matrix([[1, 0]])
    assert pair_index(q) == -1
    empty = fold(ChainComplex((0, 0), (zeros(0, 0),)))
    assert (empty.x_dim, empty.y_dim) == (0, 0) and pair_index(empty) == 0


def test_validation():
    with pytest.raises(NotAComplexError):
        ChainComplex((1, 1, 1), (Matrix([[1]]), Matrix([[1]])))
    with pytest.raises(DimensionError):
        ChainComplex((1, 2), (Matrix([[1]]),))
    # the same maps are accepted as a plain chain
    ChainComplex((1, 1, 1), (Matrix([[1]]), Matrix([[1]])), is_complex=False)


def test_homotopy_fixtures():
    assert all(k.is_zero() for k in splitting_homotopy(C1).k)
    k = splitting_homotopy(C2).k
    assert k[0].is_zero()
    assert k[1] == Matrix([[0, 0], [0, 1]])
    sh = splitting_homotopy(ChainComplex((1, 1), (zeros(1, 1),)))
    assert sh.k == (identity(1), identity(1))
    assert all(h.is_zero() for h in sh.h)


def test_homotopy_needs_a_complex():
    c = ChainComplex((1, 1, 1), (Matrix([[1]]), Matrix([[1]])), is_complex=False)
    with pytest.raises(NotAComplexError):
        splitting_homotopy(c)


def test_always_split():
    assert is_split_chain(C1)[0] and is_split_chain(C2)[0]


def test_json_round_trip():
    assert ChainComplex.from_json(C1.to_json()) == C1


@given(st.integers(1, 6), seeds, st.booleans())
def test_fold_preserves_index(length, seed, cx):
    c = random_chain(length, 3, seed, cx)
    r = chain_report(c)
    p = fold(c)
    assert pair_index(p) == r.index
    if cx:
        assert r.index == sum((-1) ** i * d for i, d in enumerate(c.dims))
        assert is_symmetrical(p)


@given(st.integers(1, 6), seeds)
def test_splitting_homotopy(length, seed):
    c = random_chain(length, 3, seed)
    sh = splitting_homotopy(c)
    r = chain_report(c)
    for p in range(length):
        assert homotopy_defect(c, sh, p).is_zero()
        assert sh.k[p] @ sh.k[p] == sh.k[p]
        assert span(sh.k[p]).dim == r.homology_dims[p]


@given(st.integers(1, 6), seeds)
def test_exact_complexes_have_no_homology(length, seed):
    c = exact_chain(length, 2, seed)
    assert all(k.is_zero() for k in splitting_homotopy(c).k)
    assert chain_report(c).index == 0
