from hypothesis import given

from fredpairs import ID2, P1, SYM1, Matrix
from fredpairs.pair import defects, is_symmetrical
from fredpairs.quotient import quotient_pair, verify_transfer
from fredpairs.subspace import span_vectors

from strategies import pairs


def test_p1():
    q = quotient_pair(P1)
    assert q.x_complement.is_full()
    assert q.y_complement == span_vectors(2, [(0, 1)])
    assert q.s_bar.is_zero()
    assert q.t_bar == Matrix([[1], [0], [0]])
    assert is_symmetrical(q.pair)
    r = verify_transfer(P1)
    assert (r.quotient_a, r.quotient_c) == (2, 0) and r.ok


def test_identity_collapses():
    q = quotient_pair(ID2)
    assert q.s_bar.shape == (0, 0) and q.t_bar.shape == (0, 0)
    assert verify_transfer(ID2).ok


def test_symmetrical_pair_is_unchanged():
    assert quotient_pair(SYM1).pair == SYM1


@given(pairs(max_dim=6))
def test_transfer(pair):
    q = quotient_pair(pair)
    assert (q.s_bar @ q.t_bar).is_zero() and (q.t_bar @ q.s_bar).is_zero()
    qx, qy = q.projections
    # the induced maps commute with the projections
    assert qy @ pair.S == q.s_bar @ qx and qx @ pair.T == q.t_bar @ qy
    r = verify_transfer(pair)
    d = defects(pair)
    assert (r.quotient_a, r.quotient_c) == (d.a, d.c)
    assert r.quotient_index == d.a - d.c


@given(pairs(max_dim=4))
def test_symmetrical_inputs_are_fixed(pair):
    if is_symmetrical(pair):
        assert quotient_pair(pair).pair == pair
