"""Hypothesis strategies and small helpers shared by the test modules."""


from hypothesis import strategies as st

from fredpairs import Matrix, OperatorPair

small_ints = st.integers(min_value=-3, max_value=3)
scalars = st.one_of(small_ints, st.fractions(min_value=-3, max_value=3, max_denominator=4))


@st.composite
def matrices(draw, rows=None, cols=None, max_dim=4, elements=small_ints):
    r = draw(st.integers(0, max_dim)) if rows is None else rows
    c = draw(st.integers(0, max_dim)) if cols is None else cols
    data = [[draw(elements) for _ in range(c)] for _ in range(r)]
    return Matrix(data, shape=(r, c))


@st.composite
def low_rank_matrices(draw, rows=None, cols=None, max_dim=5):
    # products of thin factors hit rank deficiency far more often than uniform entries
    r = draw(st.integers(0, max_dim)) if rows is None else rows
    c = draw(st.integers(0, max_dim)) if cols is None else cols
    k = draw(st.integers(0, max(min(r, c), 0)))
    A = draw(matrices(r, k))
    B = draw(matrices(k, c))
    return A @ B


@st.composite
def pairs(draw, max_dim=5):
    x = draw(st.integers(0, max_dim))
    y = draw(st.integers(0, max_dim))
    S = draw(low_rank_matrices(y, x))
    T = draw(low_rank_matrices(x, y))
    return OperatorPair(S, T)


def to_sympy(m: Matrix):
    import sympy

    return sympy.Matrix(m.rows, m.cols, [sympy.Rational(x.numerator, x.denominator) for row in m.data for x in row])


