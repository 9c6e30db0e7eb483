"""Pairs of operators S: X -> Y, T: Y -> X and their defect calculus.

Everything here is exact.  The central object besides the pair itself is a
graded string basis of the map Phi(x, y) = (T y, S x) on X ⊕ Y: a basis made of
chains h, Phi h, Phi^2 h, ... ending in the kernel, plus a basis of the part
where Phi is invertible.  The decomposition subspaces are read off that basis,
which is what makes all the later nested constructions line up.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .errors import DimensionError, InconsistencyError, NotGeneralizedInverseError
from .matrix import Matrix, hstack, identity, zeros
from .subspace import (
    Subspace,
    complement_in,
    direct_sum_of,
    full,
    image,
    intersect,
    kernel,
    rel_codim,
    span,
    span_vectors,
    sum_of,
    zero,
)

__all__ = [
    "OperatorPair",
    "DefectProfile",
    "PairDecomposition",
    "GinvWitness",
    "StringBasis",
    "ID2",
    "P1",
    "SYM1",
    "Z",
    "defects",
    "pair_index",
    "swap",
    "pair_from_operator",
    "string_basis",
    "decompose",
    "generalized_inverse",
    "ginv_with",
    "normalize_ginv",
    "is_generalized_inverse",
    "adjoint_pair",
    "is_symmetrical",
    "is_decomposably_regular",
    "invertible_generalized_inverse",
]


@dataclass(frozen=True)
class OperatorPair:
    """S is ``y_dim x x_dim`` and T is ``x_dim x y_dim``."""

    S: Matrix
    T: Matrix

    def __post_init__(self):
        if self.S.rows != self.T.cols or self.S.cols != self.T.rows:
            raise DimensionError(
                f"S is {self.S.rows}x{self.S.cols} and T is {self.T.rows}x{self.T.cols}; "
                "expected S: X -> Y and T: Y -> X"
            )

    @classmethod
    def of(cls, S, T, x_dim: int | None = None, y_dim: int | None = None) -> "OperatorPair":
        """Build a pair from nested lists; dims are needed only when a side is empty."""
        if isinstance(S, Matrix) and isinstance(T, Matrix):
            return cls(S, T)
        if x_dim is None or y_dim is None:
            x_dim = len(S[0]) if S else len(T)
            y_dim = len(S)
        S_m = S if isinstance(S, Matrix) else Matrix(S, shape=(y_dim, x_dim))
        T_m = T if isinstance(T, Matrix) else Matrix(T, shape=(x_dim, y_dim))
        return cls(S_m, T_m)

    @property
    def x_dim(self) -> int:
        return self.S.cols

    @property
    def y_dim(self) -> int:
        return self.S.rows

    def to_json(self) -> dict:
        return {"x_dim": self.x_dim, "y_dim": self.y_dim, "S": self.S.to_json(), "T": self.T.to_json()}

    @classmethod
    def from_json(cls, obj) -> "OperatorPair":
        """``x_dim`` and ``y_dim`` are optional; when given they must match S and T."""
        try:
            S = Matrix.from_json(obj["S"])
            T = Matrix.from_json(obj["T"])
            x, y = obj.get("x_dim", S.cols), obj.get("y_dim", S.rows)
        except (KeyError, TypeError, AttributeError) as exc:
            raise DimensionError("pair JSON needs 'S' and 'T'") from exc
        if S.shape != (y, x) or T.shape != (x, y):
            raise DimensionError(
                f"declared dims X={x}, Y={y} but S is {S.rows}x{S.cols} and T is {T.rows}x{T.cols}"
            )
        return cls(S, T)


@dataclass(frozen=True)
class DefectProfile:
    a: int
    b: int
    c: int
    d: int

    @property
    def index(self) -> int:
        return self.a - self.b - self.c + self.d

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d, "index": self.index}


@dataclass(frozen=True)
class PairDecomposition:
    ns_rt: Subspace
    x1: Subspace
    x2: Subspace
    x_tilde: Subspace
    nt_rs: Subspace
    y1: Subspace
    y2: Subspace
    y_tilde: Subspace

    def to_json(self) -> dict:
        return {name: getattr(self, name).to_json() for name in self.__dataclass_fields__}


@dataclass(frozen=True)
class GinvWitness:
    s_prime: Matrix
    t_prime: Matrix
    normalized: bool


# -- fixtures ---------------------------------------------------------------

ID2 = OperatorPair(identity(2), identity(2))
P1 = OperatorPair(Matrix([[1, 0, 0], [0, 0, 0]]), Matrix([[0, 1], [0, 0], [0, 0]]))
SYM1 = OperatorPair(Matrix([[1, 0], [0, 0]]), Matrix([[0, 0], [0, 1]]))


def Z(m: int, n: int) -> OperatorPair:
    """The zero pair with dim X = m and dim Y = n."""
    return OperatorPair(zeros(n, m), zeros(m, n))


# -- defects ----------------------------------------------------------------


@lru_cache(maxsize=4096)
def _kernels_ranges(pair: OperatorPair):
    return kernel(pair.S), span(pair.T), kernel(pair.T), span(pair.S)


def defects(pair: OperatorPair) -> DefectProfile:
    ns, rt, nt, rs = _kernels_ranges(pair)
    return DefectProfile(
        a=rel_codim(ns, rt),
        b=rel_codim(rt, ns),
        c=rel_codim(nt, rs),
        d=rel_codim(rs, nt),
    )


def pair_index(pair: OperatorPair) -> int:
    return defects(pair).index


def swap(pair: OperatorPair) -> OperatorPair:
    """The pair (T, S) acting from Y to X."""
    return OperatorPair(pair.T, pair.S)


def pair_from_operator(S: Matrix) -> OperatorPair:
    return OperatorPair(S, zeros(S.cols, S.rows))


# -- string basis -------------------------------------------------------------


@dataclass(frozen=True)
class Chain:
    """One string h, Phi h, ..., Phi^(k-1) h with Phi^k h = 0.

    ``head_side`` is "X" or "Y"; the vector at position j lives on the head
    side when j is even and on the other side when j is odd.
    """

    head_side: str
    vectors: tuple

    @property
    def length(self) -> int:
        return len(self.vectors)

    def side_at(self, j: int) -> str:
        if j % 2 == 0:
            return self.head_side
        return "Y" if self.head_side == "X" else "X"


@dataclass(frozen=True)
class StringBasis:
    """String basis of the nilpotent part plus the invertible part on each side."""

    x_dim: int
    y_dim: int
    chains: tuple
    x_inv: Subspace
    y_inv: Subspace

    def select(self, side: str, keep: Callable[[Chain, int], bool]) -> Subspace:
        """Span of the string vectors on ``side`` whose (chain, position) pass ``keep``."""
        n = self.x_dim if side == "X" else self.y_dim
        vecs = [
            v
            for ch in self.chains
            for j, v in enumerate(ch.vectors)
            if ch.side_at(j) == side and keep(ch, j)
        ]
        return span_vectors(n, vecs)

    def ends(self, side: str, positions: Callable[[int], bool]) -> Subspace:
        return self.select(side, lambda ch, j: j == ch.length - 1 and positions(j))

    def non_ends(self, side: str, positions: Callable[[int], bool]) -> Subspace:
        return self.select(side, lambda ch, j: j < ch.length - 1 and positions(j))

    def heads(self, side: str, lengths: Callable[[int], bool]) -> Subspace:
        return self.select(side, lambda ch, j: j == 0 and lengths(ch.length))


def _alternating_products(first: Matrix, second: Matrix):
    # first, second·first, first·second·first, ...
    cur = first
    k = 0
    while True:
        yield cur
        cur = (second if k % 2 == 0 else first) @ cur
        k += 1


def _range_limits(pair: OperatorPair) -> tuple[Subspace, Subspace]:
    # joint iteration R_S <- S(R_T), R_T <- T(R_S) from (Y, X) until it repeats
    r_s, r_t = full(pair.y_dim), full(pair.x_dim)
    while True:
        n_s, n_t = image(pair.S, r_t), image(pair.T, r_s)
        if n_s == r_s and n_t == r_t:
            return r_t, r_s
        r_s, r_t = n_s, n_t


@lru_cache(maxsize=4096)
def string_basis(pair: OperatorPair) -> StringBasis:
    S, T = pair.S, pair.T
    x, y = pair.x_dim, pair.y_dim
    bound = x + y + 2
    # A[k] = ker Phi^k on X, B[k] = ker Phi^k on Y
    px = _alternating_products(S, T)
    py = _alternating_products(T, S)
    A = [zero(x)]
    B = [zero(y)]
    for _ in range(bound):
        A.append(kernel(next(px)))
        B.append(kernel(next(py)))
        if A[-1] == A[-2] and B[-1] == B[-2]:
            break
    A.append(A[-1])
    B.append(B[-1])
    top = len(A) - 2

    def phi(side: str, v: tuple) -> tuple:
        return S.apply(v) if side == "X" else T.apply(v)

    chains = []
    for k in range(1, top + 1):
        for side, K, other_next, op in (("X", A, B, T), ("Y", B, A, S)):
            low = sum_of(K[k - 1], image(op, other_next[k + 1]))
            heads = complement_in(low, K[k])
            for h in heads.vectors():
                vecs = [h]
                cur_side = side
                for _ in range(k - 1):
                    nxt = phi(cur_side, vecs[-1])
                    cur_side = "Y" if cur_side == "X" else "X"
                    vecs.append(nxt)
                chains.append(Chain(side, tuple(vecs)))
    x_inv, y_inv = _range_limits(pair)
    basis = StringBasis(x, y, tuple(chains), x_inv, y_inv)
    x_count = sum(1 for ch in chains for j in range(ch.length) if ch.side_at(j) == "X")
    y_count = sum(ch.length for ch in chains) - x_count
    if x_count + x_inv.dim != x or y_count + y_inv.dim != y:
        raise InconsistencyError("string basis does not have the right size")
    return basis


# -- decomposition ---------------------------------------------------------


def _check(condition: bool, what: str):
    if not condition:
        raise InconsistencyError(what)


@lru_cache(maxsize=4096)
def decompose(pair: OperatorPair) -> PairDecomposition:
    """Split X and Y around the kernels and ranges of S and T.

    The free complements are taken from the string basis: x1 is spanned by
    string ends sitting at position 0, x2 by the non-end string vectors at
    positions >= 1 together with the invertible part, and x_tilde by the
    non-end heads.  Y mirrors this.
    """
    ns, rt, nt, rs = _kernels_ranges(pair)
    sb = string_basis(pair)
    ns_rt = intersect(ns, rt)
    nt_rs = intersect(nt, rs)
    x1 = sb.ends("X", lambda j: j == 0)
    y1 = sb.ends("Y", lambda j: j == 0)
    x2 = sum_of(sb.non_ends("X", lambda j: j >= 1), sb.x_inv)
    y2 = sum_of(sb.non_ends("Y", lambda j: j >= 1), sb.y_inv)
    x_tilde = sb.non_ends("X", lambda j: j == 0)
    y_tilde = sb.non_ends("Y", lambda j: j == 0)
    dec = PairDecomposition(ns_rt, x1, x2, x_tilde, nt_rs, y1, y2, y_tilde)
    _verify_decomposition(pair, dec, ns, rt, nt, rs)
    return dec


def _verify_decomposition(pair, dec, ns, rt, nt, rs):
    for side, n_, r_, c_, k1, k2, kt, op in (
        ("X", ns, rt, dec.ns_rt, dec.x1, dec.x2, dec.x_tilde, pair.S),
        ("Y", nt, rs, dec.nt_rs, dec.y1, dec.y2, dec.y_tilde, pair.T),
    ):
        _check(direct_sum_of(c_, k1) and sum_of(c_, k1) == n_, f"{side}: kernel split failed")
        _check(direct_sum_of(c_, k2) and sum_of(c_, k2) == r_, f"{side}: range split failed")
        nr = sum_of(n_, r_)
        _check(direct_sum_of(nr, kt) and sum_of(nr, kt).is_full(), f"{side}: tilde complement failed")
        restricted = sum_of(k2, kt)
        img = image(op, restricted)
        _check(img.dim == restricted.dim and img == span(op), f"{side}: restriction is not onto the range")
        _check(direct_sum_of(image(op, k2), image(op, kt)), f"{side}: image split is not direct")


# -- generalized inverses -------------------------------------------------


def is_generalized_inverse(op: Matrix, g: Matrix) -> bool:
    if g.shape != (op.cols, op.rows):
        return False
    return op @ g @ op == op


def ginv_with(op: Matrix, C: Subspace, D: Subspace) -> Matrix:
    """The generalized inverse that inverts ``op`` from ``C`` onto its range and kills ``D``.

    ``C`` must complement the kernel of ``op`` in its domain and ``D`` must
    complement the range in its codomain.  The result is normalized.
    """
    m, n = op.shape
    R = span(op)
    r = R.dim
    if C.ambient != n or D.ambient != m:
        raise DimensionError("complements live in the wrong spaces")
    if C.dim != r or D.dim != m - r:
        raise DimensionError("complements have the wrong dimensions")
    if r == 0:
        return zeros(n, m)
    image_c = op @ C.basis
    K = image_c.submatrix(R.pivot_rows, range(r))
    E = hstack(R.basis, D.basis).inverse().submatrix(range(r), range(m))
    g = C.basis @ K.inverse() @ E
    if not is_generalized_inverse(op, g):
        raise InconsistencyError("constructed matrix is not a generalized inverse")
    return g


def generalized_inverse(op: Matrix) -> Matrix:
    """A normalized generalized inverse built from greedy complements."""
    C = complement_in(kernel(op), full(op.cols))
    D = complement_in(span(op), full(op.rows))
    return ginv_with(op, C, D)


def normalize_ginv(op: Matrix, g: Matrix) -> Matrix:
    if not is_generalized_inverse(op, g):
        raise NotGeneralizedInverseError("op @ g @ op differs from op")
    return g @ op @ g


def invertible_generalized_inverse(op: Matrix) -> Matrix | None:
    """An invertible matrix G with op G op = op, or None for non-square op."""
    m, n = op.shape
    if m != n:
        return None
    R = span(op)
    N = kernel(op)
    C = complement_in(N, full(n))
    D = complement_in(R, full(m))
    g = ginv_with(op, C, D)
    if D.dim:
        F = hstack(R.basis, D.basis).inverse().submatrix(range(R.dim, m), range(m))
        g = g + N.basis @ F
    return g


def is_decomposably_regular(op: Matrix) -> bool:
    g = invertible_generalized_inverse(op)
    return g is not None and span(g).is_full() and is_generalized_inverse(op, g)


def adjoint_pair(pair: OperatorPair) -> tuple[OperatorPair, GinvWitness]:
    """Normalized generalized inverses S', T' whose pair has the opposite index.

    S' inverts S on R(S) back into X2 ⊕ X~ and vanishes on Y1 ⊕ Y~; T' is
    built the same way on the other side.
    """
    dec = decompose(pair)
    s_prime = ginv_with(pair.S, sum_of(dec.x2, dec.x_tilde), sum_of(dec.y1, dec.y_tilde))
    t_prime = ginv_with(pair.T, sum_of(dec.y2, dec.y_tilde), sum_of(dec.x1, dec.x_tilde))
    normalized = (
        s_prime @ pair.S @ s_prime == s_prime and t_prime @ pair.T @ t_prime == t_prime
    )
    return OperatorPair(s_prime, t_prime), GinvWitness(s_prime, t_prime, normalized)


def is_symmetrical(pair: OperatorPair) -> bool:
    return (pair.S @ pair.T).is_zero() and (pair.T @ pair.S).is_zero()
