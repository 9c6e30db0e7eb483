"""Finite chains and complexes, their defect index, the even/odd fold, and split homotopies.

Degrees run 0..n.  ``boundaries[i]`` is the map from degree i+1 to degree i;
the boundary out of degree 0 and the one into degree n are zero maps.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionError, NotAComplexError
from .matrix import Matrix, hstack, identity, zeros
from .pair import OperatorPair, ginv_with
from .subspace import complement_in, full, kernel, rel_codim, span, sum_of

__all__ = [
    "ChainComplex",
    "ChainReport",
    "SplittingHomotopy",
    "C1",
    "C2",
    "chain_report",
    "fold",
    "splitting_homotopy",
    "is_split_chain",
]


@dataclass(frozen=True)
class ChainComplex:
    dims: tuple
    boundaries: tuple
    is_complex: bool = True

    def __post_init__(self):
        dims = tuple(self.dims)
        bounds = tuple(self.boundaries)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "boundaries", bounds)
        if any(not isinstance(d, int) or d < 0 for d in dims):
            raise DimensionError("chain dimensions must be non-negative integers")
        if len(bounds) != max(len(dims) - 1, 0):
            raise DimensionError(f"{len(dims)} spaces need {max(len(dims) - 1, 0)} boundaries, got {len(bounds)}")
        for i, b in enumerate(bounds):
            if b.shape != (dims[i], dims[i + 1]):
                raise DimensionError(
                    f"boundary from degree {i + 1} must be {dims[i]}x{dims[i + 1]}, got {b.rows}x{b.cols}"
                )
        if self.is_complex:
            for i in range(1, len(bounds)):
                if not (bounds[i - 1] @ bounds[i]).is_zero():
                    raise NotAComplexError(f"boundaries into and out of degree {i} do not compose to zero")

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    def d(self, p: int) -> Matrix:
        """The boundary out of degree p, with zero maps at both ends."""
        n = self.top
        if p <= 0:
            return zeros(0, self.dims[0]) if self.dims else zeros(0, 0)
        if p > n:
            return zeros(self.dims[n], 0)
        return self.boundaries[p - 1]

    def to_json(self) -> dict:
        return {
            "dims": list(self.dims),
            "boundaries": [b.to_json() for b in self.boundaries],
            "complex": self.is_complex,
        }

    @classmethod
    def from_json(cls, obj) -> "ChainComplex":
        try:
            dims = obj["dims"]
            bounds = [Matrix.from_json(b) for b in obj["boundaries"]]
        except (KeyError, TypeError) as exc:
            raise DimensionError("chain JSON needs 'dims' and 'boundaries'") from exc
        return cls(tuple(dims), tuple(bounds), bool(obj.get("complex", True)))


C1 = ChainComplex((1, 2, 1), (Matrix([[0, 1]]), Matrix([[1], [0]])))
C2 = ChainComplex((1, 2), (Matrix([[1, 0]]),))


@dataclass(frozen=True)
class ChainReport:
    kernel_defects: tuple
    range_defects: tuple
    homology_dims: tuple | None
    index: int

    def to_json(self) -> dict:
        return {
            "kernel_defects": list(self.kernel_defects),
            "range_defects": list(self.range_defects),
            "homology_dims": None if self.homology_dims is None else list(self.homology_dims),
            "index": self.index,
        }


def chain_report(c: ChainComplex) -> ChainReport:
    kd, rd = [], []
    for p in range(len(c.dims)):
        N = kernel(c.d(p))
        R = span(c.d(p + 1))
        kd.append(rel_codim(N, R))
        rd.append(rel_codim(R, N))
    index = sum((-1) ** p * (kd[p] - rd[p]) for p in range(len(c.dims)))
    return ChainReport(tuple(kd), tuple(rd), tuple(kd) if c.is_complex else None, index)


def fold(c: ChainComplex) -> OperatorPair:
    """X = even degrees, Y = odd degrees; S from even boundaries, T from odd ones."""
    even = [p for p in range(len(c.dims)) if p % 2 == 0]
    odd = [p for p in range(len(c.dims)) if p % 2 == 1]
    xo, yo = {}, {}
    pos = 0
    for p in even:
        xo[p] = pos
        pos += c.dims[p]
    x = pos
    pos = 0
    for p in odd:
        yo[p] = pos
        pos += c.dims[p]
    y = pos
    S = [[0] * x for _ in range(y)]
    T = [[0] * y for _ in range(x)]
    for p in range(1, len(c.dims)):
        d = c.d(p)
        if p % 2 == 0:
            grid, r0, c0 = S, yo[p - 1], xo[p]
        else:
            grid, r0, c0 = T, xo[p - 1], yo[p]
        for i, row in enumerate(d.data):
            for j, v in enumerate(row):
                grid[r0 + i][c0 + j] = v
    return OperatorPair(Matrix(S, shape=(y, x)), Matrix(T, shape=(x, y)))


@dataclass(frozen=True)
class SplittingHomotopy:
    """``h[p]`` maps degree p to p+1 and ``k[p]`` projects degree p onto homology."""

    h: tuple
    k: tuple


def splitting_homotopy(c: ChainComplex) -> SplittingHomotopy:
    """Maps h, k with d h + h d = I - k, k the projection onto chosen homology.

    Each degree is split as boundaries ⊕ homology representatives ⊕ a
    complement of the cycles, all by greedy complements.
    """
    if not c.is_complex:
        raise NotAComplexError("a splitting homotopy needs a complex")
    n = len(c.dims)
    B, H, C = [], [], []
    for p in range(n):
        Zp = kernel(c.d(p))
        Bp = span(c.d(p + 1))
        Hp = complement_in(Bp, Zp)
        B.append(Bp)
        H.append(Hp)
        C.append(complement_in(Zp, full(c.dims[p])))
    h = []
    for p in range(n):
        if p + 1 < n:
            h.append(ginv_with(c.d(p + 1), C[p + 1], sum_of(H[p], C[p])))
        else:
            h.append(zeros(0, c.dims[p]))
    k = []
    for p in range(n):
        if H[p].dim == 0:
            k.append(zeros(c.dims[p], c.dims[p]))
            continue
        P_inv = hstack(B[p].basis, H[p].basis, C[p].basis).inverse()
        rows = P_inv.submatrix(range(B[p].dim, B[p].dim + H[p].dim), range(c.dims[p]))
        k.append(H[p].basis @ rows)
    return SplittingHomotopy(tuple(h), tuple(k))


def homotopy_defect(c: ChainComplex, sh: SplittingHomotopy, p: int) -> Matrix:
    """``d_{p+1} h_p + h_{p-1} d_p - (I - k_p)``; zero for a valid homotopy."""
    n = c.dims[p]
    lhs = c.d(p + 1) @ sh.h[p] if p + 1 < len(c.dims) else zeros(n, n)
    if p > 0:
        lhs = lhs + sh.h[p - 1] @ c.d(p)
    return lhs - (identity(n) - sh.k[p])


def is_split_chain(c: ChainComplex) -> tuple[bool, str]:
    return True, "every subspace of a finite-dimensional space has a complement"
