"""Subspaces of Q^n in a canonical form, and the lattice operations on them.

A subspace is stored by the unique basis in reduced column echelon form: each
basis column has a 1 in its pivot row and every other column is 0 there, and
pivot rows increase from left to right.  Two subspaces are equal exactly when
their basis matrices are equal, which keeps stabilization tests honest.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import ContainmentError, DimensionError, InfeasibleComplementError
from .matrix import Matrix, _canon, _inverse_scalar, _rref_rows, hstack, identity, kernel_basis, zeros

__all__ = [
    "Subspace",
    "span",
    "kernel",
    "span_vectors",
    "full",
    "zero",
    "sum_of",
    "intersect",
    "is_subset",
    "contains",
    "rel_codim",
    "complement_in",
    "constrained_complement",
    "image",
    "preimage",
    "annihilator_rows",
    "quotient_map",
    "direct_sum_of",
]


class Subspace:
    """A linear subspace of Q^ambient held in canonical form."""

    __slots__ = ("_ambient", "_basis", "_pivots", "_hash")

    def __init__(self, ambient: int, basis: Matrix, pivots: Sequence[int]):
        # Callers outside this module should use span() or kernel().
        self._ambient = ambient
        self._basis = basis
        self._pivots = tuple(pivots)
        self._hash = None

    @property
    def ambient(self) -> int:
        return self._ambient

    @property
    def basis(self) -> Matrix:
        return self._basis

    @property
    def pivot_rows(self) -> tuple:
        return self._pivots

    @property
    def dim(self) -> int:
        return self._basis.cols

    def __len__(self):
        return self.dim

    def vectors(self) -> list[tuple]:
        return self._basis.columns()

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self._ambient

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self._ambient == other._ambient and self._basis == other._basis

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._ambient, self._basis))
        return self._hash

    def __repr__(self):
        vecs = ", ".join("(" + ",".join(str(x) for x in v) + ")" for v in self.vectors())
        return f"Subspace(ambient={self._ambient}, dim={self.dim}, basis=[{vecs}])"

    def __le__(self, other: "Subspace") -> bool:
        return is_subset(self, other)

    def __add__(self, other: "Subspace") -> "Subspace":
        return sum_of(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def coordinates(self, v: Sequence) -> tuple:
        """Coordinates of ``v`` in the canonical basis; ``v`` must lie in the subspace."""
        coords = tuple(v[r] for r in self._pivots)
        if tuple(_canon(x) for x in v) != self._basis.apply(coords):
            raise ContainmentError("vector is not in the subspace")
        return coords

    def contains(self, v: Sequence) -> bool:
        return contains(self, v)

    def to_json(self) -> dict:
        return {"ambient": self._ambient, "basis": self._basis.to_json()}

    @classmethod
    def from_json(cls, obj) -> "Subspace":
        try:
            n = obj["ambient"]
            b = Matrix.from_json(obj["basis"])
        except (KeyError, TypeError) as exc:
            raise DimensionError("subspace JSON needs 'ambient' and 'basis'") from exc
        if b.rows != n:
            raise DimensionError("basis rows do not match ambient dimension")
        return span(b)


def _from_rows(ambient: int, rows: list[list], pivots: list[int]) -> Subspace:
    # rows: reduced row echelon rows spanning the space, one per pivot
    k = len(pivots)
    if k:
        data = tuple(zip(*rows[:k]))
    else:
        data = ((),) * ambient
    return Subspace(ambient, Matrix._trusted(ambient, k, data), pivots)


def span_vectors(ambient: int, vectors: Iterable[Sequence]) -> Subspace:
    rows = [[_canon(x) for x in v] for v in vectors]
    if any(len(r) != ambient for r in rows):
        raise DimensionError("vector length does not match ambient dimension")
    reduced, pivots = _rref_rows(rows, ambient)
    return _from_rows(ambient, reduced, pivots)


def span(m: Matrix) -> Subspace:
    """Column space of ``m``."""
    return span_vectors(m.rows, m.columns())


def kernel(m: Matrix) -> Subspace:
    return span(kernel_basis(m))


def full(n: int) -> Subspace:
    return Subspace(n, identity(n), range(n))


def zero(n: int) -> Subspace:
    return Subspace(n, zeros(n, 0), ())


def _check_same(U: Subspace, V: Subspace):
    if U.ambient != V.ambient:
        raise DimensionError(f"ambient mismatch: {U.ambient} vs {V.ambient}")


def sum_of(*spaces: Subspace) -> Subspace:
    if not spaces:
        raise DimensionError("sum of no subspaces has no ambient dimension")
    n = spaces[0].ambient
    for s in spaces[1:]:
        _check_same(spaces[0], s)
    nonzero = [s for s in spaces if s.dim]
    if len(nonzero) <= 1:
        return nonzero[0] if nonzero else zero(n)
    if any(s.is_full() for s in nonzero):
        return full(n)
    return span_vectors(n, [v for s in nonzero for v in s.vectors()])


def intersect(U: Subspace, V: Subspace) -> Subspace:
    _check_same(U, V)
    if U.is_zero() or V.is_full():
        return U
    if V.is_zero() or U.is_full():
        return V
    if U == V:
        return U
    stacked = hstack(U.basis, -V.basis)
    ker = kernel_basis(stacked)
    if ker.cols == 0:
        return zero(U.ambient)
    coeffs = ker.submatrix(range(U.dim), range(ker.cols))
    return span(U.basis @ coeffs)


def contains(U: Subspace, v: Sequence) -> bool:
    if len(v) != U.ambient:
        raise DimensionError("vector length does not match ambient dimension")
    coords = [v[r] for r in U.pivot_rows]
    return tuple(_canon(x) for x in v) == U.basis.apply(coords)


def is_subset(U: Subspace, V: Subspace) -> bool:
    _check_same(U, V)
    if U.dim > V.dim:
        return False
    if V.is_full() or U.is_zero():
        return True
    return all(contains(V, u) for u in U.vectors())


def rel_codim(A: Subspace, B: Subspace) -> int:
    """``dim A / (A ∩ B)``."""
    return A.dim - intersect(A, B).dim


class _Echelon:
    """Incremental independence test for a growing list of vectors."""

    def __init__(self, n: int):
        self.n = n
        self.rows: dict[int, list] = {}

    def reduce(self, v: Sequence) -> list:
        w = [_canon(x) for x in v]
        for p, row in self.rows.items():
            f = w[p]
            if f:
                for j in range(self.n):
                    if row[j]:
                        w[j] = _canon(w[j] - f * row[j])
        return w

    def add(self, v: Sequence) -> bool:
        """Add ``v`` if independent of what is stored; report whether it was."""
        w = self.reduce(v)
        p = next((j for j, x in enumerate(w) if x), None)
        if p is None:
            return False
        inv = _inverse_scalar(w[p])
        w = [_canon(x * inv) for x in w]
        for row in self.rows.values():
            f = row[p]
            if f:
                for j in range(self.n):
                    if w[j]:
                        row[j] = _canon(row[j] - f * w[j])
        self.rows[p] = w
        return True


def _greedy_extend(inner: Subspace, candidates: Iterable[Sequence]) -> list:
    ech = _Echelon(inner.ambient)
    for v in inner.vectors():
        ech.add(v)
    return [c for c in candidates if ech.add(c)]


def complement_in(inner: Subspace, outer: Subspace) -> Subspace:
    """A complement of ``inner`` inside ``outer``.

    Outer's canonical basis columns are tried left to right and kept when they
    are independent of inner plus what was kept so far.
    """
    _check_same(inner, outer)
    if not is_subset(inner, outer):
        raise ContainmentError("inner subspace is not contained in outer")
    if inner.dim == outer.dim:
        return zero(outer.ambient)
    if inner.is_zero():
        return outer
    return span_vectors(outer.ambient, _greedy_extend(inner, outer.vectors()))


def constrained_complement(inner: Subspace, outer: Subspace, pool: Subspace) -> Subspace:
    """A complement of ``inner`` in ``outer`` that lies inside ``pool``.

    Raises InfeasibleComplementError when ``inner + (outer ∩ pool) != outer``.
    """
    _check_same(inner, outer)
    _check_same(inner, pool)
    if not is_subset(inner, outer):
        raise ContainmentError("inner subspace is not contained in outer")
    avail = intersect(outer, pool)
    chosen = _greedy_extend(inner, avail.vectors())
    if inner.dim + len(chosen) != outer.dim:
        raise InfeasibleComplementError(
            f"no complement inside pool: inner dim {inner.dim}, outer dim {outer.dim}, "
            f"outer∩pool gives only {len(chosen)} new directions"
        )
    return span_vectors(outer.ambient, chosen)


def image(op: Matrix, U: Subspace) -> Subspace:
    if op.cols != U.ambient:
        raise DimensionError(f"operator with {op.cols} columns applied to subspace of Q^{U.ambient}")
    if U.is_zero():
        return zero(op.rows)
    if U.is_full():
        return span(op)
    return span(op @ U.basis)


def annihilator_rows(W: Subspace) -> Matrix:
    """A matrix whose kernel is exactly ``W``."""
    return kernel_basis(W.basis.T).T if W.dim else identity(W.ambient)


def preimage(op: Matrix, W: Subspace) -> Subspace:
    if op.rows != W.ambient:
        raise DimensionError(f"operator with {op.rows} rows pulled back along subspace of Q^{W.ambient}")
    if W.is_full():
        return full(op.cols)
    return kernel(annihilator_rows(W) @ op)


def quotient_map(W: Subspace) -> tuple[Matrix, Matrix]:
    """Return ``(Q, section)`` for the quotient by ``W``.

    ``Q`` has kernel ``W`` and reads coordinates along the greedy complement of
    ``W``; ``section`` embeds that complement, so ``Q @ section`` is the identity.
    """
    n = W.ambient
    C = complement_in(W, full(n))
    P = hstack(W.basis, C.basis).inverse()
    Q = P.submatrix(range(W.dim, n), range(n))
    return Q, C.basis


def direct_sum_of(*spaces: Subspace) -> bool:
    """True when the dimensions of the summands add up to that of their sum."""
    if not spaces:
        return True
    return sum(s.dim for s in spaces) == sum_of(*spaces).dim
