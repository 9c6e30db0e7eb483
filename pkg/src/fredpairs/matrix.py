"""Dense matrices over the rationals with exact echelon reduction.

Scalars are kept as plain ``int`` when integral and as ``fractions.Fraction``
otherwise.  Both compare and hash consistently, so matrices built from either
representation are equal whenever their values are.  No operation ever rounds.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

from .errors import DimensionError

Scalar = Union[int, Fraction]

__all__ = [
    "Matrix",
    "Scalar",
    "as_scalar",
    "hstack",
    "vstack",
    "identity",
    "zeros",
    "block_diag",
    "rref",
    "kernel_basis",
]


def as_scalar(value) -> Scalar:
    """Coerce ``value`` to the canonical exact scalar.

    Accepts ints, Fractions and strings such as ``"3"`` or ``"-2/5"``.
    Floats are refused: they would smuggle rounding into exact computations.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        try:
            q = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
        if "." in value or "e" in value.lower():
            raise ValueError(f"decimal literals are not exact rationals: {value!r}")
        return q.numerator if q.denominator == 1 else q
    if isinstance(value, Rational):
        q = Fraction(value.numerator, value.denominator)
        return q.numerator if q.denominator == 1 else q
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


def _canon(value: Scalar) -> Scalar:
    if type(value) is Fraction and value.denominator == 1:
        return value.numerator
    return value


def _inverse_scalar(value: Scalar) -> Scalar:
    if type(value) is int:
        if value == 1 or value == -1:
            return value
        return Fraction(1, value)
    return _canon(1 / value)


class Matrix:
    """Immutable ``rows x cols`` matrix of exact rationals.

    Empty shapes (``0 x n``, ``n x 0``) are legal and behave as the zero maps
    between the corresponding spaces.
    """

    __slots__ = ("_rows", "_cols", "_data", "_hash", "_ints")

    def __init__(self, data: Iterable[Iterable] = (), shape: tuple[int, int] | None = None):
        rows = tuple(tuple(as_scalar(x) for x in row) for row in data)
        if shape is None:
            if not rows:
                shape = (0, 0)
            else:
                shape = (len(rows), len(rows[0]))
        r, c = shape
        if r < 0 or c < 0:
            raise DimensionError(f"negative shape {shape}")
        if len(rows) != r or any(len(row) != c for row in rows):
            raise DimensionError(f"entries do not form a {r}x{c} grid")
        self._rows = r
        self._cols = c
        self._data = rows
        self._hash = None
        self._ints = None

    @classmethod
    def _trusted(cls, r: int, c: int, data: tuple) -> "Matrix":
        m = object.__new__(cls)
        m._rows = r
        m._cols = c
        m._data = data
        m._hash = None
        m._ints = None
        return m

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], n_rows: int) -> "Matrix":
        cols = [tuple(as_scalar(x) for x in col) for col in columns]
        if any(len(col) != n_rows for col in cols):
            raise DimensionError("column length does not match n_rows")
        data = tuple(tuple(col[i] for col in cols) for i in range(n_rows))
        return cls._trusted(n_rows, len(cols), data)

    # -- basic accessors -------------------------------------------------

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> tuple[int, int]:
        return (self._rows, self._cols)

    @property
    def data(self) -> tuple:
        """Row-major tuple of tuples of canonical scalars."""
        return self._data

    def entry(self, i: int, j: int) -> Fraction:
        return Fraction(self._data[i][j])

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self._data)

    def columns(self) -> list[tuple]:
        if self._rows == 0:
            return [() for _ in range(self._cols)]
        return list(zip(*self._data))

    def tolist(self) -> list[list[Fraction]]:
        return [[Fraction(x) for x in row] for row in self._data]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._rows, self._cols, self._data))
        return self._hash

    def __repr__(self):
        if self._rows == 0 or self._cols == 0:
            return f"Matrix(shape={self.shape})"
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self._data)
        return f"Matrix([{body}])"

    def pretty(self) -> str:
        if self._rows == 0 or self._cols == 0:
            return f"<{self._rows}x{self._cols} empty>"
        cells = [[str(x) for x in row] for row in self._data]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)

    # -- arithmetic ------------------------------------------------------

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._data for x in row)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def transpose(self) -> "Matrix":
        data = tuple(zip(*self._data)) if self._rows else ((),) * 0
        if self._rows == 0:
            data = tuple(() for _ in range(self._cols))
        return Matrix._trusted(self._cols, self._rows, tuple(tuple(r) for r in data))

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        data = tuple(
            tuple(_canon(a + b) for a, b in zip(ra, rb)) for ra, rb in zip(self._data, other._data)
        )
        return Matrix._trusted(self._rows, self._cols, data)

    def __neg__(self) -> "Matrix":
        return Matrix._trusted(self._rows, self._cols, tuple(tuple(-a for a in r) for r in self._data))

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-other)

    def scale(self, factor) -> "Matrix":
        k = as_scalar(factor)
        data = tuple(tuple(_canon(k * a) for a in r) for r in self._data)
        return Matrix._trusted(self._rows, self._cols, data)

    def __mul__(self, factor):
        if isinstance(factor, Matrix):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self._cols != other._rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        c = other._cols
        other_rows = [[(j, b) for j, b in enumerate(r) if b] for r in other._data]
        exact_ints = self._all_int() and other._all_int()
        out = []
        for row in self._data:
            acc = [0] * c
            for k, a in enumerate(row):
                if a:
                    for j, b in other_rows[k]:
                        acc[j] += a * b
            if not exact_ints:
                acc = [_canon(v) for v in acc]
            out.append(tuple(acc))
        return Matrix._trusted(self._rows, c, tuple(out))

    def _all_int(self) -> bool:
        if self._ints is None:
            self._ints = all(type(x) is int for row in self._data for x in row)
        return self._ints

    def apply(self, vector: Sequence) -> tuple:
        """Multiply this matrix by a column vector given as a sequence."""
        if len(vector) != self._cols:
            raise DimensionError(f"vector of length {len(vector)} for {self.shape} matrix")
        nz = [(k, x) for k, x in enumerate(vector) if x]
        return tuple(_canon(sum((row[k] * x for k, x in nz), 0)) for row in self._data)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "Matrix":
        data = tuple(tuple(self._data[i][j] for j in col_idx) for i in row_idx)
        return Matrix._trusted(len(row_idx), len(col_idx), data)

    # -- reduction -------------------------------------------------------

    def rref(self) -> tuple["Matrix", list[int], int]:
        return rref(self)

    def rank(self) -> int:
        return len(_rref_rows([list(r) for r in self._data], self._cols)[1])

    def kernel_basis(self) -> "Matrix":
        return kernel_basis(self)

    def inverse(self) -> "Matrix":
        n = self._rows
        if n != self._cols:
            raise DimensionError(f"inverse of non-square {self.shape} matrix")
        aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(self._data)]
        reduced, pivots = _rref_rows(aug, 2 * n)
        if pivots[:n] != list(range(n)) or len(pivots) < n:
            raise ZeroDivisionError("matrix is singular")
        data = tuple(tuple(_canon(x) for x in row[n:]) for row in reduced[:n])
        return Matrix._trusted(n, n, data)

    # -- JSON ------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "rows": self._rows,
            "cols": self._cols,
            "entries": [[str(x) for x in row] for row in self._data],
        }

    @classmethod
    def from_json(cls, obj) -> "Matrix":
        try:
            r, c, entries = obj["rows"], obj["cols"], obj["entries"]
        except (KeyError, TypeError) as exc:
            raise DimensionError("matrix JSON needs 'rows', 'cols' and 'entries'") from exc
        if not isinstance(r, int) or not isinstance(c, int):
            raise DimensionError("'rows' and 'cols' must be integers")
        if any(isinstance(x, float) for row in entries for x in row):
            raise ValueError("matrix entries must be exact: use strings like '1/3'")
        return cls(entries, shape=(r, c))


def _rref_rows(rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    """Reduce ``rows`` in place to RREF; first-nonzero pivoting."""
    nrows = len(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and not rows[p][c]:
            p += 1
        if p == nrows:
            continue
        if p != r:
            rows[p], rows[r] = rows[r], rows[p]
        pr = rows[r]
        lead = pr[c]
        if lead != 1:
            inv = _inverse_scalar(lead)
            for j in range(c, ncols):
                if pr[j]:
                    pr[j] = _canon(pr[j] * inv)
        nz = [j for j in range(c, ncols) if pr[j]]
        for i in range(nrows):
            if i == r:
                continue
            ri = rows[i]
            f = ri[c]
            if f:
                for j in nz:
                    ri[j] = _canon(ri[j] - f * pr[j])
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(m: Matrix) -> tuple[Matrix, list[int], int]:
    """Return ``(reduced, pivot_columns, rank)`` for ``m``."""
    reduced, pivots = _rref_rows([list(r) for r in m.data], m.cols)
    data = tuple(tuple(row) for row in reduced)
    return Matrix._trusted(m.rows, m.cols, data), pivots, len(pivots)


def kernel_basis(m: Matrix) -> Matrix:
    """Columns spanning ``{x : m x = 0}``, one per free column of the RREF."""
    reduced, pivots = _rref_rows([list(r) for r in m.data], m.cols)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    columns = []
    for f in free:
        v = [0] * m.cols
        v[f] = 1
        for i, pc in enumerate(pivots):
            coeff = reduced[i][f]
            if coeff:
                v[pc] = -coeff
        columns.append(v)
    data = tuple(tuple(col[i] for col in columns) for i in range(m.cols))
    return Matrix._trusted(m.cols, len(columns), data)


def identity(n: int) -> Matrix:
    return Matrix._trusted(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))


def zeros(rows: int, cols: int) -> Matrix:
    if rows < 0 or cols < 0:
        raise DimensionError(f"negative shape {(rows, cols)}")
    return Matrix._trusted(rows, cols, tuple((0,) * cols for _ in range(rows)))


def hstack(*blocks: Matrix) -> Matrix:
    if not blocks:
        raise DimensionError("hstack needs at least one block")
    r = blocks[0].rows
    if any(b.rows != r for b in blocks):
        raise DimensionError("hstack blocks must share a row count")
    data = tuple(tuple(x for b in blocks for x in b.data[i]) for i in range(r))
    return Matrix._trusted(r, sum(b.cols for b in blocks), data)


def vstack(*blocks: Matrix) -> Matrix:
    if not blocks:
        raise DimensionError("vstack needs at least one block")
    c = blocks[0].cols
    if any(b.cols != c for b in blocks):
        raise DimensionError("vstack blocks must share a column count")
    data = tuple(row for b in blocks for row in b.data)
    return Matrix._trusted(len(data), c, data)


def block_diag(*blocks: Matrix) -> Matrix:
    r = sum(b.rows for b in blocks)
    c = sum(b.cols for b in blocks)
    out = [[0] * c for _ in range(r)]
    i0 = j0 = 0
    for b in blocks:
        for i, row in enumerate(b.data):
            out[i0 + i][j0 : j0 + b.cols] = row
        i0 += b.rows
        j0 += b.cols
    return Matrix._trusted(r, c, tuple(tuple(row) for row in out))
