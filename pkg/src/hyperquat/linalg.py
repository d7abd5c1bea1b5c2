"""Dense exact matrices.

Entries are :class:`~fractions.Fraction` or
:class:`~hyperquat.quaternions.Quaternion`. Products keep the order of
factors, so quaternion-entried products are correct for a non-commutative
ring; a rational times a quaternion promotes the rational to a scalar
quaternion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from hyperquat.quaternions import E1, E2, E3, ONE, Quaternion


class DimensionError(ValueError):
    pass


def _entry(v):
    if isinstance(v, Quaternion):
        return v
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    raise TypeError(f"unsupported matrix entry {v!r}")


class Matrix:
    """Immutable rows x cols matrix over Q or H."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable]):
        rows = tuple(tuple(_entry(v) for v in row) for row in data)
        if not rows or not rows[0]:
            raise DimensionError("empty matrix")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("ragged rows")
        self.rows = len(rows)
        self.cols = width
        self._data = rows

    # construction helpers

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> Matrix:
        return cls([[0] * (rows if cols is None else cols) for _ in range(rows)])

    @classmethod
    def column(cls, values: Iterable) -> Matrix:
        return cls([[v] for v in values])

    @classmethod
    def block(cls, blocks: Sequence[Sequence[Matrix]]) -> Matrix:
        out = []
        for block_row in blocks:
            height = block_row[0].rows
            if any(b.rows != height for b in block_row):
                raise DimensionError("block row heights differ")
            for i in range(height):
                out.append([v for b in block_row for v in b._data[i]])
        return cls(out)

    @classmethod
    def vstack(cls, *parts: Matrix) -> Matrix:
        return cls.block([[p] for p in parts])

    @classmethod
    def block_diag(cls, *parts: Matrix) -> Matrix:
        n = sum(p.cols for p in parts)
        out = []
        offset = 0
        for p in parts:
            for row in p._data:
                out.append([0] * offset + list(row) + [0] * (n - offset - p.cols))
            offset += p.cols
        return cls(out)

    # access

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, idx):
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list[list]:
        return [list(r) for r in self._data]

    def entries(self) -> tuple:
        return tuple(v for r in self._data for v in r)

    def submatrix(self, rows: slice, cols: slice) -> Matrix:
        return Matrix([r[cols] for r in self._data[rows]])

    @property
    def is_rational(self) -> bool:
        return all(isinstance(v, Fraction) for v in self.entries())

    # arithmetic

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __add__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)])

    def __sub__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)])

    def __neg__(self) -> Matrix:
        return Matrix([[-v for v in r] for r in self._data])

    def __mul__(self, scalar) -> Matrix:
        if isinstance(scalar, Matrix):
            return NotImplemented
        return Matrix([[v * scalar for v in r] for r in self._data])

    def __rmul__(self, scalar) -> Matrix:
        return Matrix([[scalar * v for v in r] for r in self._data])

    def __matmul__(self, other: Matrix) -> Matrix:
        return mat_mul(self, other)

    @property
    def T(self) -> Matrix:
        return Matrix(zip(*self._data))

    def _same_shape(self, other: Matrix):
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    # exact linear algebra (rational entries)

    def det(self) -> Fraction:
        return mat_det(self)

    def rank(self) -> int:
        return mat_rank(self)

    # serialization

    def to_json(self) -> dict:
        from hyperquat.literals import format_quat
        from hyperquat.scalars import format_rational

        def fmt(v):
            return format_quat(v) if isinstance(v, Quaternion) else format_rational(v)

        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[fmt(v) for v in r] for r in self._data],
        }

    @classmethod
    def from_json(cls, obj: dict) -> Matrix:
        from hyperquat.literals import parse_quat
        from hyperquat.scalars import parse_rational

        cells = obj["entries"]
        try:
            m = cls([[parse_rational(s) for s in r] for r in cells])
        except ValueError:
            # any non-rational cell makes the whole matrix quaternion-valued
            m = cls([[parse_quat(s) for s in r] for r in cells])
        if m.shape != (obj["rows"], obj["cols"]):
            raise DimensionError("declared shape does not match entries")
        return m

    def __repr__(self) -> str:
        return f"Matrix({self.to_json()['entries']!r})"

    def __str__(self) -> str:
        cells = self.to_json()["entries"]
        width = max(len(c) for r in cells for c in r)
        return "\n".join("[" + " ".join(c.rjust(width) for c in r) + "]" for r in cells)


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    if A.cols != B.rows:
        raise DimensionError(f"cannot multiply {A.shape} by {B.shape}")
    bcols = [B.col(j) for j in range(B.cols)]
    out = []
    for r in A._data:
        row = []
        for c in bcols:
            acc = r[0] * c[0]
            for a, b in zip(r[1:], c[1:]):
                acc = acc + a * b
            row.append(acc)
        out.append(row)
    return Matrix(out)


def _require_rational(A: Matrix):
    if not A.is_rational:
        raise TypeError("operation requires rational entries")


def mat_det(A: Matrix) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination.

    Each row is scaled to integers by the lcm of its denominators; the
    integer determinant is divided by the product of those scales.
    """
    _require_rational(A)
    if A.rows != A.cols:
        raise DimensionError(f"determinant of non-square {A.shape} matrix")
    n = A.rows
    scale = 1
    m = []
    for r in A._data:
        l = math.lcm(*(v.denominator for v in r))
        scale *= l
        m.append([v.numerator * (l // v.denominator) for v in r])

    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return Fraction(sign * m[n - 1][n - 1], scale)


def _rref(A: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns.

    Pivot: leftmost unresolved column, topmost nonzero entry at or below
    the current row.
    """
    _require_rational(A)
    m = [list(r) for r in A._data]
    pivots = []
    r = 0
    for c in range(A.cols):
        if r == A.rows:
            break
        p = next((i for i in range(r, A.rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(A.rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def mat_rank(A: Matrix) -> int:
    return len(_rref(A)[1])


@dataclass(frozen=True)
class SolveResult:
    kind: str  # "unique" | "affine" | "inconsistent"
    rank: int
    solution: Matrix | None = None
    nullspace: tuple[Matrix, ...] = field(default_factory=tuple)


def mat_solve(A: Matrix, b: Matrix) -> SolveResult:
    """Solve ``A x = b`` exactly; classify as unique, affine or inconsistent."""
    if b.cols != 1 or b.rows != A.rows:
        raise DimensionError(f"right-hand side {b.shape} does not fit {A.shape}")
    _require_rational(b)
    n = A.cols
    aug = Matrix([list(r) + [v] for r, v in zip(A._data, b.col(0))])
    m, pivots = _rref(aug)
    if n in pivots:
        return SolveResult("inconsistent", rank=len(pivots) - 1)
    rank = len(pivots)
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = m[i][n]
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -m[i][f]
        basis.append(Matrix.column(v))
    kind = "unique" if not basis else "affine"
    return SolveResult(kind, rank=rank, solution=Matrix.column(x), nullspace=tuple(basis))


@dataclass(frozen=True)
class ConstantMatrices:
    theta: Matrix
    alpha: Matrix
    P: Matrix
    A1: Matrix
    A2: Matrix
    M1: Matrix
    M2: Matrix
    M: Matrix
    M8: Matrix


@lru_cache(maxsize=None)
def constants() -> ConstantMatrices:
    theta = Matrix([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
    alpha = Matrix([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]])
    A1 = Matrix([[0, -1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
    A2 = Matrix([[0, -1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
    M = Matrix.column([ONE, -E1, -E2, -E3])
    # built from theta*M, not copied from a printed vector
    M8 = Matrix.vstack(theta @ M, -M)
    return ConstantMatrices(
        theta=theta,
        alpha=alpha,
        P=Matrix.block_diag(Matrix.identity(4), alpha),
        A1=A1,
        A2=A2,
        M1=Matrix.block_diag(-A1, A1),
        M2=Matrix.block_diag(-A2, A2),
        M=M,
        M8=M8,
    )
