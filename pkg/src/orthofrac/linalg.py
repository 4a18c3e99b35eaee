"""Exact dense linear algebra over the rationals.

Every entry is a `fractions.Fraction`; no operation here ever rounds.
Matrices are small (at most the run count of the ambient factorial, 48 for
the flagship instance), so plain rational Gaussian elimination is used
throughout.  Pivots are chosen as the first nonzero entry in a column,
which is deterministic and, with exact arithmetic, does not affect the
result.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class SingularMatrixError(ValueError):
    """Raised when an inverse or solve is requested for a singular matrix."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class Matrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable]):
        rows = tuple(tuple(_frac(x) for x in row) for row in data)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
        else:
            width = 0
        self._data = rows
        self.rows = len(rows)
        self.cols = width

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        one, zero = Fraction(1), Fraction(0)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        zero = Fraction(0)
        return cls([[zero] * cols for _ in range(rows)])

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._data)

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self._data[i][j]

    def __iter__(self):
        return iter(self._data)

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self._data)
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self._data)) if self.rows else Matrix([])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.cols} vs {other.rows}")
        cols = other.transpose()._data
        return Matrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self._data]
        )

    def mul_vec(self, v: Sequence) -> tuple[Fraction, ...]:
        if len(v) != self.cols:
            raise ValueError(f"shape mismatch: {self.cols} vs {len(v)}")
        vv = [_frac(x) for x in v]
        return tuple(sum(a * b for a, b in zip(row, vv)) for row in self._data)

    def scale(self, c) -> "Matrix":
        c = _frac(c)
        return Matrix([[c * x for x in row] for row in self._data])

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return Matrix([ra + rb for ra, rb in zip(self._data, other._data)])

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return Matrix(self._data + other._data)

    def rref(self) -> tuple["Matrix", int, tuple[int, ...]]:
        """Reduced row echelon form.

        Returns (rref matrix, rank, pivot column indices).
        """
        m = [list(row) for row in self._data]
        n_rows, n_cols = self.rows, self.cols
        pivots: list[int] = []
        piv_r = 0
        for col in range(n_cols):
            if piv_r >= n_rows:
                break
            sel = next((r for r in range(piv_r, n_rows) if m[r][col] != 0), None)
            if sel is None:
                continue
            if sel != piv_r:
                m[piv_r], m[sel] = m[sel], m[piv_r]
            inv = 1 / m[piv_r][col]
            m[piv_r] = [x * inv for x in m[piv_r]]
            for r in range(n_rows):
                if r != piv_r and m[r][col] != 0:
                    f = m[r][col]
                    m[r] = [x - f * y for x, y in zip(m[r], m[piv_r])]
            pivots.append(col)
            piv_r += 1
        return Matrix(m), len(pivots), tuple(pivots)

    def rank(self) -> int:
        return self.rref()[1]

    def inverse(self) -> "Matrix":
        """Exact inverse via Gauss-Jordan on the augmented identity."""
        if self.rows != self.cols:
            raise SingularMatrixError("matrix is not square")
        n = self.rows
        aug = self.hstack(Matrix.identity(n))
        reduced, rank, _ = aug.rref()
        if rank < n or any(reduced[i, i] != 1 for i in range(n)):
            raise SingularMatrixError("matrix is singular")
        return Matrix([reduced.row(i)[n:] for i in range(n)])

    def solve(self, rhs: Sequence) -> tuple[Fraction, ...]:
        """Solve self @ x = rhs exactly for square non-singular self."""
        if self.rows != self.cols:
            raise SingularMatrixError("matrix is not square")
        if len(rhs) != self.rows:
            raise ValueError("rhs length mismatch")
        aug = self.hstack(Matrix([[x] for x in rhs]))
        reduced, rank, pivots = aug.rref()
        if rank < self.rows or self.rows in pivots:
            raise SingularMatrixError("matrix is singular")
        return reduced.column(self.cols)
