"""Small exact rational matrices.

A minimal immutable matrix type over fractions.Fraction, sized for the
handful-of-rows problems this package deals in. Supports multiplication,
Gauss-Jordan inversion, determinants, and the structural predicates the
verification code needs. Entries are always Fraction; construction
rejects floats so no approximate value can sneak in.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ShapeError, SingularMatrixError


def _coerce_entry(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"matrix entries must be int or Fraction, got {x!r}")
    return Fraction(x)


class RationalMatrix:
    """Immutable m x n matrix with Fraction entries."""

    __slots__ = ("_rows", "_m", "_n")

    def __init__(self, rows: Iterable[Sequence]):
        data = tuple(tuple(_coerce_entry(x) for x in row) for row in rows)
        if not data:
            raise ShapeError("matrix needs at least one row")
        width = len(data[0])
        if width == 0:
            raise ShapeError("matrix needs at least one column")
        for row in data:
            if len(row) != width:
                raise ShapeError("rows have unequal lengths")
        self._rows = data
        self._m = len(data)
        self._n = width

    @classmethod
    def from_rows(cls, rows) -> "RationalMatrix":
        return cls(rows)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        one = Fraction(1)
        zero = Fraction(0)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return self._m, self._n

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self._rows)
        return f"RationalMatrix[{body}]"

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        if self._n != other._m:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other._rows
        out = []
        for row in self._rows:
            new_row = [Fraction(0)] * other._n
            for k, x in enumerate(row):
                if not x:
                    continue
                rk = cols[k]
                for j in range(other._n):
                    if rk[j]:
                        new_row[j] += x * rk[j]
            out.append(new_row)
        return RationalMatrix(out)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(zip(*self._rows))

    def is_square(self) -> bool:
        return self._m == self._n

    def is_symmetric(self) -> bool:
        if not self.is_square():
            return False
        r = self._rows
        return all(r[i][j] == r[j][i] for i in range(self._m) for j in range(i))

    def is_identity(self) -> bool:
        if not self.is_square():
            return False
        r = self._rows
        return all(r[i][j] == (1 if i == j else 0)
                   for i in range(self._m) for j in range(self._n))

    def inverse(self) -> "RationalMatrix":
        """Exact inverse by Gauss-Jordan elimination.

        Raises:
            ShapeError: if the matrix is not square.
            SingularMatrixError: if no inverse exists.
        """
        if not self.is_square():
            raise ShapeError(f"cannot invert a {self.shape} matrix")
        n = self._m
        # Augment with the identity and reduce in place.
        aug = [list(self._rows[i]) + [Fraction(int(i == j)) for j in range(n)]
               for i in range(n)]
        for col in range(n):
            pivot_row = next((r for r in range(col, n) if aug[r][col]), None)
            if pivot_row is None:
                raise SingularMatrixError("matrix is singular")
            if pivot_row != col:
                aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
            pv = aug[col][col]
            if pv != 1:
                aug[col] = [x / pv for x in aug[col]]
            for r in range(n):
                if r == col:
                    continue
                factor = aug[r][col]
                if factor:
                    row_c = aug[col]
                    aug[r] = [x - factor * y for x, y in zip(aug[r], row_c)]
        return RationalMatrix([row[n:] for row in aug])

    def det(self) -> Fraction:
        """Exact determinant by Gaussian elimination."""
        if not self.is_square():
            raise ShapeError(f"determinant needs a square matrix, got {self.shape}")
        n = self._m
        work = [list(row) for row in self._rows]
        sign = 1
        result = Fraction(1)
        for col in range(n):
            pivot_row = next((r for r in range(col, n) if work[r][col]), None)
            if pivot_row is None:
                return Fraction(0)
            if pivot_row != col:
                work[col], work[pivot_row] = work[pivot_row], work[col]
                sign = -sign
            pv = work[col][col]
            result *= pv
            for r in range(col + 1, n):
                factor = work[r][col]
                if factor:
                    ratio = factor / pv
                    work[r] = [x - ratio * y for x, y in zip(work[r], work[col])]
        return sign * result


def mat_mul(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Exact product; function form of the @ operator."""
    return a @ b


def mat_inverse(a: RationalMatrix) -> RationalMatrix:
    """Exact inverse; function form of RationalMatrix.inverse()."""
    return a.inverse()
