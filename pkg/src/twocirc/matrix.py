"""A small immutable row-major matrix over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .core import format_rational, rational


class DenseMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(rational(x) for x in entries)
        if rows <= 0 or cols <= 0:
            raise ValueError(f"matrix dimensions must be positive, got {rows}x{cols}")
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> DenseMatrix:
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), width, (x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> DenseMatrix:
        cols = rows if cols is None else cols
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> DenseMatrix:
        return cls(n, n, (int(i == j) for i in range(n) for j in range(n)))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return self.entries[j::self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def T(self) -> DenseMatrix:
        return DenseMatrix(self.cols, self.rows,
                           (self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def _check_same_shape(self, other: DenseMatrix):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __add__(self, other: DenseMatrix) -> DenseMatrix:
        self._check_same_shape(other)
        return DenseMatrix(self.rows, self.cols, (x + y for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other: DenseMatrix) -> DenseMatrix:
        self._check_same_shape(other)
        return DenseMatrix(self.rows, self.cols, (x - y for x, y in zip(self.entries, other.entries)))

    def __neg__(self) -> DenseMatrix:
        return DenseMatrix(self.rows, self.cols, (-x for x in self.entries))

    def scale(self, c) -> DenseMatrix:
        c = rational(c)
        return DenseMatrix(self.rows, self.cols, (c * x for x in self.entries))

    def __rmul__(self, c) -> DenseMatrix:
        return self.scale(c)

    def __matmul__(self, other: DenseMatrix) -> DenseMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = [other.column(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for c in cols:
                out.append(sum((x * y for x, y in zip(r, c) if x and y), Fraction(0)))
        return DenseMatrix(self.rows, other.cols, out)

    def __pow__(self, k: int) -> DenseMatrix:
        if not self.is_square or k < 0:
            raise ValueError("matrix power needs a square matrix and k >= 0")
        result = DenseMatrix.identity(self.rows)
        for _ in range(k):
            result = result @ self
        return result

    def apply(self, v: Sequence) -> list[Fraction]:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} does not fit {self.rows}x{self.cols}")
        v = [rational(x) for x in v]
        return [sum((x * y for x, y in zip(self.row(i), v)), Fraction(0)) for i in range(self.rows)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> DenseMatrix:
        return DenseMatrix(len(rows), len(cols), (self[i, j] for i in rows for j in cols))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __repr__(self):
        return f"DenseMatrix({self.rows}, {self.cols}, {self.to_text()!r})"

    def to_text(self) -> str:
        cells = [[format_rational(x) for x in self.row(i)] for i in range(self.rows)]
        width = max(len(c) for r in cells for c in r)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)


def kron(A: DenseMatrix, B: DenseMatrix) -> DenseMatrix:
    rows, cols = A.rows * B.rows, A.cols * B.cols
    return DenseMatrix(rows, cols, (
        A[i // B.rows, j // B.cols] * B[i % B.rows, j % B.cols]
        for i in range(rows) for j in range(cols)
    ))


def block_identity(g: int, block: DenseMatrix) -> DenseMatrix:
    """``I_g ⊗ block`` built by index arithmetic."""
    m = block.rows
    if not block.is_square:
        raise ValueError("block must be square")
    n = g * m

    def entry(i, j):
        if i // m != j // m:
            return 0
        return block[i % m, j % m]

    return DenseMatrix(n, n, (entry(i, j) for i in range(n) for j in range(n)))
