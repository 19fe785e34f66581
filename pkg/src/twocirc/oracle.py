"""Dense exact reference computations.

Nothing in here knows about circulants; these are the ground truth the
closed forms are checked against.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import DomainError, SingularMatrixError, rational
from .matrix import DenseMatrix

PERMANENT_MAX_ORDER = 20
COFACTOR_MAX_ORDER = 6


class IndexTooLargeError(DomainError):
    """Raised when a group inverse is requested for a matrix of index > 1."""


def _require_square(A: DenseMatrix):
    if not A.is_square:
        raise ValueError(f"expected a square matrix, got {A.rows}x{A.cols}")


def _integer_rows(A: DenseMatrix) -> tuple[list[list[int]], int]:
    """Scale every row to integers; return the rows and the product of the scales."""
    rows, scale = [], 1
    for i in range(A.rows):
        row = A.row(i)
        d = math.lcm(*(x.denominator for x in row))
        rows.append([int(x * d) for x in row])
        scale *= d
    return rows, scale


def det_oracle(A: DenseMatrix) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination on row-scaled integers."""
    _require_square(A)
    M, scale = _integer_rows(A)
    n = len(M)
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if M[r][k] != 0), None)
            if swap is None:
                return Fraction(0)
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * pivot - M[i][k] * M[k][j]) // prev
        prev = pivot
    return Fraction(sign * M[n - 1][n - 1], scale)


def det_cofactor(A: DenseMatrix) -> Fraction:
    """Laplace expansion along the first row; only for small orders."""
    _require_square(A)
    if A.rows > COFACTOR_MAX_ORDER:
        raise DomainError(f"cofactor expansion limited to order {COFACTOR_MAX_ORDER}")

    def expand(rows: list[tuple[Fraction, ...]]) -> Fraction:
        if len(rows) == 1:
            return rows[0][0]
        total = Fraction(0)
        for j, x in enumerate(rows[0]):
            if x:
                minor = [r[:j] + r[j + 1:] for r in rows[1:]]
                total += (-1) ** j * x * expand(minor)
        return total

    return expand([A.row(i) for i in range(A.rows)])


def perm_oracle(A: DenseMatrix) -> Fraction:
    """Permanent by Ryser's inclusion-exclusion formula, walking subsets in Gray-code order."""
    _require_square(A)
    n = A.rows
    if n > PERMANENT_MAX_ORDER:
        raise DomainError("permanent too large")
    M, scale = _integer_rows(A)
    row_sums = [0] * n
    in_set = [False] * n
    size = 0
    total = 0
    for k in range(1, 1 << n):
        j = (k & -k).bit_length() - 1  # bit flipped between Gray codes k-1 and k
        sign = -1 if in_set[j] else 1
        in_set[j] = not in_set[j]
        size += sign
        for i in range(n):
            row_sums[i] += sign * M[i][j]
        prod = 1
        for x in row_sums:
            prod *= x
            if not prod:
                break
        total += -prod if (n - size) % 2 else prod
    return Fraction(total, scale)


def perm_bruteforce(A: DenseMatrix) -> Fraction:
    _require_square(A)
    n = A.rows
    total = Fraction(0)
    for p in itertools.permutations(range(n)):
        prod = Fraction(1)
        for i in range(n):
            prod *= A[i, p[i]]
            if not prod:
                break
        total += prod
    return total


def rref(A: DenseMatrix) -> tuple[DenseMatrix, list[int]]:
    """Reduced row echelon form and pivot columns; first nonzero entry is the pivot."""
    M = A.to_rows()
    pivots = []
    r = 0
    for c in range(A.cols):
        if r == A.rows:
            break
        p = next((i for i in range(r, A.rows) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(A.rows):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return DenseMatrix.from_rows(M), pivots


def rank_oracle(A: DenseMatrix) -> int:
    return len(rref(A)[1])


def inverse_oracle(A: DenseMatrix) -> DenseMatrix:
    """Gauss-Jordan on ``[A | I]``."""
    _require_square(A)
    n = A.rows
    aug = DenseMatrix.from_rows([list(A.row(i)) + [int(i == j) for j in range(n)] for i in range(n)])
    R, pivots = rref(aug)
    rank = sum(1 for c in pivots if c < n)
    if rank < n:
        raise SingularMatrixError(f"singular: rank {rank} < {n}", rank=rank)
    return R.submatrix(range(n), range(n, 2 * n))


@dataclass(frozen=True)
class RankFactorization:
    F: DenseMatrix
    G: DenseMatrix

    @property
    def rank(self) -> int:
        return self.G.rows


def rank_factorization(A: DenseMatrix) -> RankFactorization | None:
    """``A = F G`` with ``G`` the nonzero RREF rows and ``F`` the pivot columns of ``A``.

    Returns None for the zero matrix.
    """
    R, pivots = rref(A)
    if not pivots:
        return None
    G = R.submatrix(range(len(pivots)), range(A.cols))
    F = A.submatrix(range(A.rows), pivots)
    return RankFactorization(F, G)


def group_inverse_oracle(A: DenseMatrix) -> DenseMatrix:
    """``A^# = F (G F)^{-2} G``; fails if ``G F`` is singular (index > 1)."""
    _require_square(A)
    rf = rank_factorization(A)
    if rf is None:
        return DenseMatrix.zeros(A.rows)
    try:
        W = inverse_oracle(rf.G @ rf.F)
    except SingularMatrixError:
        raise IndexTooLargeError("index > 1: no group inverse") from None
    return rf.F @ W @ W @ rf.G


def index_oracle(A: DenseMatrix) -> int:
    """Smallest ``k >= 0`` with ``rank(A^k) = rank(A^{k+1})``."""
    _require_square(A)
    k, P = 0, DenseMatrix.identity(A.rows)
    r = A.rows
    while True:
        Q = P @ A
        r_next = rank_oracle(Q)
        if r_next == r:
            return k
        k, P, r = k + 1, Q, r_next


def null_contains(A: DenseMatrix, v: Sequence) -> bool:
    if len(v) != A.cols:
        raise ValueError(f"vector of length {len(v)} does not fit {A.rows}x{A.cols}")
    return not any(A.apply([rational(x) for x in v]))


def null_space(A: DenseMatrix) -> list[list[Fraction]]:
    """A basis of ``{v : A v = 0}`` read off the RREF."""
    R, pivots = rref(A)
    free = [c for c in range(A.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * A.cols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -R[r, f]
        basis.append(v)
    return basis


def same_null_space(A: DenseMatrix, B: DenseMatrix) -> bool:
    """Equal nullity and each basis annihilated by the other matrix."""
    na, nb = null_space(A), null_space(B)
    return (len(na) == len(nb)
            and all(null_contains(B, v) for v in na)
            and all(null_contains(A, v) for v in nb))
