"""Block-diagonalizing stride-``s`` circulants by an explicit permutation.

The vertices of ``D(aI + bP^s)`` split into ``g = (n, s)`` classes of size
``m = n \\ s``. Two embeddings of ``[n]`` into the cylinder ``[g] x Z_m`` are
used: ``F`` (residue class, position along the stride walk) and ``J``
(consecutive block, position along the block read downward). Matching them
gives ``sigma`` with ``sigma^-1 o tau^s o sigma = nu``, where ``nu`` cycles
every block ``{cm, ..., cm + m - 1}`` downward, so ``P_nu = I_g ⊗ P_m``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .circulant import Circulant, TwoParamCirculant, circ_to_dense
from .core import DomainError, IntPair, rational
from .matrix import DenseMatrix, block_identity
from .permutation import Permutation, compose, inverse, tau


class CylinderPoint(NamedTuple):
    c: int
    p: int


def _pair(n: int, s: int) -> IntPair:
    return IntPair(n, s)


def _check_vertex(n: int, i: int):
    if not 0 <= i < n:
        raise DomainError(f"vertex {i} outside [0, {n})")


def _check_point(pair: IntPair, cp: CylinderPoint):
    c, p = cp
    if not (0 <= c < pair.g and 0 <= p < pair.m):
        raise DomainError(f"cylinder point {tuple(cp)} outside [{pair.g}] x Z_{pair.m}")


def reach_set(n: int, s: int, i: int) -> frozenset[int]:
    """Vertices reachable from ``i`` by repeated steps of ``s`` modulo ``n``."""
    pair = _pair(n, s)
    return frozenset((i + k * s) % n for k in range(pair.m))


def nu(n: int, s: int) -> Permutation:
    """Product of ``(n, s)`` descending cycles ``(cm+m-1 ... cm+1 cm)``."""
    m = _pair(n, s).m
    return Permutation(
        i - 1 if i % m else i + m - 1
        for i in range(n)
    )


def rho_index(n: int, s: int, i: int) -> int:
    """Index of the consecutive block holding ``i``: ``floor(i / m)``."""
    pair = _pair(n, s)
    if i < 0:
        raise DomainError(f"block index undefined for negative i={i}")
    return i // pair.m


def ell(n: int, s: int, i: int) -> int:
    pair = _pair(n, s)
    _check_vertex(n, i)
    m = pair.m
    return ((rho_index(n, s, i) + 1) * m - i) % m


def cyc(n: int, s: int, i: int) -> int:
    """Residue class of ``i`` modulo ``(n, s)``."""
    pair = _pair(n, s)
    _check_vertex(n, i)
    return i % pair.g


def pos(n: int, s: int, i: int) -> int:
    """The unique ``x`` in ``[0, m)`` with ``s*x = i - cyc(i) (mod n)``."""
    pair = _pair(n, s)
    _check_vertex(n, i)
    g, m = pair.g, pair.m
    if m == 1:
        return 0
    # divide the congruence through by g, then invert s/g modulo m
    return ((i - i % g) // g) * pow(s // g, -1, m) % m


def J_embed(n: int, s: int, i: int) -> CylinderPoint:
    pair = _pair(n, s)
    return CylinderPoint(rho_index(n, s, i) % pair.g, ell(n, s, i))


def J_inv(n: int, s: int, cp) -> int:
    pair = _pair(n, s)
    c, p = cp = CylinderPoint(*cp)
    _check_point(pair, cp)
    return (c + 1 - (p == 0)) * pair.m - p


def F_embed(n: int, s: int, i: int) -> CylinderPoint:
    return CylinderPoint(cyc(n, s, i), pos(n, s, i))


def F_inv(n: int, s: int, cp) -> int:
    pair = _pair(n, s)
    c, p = cp = CylinderPoint(*cp)
    _check_point(pair, cp)
    return (c + p * s) % n


def shift(n: int, s: int, cp) -> CylinderPoint:
    pair = _pair(n, s)
    c, p = cp
    return CylinderPoint(c, (p - 1) % pair.m)


def reflect(n: int, s: int, cp) -> CylinderPoint:
    """Reverse the position coordinate: ``(c, p) -> (c, -p mod m)``."""
    pair = _pair(n, s)
    c, p = cp
    return CylinderPoint(c, -p % pair.m)


@dataclass(frozen=True)
class UntangleResult:
    sigma: Permutation
    nu: Permutation
    block_count: int
    block_size: int


def sigma(n: int, s: int) -> UntangleResult:
    """The conjugator taking ``tau_n^s`` to ``nu_{n,s}``.

    ``sigma = F_inv o reflect o J_embed``. ``J_embed`` reads each block in the
    opposite direction to the stride walk that ``F_embed`` records, and the
    reflection lines the two up so that ``sigma^-1 tau^s sigma = nu``.
    """
    pair = _pair(n, s)
    images = [F_inv(n, s, reflect(n, s, J_embed(n, s, i))) for i in range(n)]
    return UntangleResult(Permutation(images), nu(n, s), pair.g, pair.m)


def sigma_inverse(n: int, s: int) -> Permutation:
    """``J_inv o reflect o F_embed``, computed pointwise."""
    return Permutation(J_inv(n, s, reflect(n, s, F_embed(n, s, i))) for i in range(n))


def conjugate_dense(X: DenseMatrix, perm: Permutation) -> DenseMatrix:
    """``P_perm X P_perm^T`` by relabelling: entry ``(perm(i), perm(j))`` is ``X[i, j]``."""
    n = X.rows
    inv = inverse(perm).images
    return DenseMatrix(n, n, (X[inv[i], inv[j]] for i in range(n) for j in range(n)))


def shift_rows(X: DenseMatrix, k: int) -> DenseMatrix:
    """``P_n^k X``: row ``i`` of the result is row ``i + k`` of ``X``."""
    n = X.rows
    return DenseMatrix(n, X.cols, (x for i in range(n) for x in X.row((i + k) % n)))


@dataclass(frozen=True)
class BlockDiagonalization:
    """``P_n^{s1} P_sigma (I_g ⊗ block) P_sigma^T``."""

    sigma: Permutation
    g: int
    block: Circulant
    s1: int = 0

    @property
    def n(self) -> int:
        return self.g * self.block.n

    def block_form(self) -> DenseMatrix:
        """The block-diagonal middle factor ``I_g ⊗ block``."""
        return block_identity(self.g, circ_to_dense(self.block))

    def reconstruct(self) -> DenseMatrix:
        return shift_rows(conjugate_dense(self.block_form(), self.sigma), self.s1)


def block_diagonalize(t: TwoParamCirculant) -> BlockDiagonalization:
    res = sigma(t.n, t.s)
    block = [0] * res.block_size
    block[0] = t.a
    block[1] = t.b
    return BlockDiagonalization(res.sigma, res.block_count, Circulant(block), t.s1)


def stride_circulant(n: int, s: int, coeffs: Sequence) -> Circulant:
    """``sum_k coeffs[k] P_n^{k s}`` for ``k`` in ``[0, n \\ s)``."""
    pair = _pair(n, s)
    if len(coeffs) != pair.m:
        raise DomainError(f"expected {pair.m} coefficients for n={n}, s={s}, got {len(coeffs)}")
    c = [rational(0)] * n
    for k, a in enumerate(coeffs):
        c[(k * s) % n] += rational(a)
    return Circulant(c)


def untangle_poly(n: int, s: int, coeffs: Sequence) -> BlockDiagonalization:
    pair = _pair(n, s)
    if len(coeffs) != pair.m:
        raise DomainError(f"expected {pair.m} coefficients for n={n}, s={s}, got {len(coeffs)}")
    return BlockDiagonalization(sigma(n, s).sigma, pair.g, Circulant(coeffs), 0)


def untangled_conjugate(n: int, s: int) -> Permutation:
    """``sigma^-1 o tau_n^s o sigma``; equals ``nu(n, s)``."""
    sg = sigma(n, s).sigma
    return compose(inverse(sg), compose(tau(n, s), sg))
