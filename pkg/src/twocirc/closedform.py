"""Closed forms for ``a P_n^{s1} + b P_n^{s2}``: determinant, permanent,
inverse and Drazin (group) inverse.

With ``s = s2 - s1``, ``g = (n, s)`` and ``m = n \\ s`` the matrix is similar
to ``P_n^{s1}`` times ``g`` copies of ``a I_m + b P_m``, so every formula
reduces to the order-``m`` case and is spread back over the ``j`` with
``j + s1`` in the stride class of 0.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .circulant import Circulant, TwoParamCirculant, circ_to_dense
from .core import DomainError, NonsingularMatrixError, SingularMatrixError, format_rational, rational
from .matrix import DenseMatrix
from .untangle import cyc, pos


@dataclass(frozen=True)
class DetResult:
    value: Fraction
    sign_exponent: int
    base: Fraction
    multiplicity: int

    @property
    def singular(self) -> bool:
        return self.base == 0

    def to_dict(self) -> dict:
        return {
            "kind": "det",
            "value": format_rational(self.value),
            "sign_exponent": self.sign_exponent,
            "base": format_rational(self.base),
            "multiplicity": self.multiplicity,
        }

    @classmethod
    def from_dict(cls, data: dict) -> DetResult:
        return cls(rational(data["value"]), int(data["sign_exponent"]),
                   rational(data["base"]), int(data["multiplicity"]))


class InverseKind(enum.Enum):
    INVERSE = "inverse"
    DRAZIN_MINUS = "drazin_minus"
    DRAZIN_PLUS = "drazin_plus"


@dataclass(frozen=True)
class GenInverseResult:
    """``scale * circ``, with ``circ`` the unscaled coefficient vector."""

    kind: InverseKind
    circ: Circulant
    scale: Fraction

    def circulant(self) -> Circulant:
        return self.circ.scale(self.scale)

    def to_dense(self) -> DenseMatrix:
        return circ_to_dense(self.circulant())

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "scale": format_rational(self.scale),
            "coeffs": [format_rational(c) for c in self.circ.coeffs],
        }

    @classmethod
    def from_dict(cls, data: dict) -> GenInverseResult:
        return cls(InverseKind(data["kind"]), Circulant(data["coeffs"]), rational(data["scale"]))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> GenInverseResult:
        return cls.from_dict(json.loads(text))


def det_closed(t: TwoParamCirculant) -> DetResult:
    m, g = t.m, t.g
    base = t.a ** m - (-t.b) ** m
    sign_exponent = (t.n - 1) * t.s1
    value = (-1) ** (sign_exponent % 2) * base ** g
    return DetResult(value, sign_exponent, base, g)


def perm_closed(t: TwoParamCirculant) -> Fraction:
    return (t.a ** t.m + t.b ** t.m) ** t.g


def rho(t: TwoParamCirculant, i: int) -> Fraction:
    """Coefficient ``(-1)^p b^p a^(m-1-p)`` at stride position ``p = pos(i)``, zero off class 0.

    ``i`` is reduced modulo ``n`` first.
    """
    n, s, m = t.n, t.s, t.m
    i %= n
    if cyc(n, s, i) != 0:
        return Fraction(0)
    p = pos(n, s, i)
    return (-1) ** p * t.b ** p * t.a ** (m - 1 - p)


def rho_star(n: int, s: int, i: int) -> Fraction:
    """``m - 2 pos(i) - 1`` on the stride class of 0, zero elsewhere."""
    i %= n
    if cyc(n, s, i) != 0:
        return Fraction(0)
    m = n // math.gcd(n, s)
    return Fraction(m - 2 * pos(n, s, i) - 1)


def inverse_closed(t: TwoParamCirculant) -> GenInverseResult:
    det = det_closed(t)
    if det.singular:
        raise SingularMatrixError()
    coeffs = [rho(t, j + t.s1) for j in range(t.n)]
    return GenInverseResult(InverseKind.INVERSE, Circulant(coeffs), 1 / det.base)


def drazin_closed(t: TwoParamCirculant) -> GenInverseResult:
    """Group inverse of a singular ``a P^{s1} + b P^{s2}``.

    Over the rationals singularity means ``b = -a``, or ``b = a`` with an even
    block order ``m``. In the second case each block is ``a(I_m + P_m)`` and
    the block coefficient at stride position ``p`` carries a factor ``(-1)^p``.
    """
    if not det_closed(t).singular:
        raise NonsingularMatrixError()
    n, s, m, a = t.n, t.s, t.m, t.a
    if t.b == -a:
        kind = InverseKind.DRAZIN_MINUS
    else:
        assert t.b == a and m % 2 == 0, "rational singular pattern must be b = -a or b = a with even m"
        kind = InverseKind.DRAZIN_PLUS
    coeffs = []
    for j in range(n):
        i = (j + t.s1) % n
        c = rho_star(n, s, i)
        if kind is InverseKind.DRAZIN_PLUS and c and pos(n, s, i) % 2:
            c = -c
        coeffs.append(c)
    return GenInverseResult(kind, Circulant(coeffs), 1 / (2 * a * m))


def generalized_inverse(t: TwoParamCirculant) -> GenInverseResult:
    """Inverse when it exists, otherwise the Drazin inverse.

    The Drazin inverse of a nonsingular matrix is its inverse, so this is the
    Drazin inverse in every case.
    """
    if det_closed(t).singular:
        return drazin_closed(t)
    return inverse_closed(t)


def base_drazin_minus(n: int, a) -> Circulant:
    """``(a I_n - a P_n)^D = (1 / 2an) sum_i (n - 2i - 1) P_n^i``."""
    a = rational(a)
    if n < 2 or a == 0:
        raise DomainError("need n >= 2 and a != 0")
    return Circulant(Fraction(n - 2 * i - 1) / (2 * a * n) for i in range(n))


def base_drazin_plus(m: int, a) -> Circulant:
    """``(a I_m + a P_m)^D`` for even ``m``: ``(1 / 2am) sum_i (-1)^i (m - 2i - 1) P_m^i``."""
    a = rational(a)
    if m < 2 or m % 2 or a == 0:
        raise DomainError(f"a I_m + a P_m is nonsingular unless m is even (got m={m})")
    return Circulant(Fraction((-1) ** i * (m - 2 * i - 1)) / (2 * a * m) for i in range(m))


def drazin_axioms_check(A: DenseMatrix, D: DenseMatrix, k: int = 1) -> bool:
    """``AD = DA``, ``A^{k+1} D = A^k`` and ``DAD = D``, checked exactly."""
    if not (A.is_square and D.is_square and A.rows == D.rows):
        raise ValueError("A and D must be square of equal size")
    if k < 1:
        raise ValueError("k must be positive")
    AD = A @ D
    if AD != D @ A:
        return False
    Ak = A ** k
    if A @ Ak @ D != Ak:
        return False
    return D @ AD == D
