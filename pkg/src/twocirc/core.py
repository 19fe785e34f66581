"""Exact scalars and the integer helpers used throughout the package.

Scalars are :class:`fractions.Fraction` values, which are always kept in
lowest terms with a positive denominator, so ``==`` is value equality.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class SingularMatrixError(DomainError):
    def __init__(self, message: str = "singular: use drazin_closed", rank: int | None = None):
        super().__init__(message)
        self.rank = rank


class NonsingularMatrixError(DomainError):
    def __init__(self, message: str = "nonsingular: use inverse_closed"):
        super().__init__(message)


def rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``. Decimals and ``q = 0`` are rejected."""
    match = _RATIONAL_RE.match(text.strip())
    if match is None:
        raise ValueError(f"malformed rational {text!r}")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def gcd(n: int, s: int) -> int:
    if n == 0 and s == 0:
        raise DomainError("undefined gcd")
    return math.gcd(n, s)


def n_without_s(n: int, s: int) -> int:
    """``n \\ s = n / (n, s)``, the length of each stride-``s`` cycle mod ``n``."""
    if not 0 < s < n:
        raise DomainError(f"need 0 < s < n, got n={n}, s={s}")
    return n // math.gcd(n, s)


def lcm(n: int, s: int) -> int:
    return math.lcm(n, s)


def mod(x: int, n: int) -> int:
    """Least non-negative residue of ``x`` modulo ``n``."""
    if n <= 0:
        raise DomainError(f"modulus must be positive, got {n}")
    return x % n


@dataclass(frozen=True)
class IntPair:
    """An order ``n`` together with a stride ``0 < s < n``."""

    n: int
    s: int

    def __post_init__(self):
        if not 0 < self.s < self.n:
            raise DomainError(f"need 0 < s < n, got n={self.n}, s={self.s}")

    @property
    def g(self) -> int:
        """Number of stride classes, ``(n, s)``."""
        return math.gcd(self.n, self.s)

    @property
    def m(self) -> int:
        """Size of each stride class, ``n \\ s``."""
        return self.n // self.g
