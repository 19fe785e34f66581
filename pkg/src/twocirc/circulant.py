"""Circulant matrices, the two-parameter family, and the gcd rank criterion."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .core import DomainError, format_rational, rational
from .matrix import DenseMatrix


class Circulant:
    """``Circ(c_0, ..., c_{n-1}) = c_0 I + c_1 P + ... + c_{n-1} P^{n-1}``.

    Row ``i`` of the dense form is row 0 shifted right by ``i``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        coeffs = tuple(rational(c) for c in coeffs)
        if not coeffs:
            raise DomainError("a circulant needs at least one coefficient")
        self.coeffs = coeffs

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Circulant):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "Circ(" + ", ".join(format_rational(c) for c in self.coeffs) + ")"

    def scale(self, c) -> Circulant:
        c = rational(c)
        return Circulant(c * x for x in self.coeffs)

    def to_dense(self) -> DenseMatrix:
        return circ_to_dense(self)

    def to_dict(self) -> dict:
        return {"n": self.n, "coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_dict(cls, data: dict) -> Circulant:
        coeffs = [rational(c) for c in data["coeffs"]]
        if data.get("n", len(coeffs)) != len(coeffs):
            raise ValueError(f"n={data['n']} disagrees with {len(coeffs)} coefficients")
        return cls(coeffs)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> Circulant:
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class TwoParamCirculant:
    """``a P_n^{s1} + b P_n^{s2}`` with ``0 <= s1 < s2 < n`` and ``a, b != 0``."""

    n: int
    s1: int
    s2: int
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", rational(self.a))
        object.__setattr__(self, "b", rational(self.b))
        if not 0 <= self.s1 < self.s2 < self.n:
            raise DomainError(f"need 0 <= s1 < s2 < n, got n={self.n}, s1={self.s1}, s2={self.s2}")
        if self.a == 0 or self.b == 0:
            raise DomainError("a and b must be nonzero")

    @property
    def s(self) -> int:
        """The stride ``s2 - s1``."""
        return self.s2 - self.s1

    @property
    def g(self) -> int:
        """Number of diagonal blocks, ``(n, s2 - s1)``."""
        return math.gcd(self.n, self.s)

    @property
    def m(self) -> int:
        """Block order, ``n \\ (s2 - s1)``."""
        return self.n // self.g

    def circulant(self) -> Circulant:
        c = [Fraction(0)] * self.n
        c[self.s1] = self.a
        c[self.s2] = self.b
        return Circulant(c)

    def to_dense(self) -> DenseMatrix:
        return to_dense(self)


def to_dense(t: TwoParamCirculant) -> DenseMatrix:
    n = t.n
    entries = [Fraction(0)] * (n * n)
    for i in range(n):
        entries[i * n + (i + t.s1) % n] = t.a
        entries[i * n + (i + t.s2) % n] = t.b
    return DenseMatrix(n, n, entries)


def circ_to_dense(c: Circulant) -> DenseMatrix:
    n = c.n
    return DenseMatrix(n, n, (c.coeffs[(j - i) % n] for i in range(n) for j in range(n)))


def first_row(M: DenseMatrix) -> Circulant:
    return Circulant(M.row(0))


def is_circulant(M: DenseMatrix) -> bool:
    return M.is_square and circ_to_dense(first_row(M)) == M


class PolynomialQ:
    """Dense univariate polynomial with rational coefficients, lowest degree first."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable = ()):
        cs = [rational(c) for c in coefficients]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coefficients = tuple(cs)

    @classmethod
    def x_pow_minus_one(cls, n: int) -> PolynomialQ:
        return cls([-1] + [0] * (n - 1) + [1])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def lead(self) -> Fraction:
        return self.coefficients[-1]

    def __eq__(self, other):
        if not isinstance(other, PolynomialQ):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.coefficients):
            if c:
                terms.append(format_rational(c) + ("" if k == 0 else "*x" if k == 1 else f"*x^{k}"))
        return " + ".join(terms)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def monic(self) -> PolynomialQ:
        if self.is_zero():
            return self
        lead = self.lead()
        return PolynomialQ(c / lead for c in self.coefficients)

    def divmod(self, other: PolynomialQ) -> tuple[PolynomialQ, PolynomialQ]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coefficients)
        dq = other.degree
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        lead = other.lead()
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            if c == 0:
                continue
            quot[k - dq] = c
            for j, oc in enumerate(other.coefficients):
                rem[k - dq + j] -= c * oc
        return PolynomialQ(quot), PolynomialQ(rem[:dq])


def poly_gcd(p: PolynomialQ, q: PolynomialQ) -> PolynomialQ:
    """Monic gcd by the Euclidean algorithm; ``gcd(0, 0) = 0``."""
    p, q = p.monic(), q.monic()
    while not q.is_zero():
        p, q = q, p.divmod(q)[1].monic()
    return p


def associated_polynomial(c: Circulant) -> PolynomialQ:
    return PolynomialQ(c.coeffs)


def rank_circulant(c: Circulant) -> int:
    """Rank as ``n - deg gcd(x^n - 1, P_C(x))``."""
    d = poly_gcd(PolynomialQ.x_pow_minus_one(c.n), associated_polynomial(c)).degree
    return c.n - d
