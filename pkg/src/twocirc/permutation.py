"""Permutations of ``{0, ..., n-1}`` stored as image arrays.

The matrix of a permutation ``alpha`` has a one at ``(alpha(j), j)``, so
``matrix_of(compose(alpha, beta)) == matrix_of(alpha) @ matrix_of(beta)``.
The basic cyclic shift is ``tau(n, 1) = (n-1 n-2 ... 1 0)``, i.e. ``i -> i - 1``.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from typing import Iterable, Sequence

from .core import DomainError
from .matrix import DenseMatrix

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation:
    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise DomainError(f"not a bijection on [0, {len(images)}): {images}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, cycles: str | Sequence[Sequence[int]]) -> Permutation:
        """Build from cycle notation, e.g. ``from_cycles(7, "(0 2 1 4)(5 6)")``."""
        if isinstance(cycles, str):
            text = cycles.strip()
            if _CYCLE_RE.sub("", text).strip():
                raise ValueError(f"malformed cycle notation {cycles!r}")
            cycles = [[int(x) for x in body.split()] for body in _CYCLE_RE.findall(text)]
        images = list(range(n))
        seen = set()
        for cycle in cycles:
            for k, x in enumerate(cycle):
                if not 0 <= x < n or x in seen:
                    raise DomainError(f"bad or repeated point {x} in cycles for n={n}")
                seen.add(x)
                images[x] = cycle[(k + 1) % len(cycle)]
        return cls(images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __len__(self):
        return len(self.images)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __matmul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def __str__(self):
        return self.cycle_notation()

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Cycles ordered by their smallest point, each read off starting at that point."""
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cycle = []
            x = start
            while not seen[x]:
                seen[x] = True
                cycle.append(x)
                x = self.images[x]
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return out

    def cycle_notation(self, start: str = "max") -> str:
        """Cycle notation with fixed points omitted.

        With ``start="max"`` every cycle is written from its largest point, which
        prints the block-cyclic shifts as ``(3 2 1 0)(7 6 5 4)``.
        """
        if start not in ("max", "min"):
            raise ValueError("start must be 'max' or 'min'")
        parts = []
        for cycle in self.cycles():
            k = cycle.index(max(cycle) if start == "max" else min(cycle))
            rotated = cycle[k:] + cycle[:k]
            parts.append("(" + " ".join(map(str, rotated)) + ")")
        return "".join(parts) or "()"

    def to_json(self) -> str:
        return json.dumps(list(self.images))

    @classmethod
    def from_json(cls, text: str) -> Permutation:
        return cls(json.loads(text))


def tau(n: int, k: int = 1) -> Permutation:
    """``tau_n^k``: ``i -> (i - k) mod n``."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    return Permutation((i - k) % n for i in range(n))


def compose(alpha: Permutation, beta: Permutation) -> Permutation:
    """``alpha o beta``, applying ``beta`` first."""
    if alpha.n != beta.n:
        raise ValueError(f"size mismatch: {alpha.n} vs {beta.n}")
    a = alpha.images
    return Permutation(a[j] for j in beta.images)


def inverse(alpha: Permutation) -> Permutation:
    out = [0] * alpha.n
    for j, x in enumerate(alpha.images):
        out[x] = j
    return Permutation(out)


def conjugate(alpha: Permutation, sigma: Permutation) -> Permutation:
    """``sigma^-1 o alpha o sigma``."""
    return compose(inverse(sigma), compose(alpha, sigma))


def cycle_type(alpha: Permutation) -> dict[int, int]:
    """Map cycle length -> number of cycles of that length (fixed points included)."""
    counts = Counter(len(c) for c in alpha.cycles(include_fixed=True))
    return dict(sorted(counts.items()))


def matrix_of(alpha: Permutation) -> DenseMatrix:
    n = alpha.n
    entries = [0] * (n * n)
    for j, x in enumerate(alpha.images):
        entries[x * n + j] = 1
    return DenseMatrix(n, n, entries)
