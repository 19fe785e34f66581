"""Grid verification of every closed form against the dense oracles."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .circulant import TwoParamCirculant
from .closedform import det_closed, drazin_closed, drazin_axioms_check, inverse_closed, perm_closed
from .digraph import build_digraph, det_by_digraph, perm_by_digraph
from .matrix import DenseMatrix
from .oracle import (det_oracle, group_inverse_oracle, inverse_oracle, perm_oracle, rank_oracle,
                     same_null_space)

DEFAULT_PAIRS: tuple[tuple[Fraction, Fraction], ...] = (
    (Fraction(2), Fraction(3)),
    (Fraction(1), Fraction(-1)),
    (Fraction(1), Fraction(1)),
    (Fraction(-3, 2), Fraction(5, 7)),
)


@dataclass
class CaseReport:
    t: TwoParamCirculant
    singular: bool
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def label(self) -> str:
        t = self.t
        return f"n={t.n} s1={t.s1} s2={t.s2} a={t.a} b={t.b}"


def grid(n_min: int = 2, n_max: int = 10,
         pairs: Sequence[tuple] = DEFAULT_PAIRS) -> Iterator[TwoParamCirculant]:
    for n in range(n_min, n_max + 1):
        for s1 in range(n):
            for s2 in range(s1 + 1, n):
                for a, b in pairs:
                    yield TwoParamCirculant(n, s1, s2, a, b)


def check_case(t: TwoParamCirculant) -> CaseReport:
    A = t.to_dense()
    det = det_closed(t)
    report = CaseReport(t, det.singular)
    c = report.checks
    c["det"] = det.value == det_oracle(A) == det_by_digraph(build_digraph(t))
    c["perm"] = perm_closed(t) == perm_oracle(A) == perm_by_digraph(build_digraph(t))
    if not det.singular:
        inv = inverse_closed(t).to_dense()
        c["inverse"] = inv @ A == DenseMatrix.identity(t.n) and inv == inverse_oracle(A)
        return report
    D = drazin_closed(t).to_dense()
    c["index_one"] = rank_oracle(A) == rank_oracle(A @ A)
    c["drazin_axioms"] = drazin_axioms_check(A, D, 1)
    c["group_inverse"] = D == group_inverse_oracle(A)
    # the null-space/commutation form of the axioms, then A^2 D = A directly
    c["null_space"] = same_null_space(A, D)
    c["commute"] = A @ D == D @ A
    c["d2a"] = D @ D @ A == D
    c["a2d"] = A @ A @ D == A
    return report


def verify_grid(cases: Iterable[TwoParamCirculant] | None = None) -> list[CaseReport]:
    return [check_case(t) for t in (grid() if cases is None else cases)]
