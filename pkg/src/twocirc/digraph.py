"""Weighted digraphs of matrices and the linear-subdigraph expansions of det and perm."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .circulant import TwoParamCirculant
from .core import DomainError, format_rational, rational
from .matrix import DenseMatrix
from .untangle import reach_set

MAX_ENUMERATION_ORDER = 16


class Arc(NamedTuple):
    source: int
    target: int
    weight: Fraction
    label: str | None = None


@dataclass(frozen=True)
class WeightedDigraph:
    n: int
    arcs: tuple[Arc, ...] = field(default=())

    def out_arcs(self, v: int) -> list[Arc]:
        return [arc for arc in self.arcs if arc.source == v]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "arcs": [
                {"from": a.source, "to": a.target, "weight": format_rational(a.weight),
                 **({"label": a.label} if a.label else {})}
                for a in self.arcs
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> WeightedDigraph:
        return cls(data["n"], tuple(
            Arc(a["from"], a["to"], rational(a["weight"]), a.get("label")) for a in data["arcs"]
        ))


@dataclass(frozen=True)
class LinearSubdigraph:
    successor: tuple[int, ...]
    weight: Fraction
    cycle_count: int


def build_digraph(t: TwoParamCirculant) -> WeightedDigraph:
    arcs = []
    for i in range(t.n):
        arcs.append(Arc(i, (i + t.s1) % t.n, t.a, "a"))
        arcs.append(Arc(i, (i + t.s2) % t.n, t.b, "b"))
    return WeightedDigraph(t.n, tuple(arcs))


def digraph_of_matrix(A: DenseMatrix) -> WeightedDigraph:
    """Arc ``i -> j`` of weight ``A[i, j]`` for every nonzero entry."""
    if not A.is_square:
        raise ValueError("digraph of a non-square matrix")
    return WeightedDigraph(A.rows, tuple(
        Arc(i, j, A[i, j]) for i in range(A.rows) for j in range(A.cols) if A[i, j]
    ))


def components(t: TwoParamCirculant) -> list[frozenset[int]]:
    """Stride classes of ``s2 - s1``; for ``s1 = 0`` these are the connected components."""
    return [reach_set(t.n, t.s, c) for c in range(t.g)]


def _count_cycles(successor: list[int]) -> int:
    seen = [False] * len(successor)
    count = 0
    for v in range(len(successor)):
        if not seen[v]:
            count += 1
            while not seen[v]:
                seen[v] = True
                v = successor[v]
    return count


def linear_subdigraphs(g: WeightedDigraph) -> list[LinearSubdigraph]:
    """Every spanning subdigraph with in- and out-degree one, by backtracking.

    Exponential in general, hence the order cap.
    """
    if g.n > MAX_ENUMERATION_ORDER:
        raise DomainError(f"linear subdigraph enumeration is limited to order {MAX_ENUMERATION_ORDER}")
    out = [g.out_arcs(v) for v in range(g.n)]
    found = []
    successor = [0] * g.n
    used = [False] * g.n

    def extend(v: int, weight: Fraction):
        if v == g.n:
            found.append(LinearSubdigraph(tuple(successor), weight, _count_cycles(successor)))
            return
        for arc in out[v]:
            if not used[arc.target]:
                used[arc.target] = True
                successor[v] = arc.target
                extend(v + 1, weight * arc.weight)
                used[arc.target] = False

    extend(0, Fraction(1))
    return found


def det_by_digraph(g: WeightedDigraph) -> Fraction:
    return sum(((-1) ** ((g.n - L.cycle_count) % 2) * L.weight for L in linear_subdigraphs(g)),
               Fraction(0))


def perm_by_digraph(g: WeightedDigraph) -> Fraction:
    return sum((L.weight for L in linear_subdigraphs(g)), Fraction(0))


def to_dot(g: WeightedDigraph, symbolic: bool = True, name: str = "D") -> str:
    """DOT text, one arc per line in arc order.

    With ``symbolic`` the arc labels are the ``a``/``b`` names when present,
    otherwise the exact weights.
    """
    lines = [f"digraph {name} {{"]
    touched = {a.source for a in g.arcs} | {a.target for a in g.arcs}
    lines += [f"  {v};" for v in range(g.n) if v not in touched]
    for arc in g.arcs:
        label = arc.label if symbolic and arc.label else format_rational(arc.weight)
        lines.append(f'  {arc.source} -> {arc.target} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
