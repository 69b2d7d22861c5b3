"""Set functions over 2^N built from a poset, stored as full value tables.

Subset X lives at index ``sum(1 << k for k in X)``; with 1-based labels,
binary digit k of the index is element k+1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from latmin.config import caps
from latmin.errors import SizeError
from latmin.matching import (
    NEG_INF,
    WeightedBipartiteGraph,
    max_weight_matching_saturating,
    max_weight_matching_within,
)
from latmin.poset import Poset, from_mask, max_chain_length, to_mask


@dataclass(frozen=True)
class SetFunctionTable:
    n: int
    values: tuple[int | float, ...]

    def __post_init__(self) -> None:
        if len(self.values) != 1 << self.n:
            raise ValueError(f"expected {1 << self.n} values, got {len(self.values)}")

    @classmethod
    def from_function(cls, n: int, f: Callable[[frozenset[int]], int | float]) -> "SetFunctionTable":
        return cls(n, tuple(f(from_mask(m)) for m in range(1 << n)))

    def __call__(self, X: Iterable[int]) -> int | float:
        return self.values[to_mask(X)]

    def __len__(self) -> int:
        return len(self.values)

    def items(self) -> Iterator[tuple[frozenset[int], int | float]]:
        for m, v in enumerate(self.values):
            yield from_mask(m), v

    @property
    def is_finite(self) -> bool:
        return all(v != NEG_INF for v in self.values)


class ConstructionVariant(enum.Enum):
    F0 = "f0"
    F1 = "f1"
    F2 = "f2"


def _check_cap(P: Poset, cap: int | None) -> None:
    cap = caps().table if cap is None else cap
    if P.n > cap:
        raise SizeError(f"n={P.n} exceeds the table cap {cap}")


def build_prop2(P: Poset, cap: int | None = None) -> SetFunctionTable:
    """Count the elements outside X lying strictly below some element of X."""
    _check_cap(P, cap)
    size = 1 << P.n
    below = [0] * size  # union of strict down-sets of X's elements
    values = [0] * size
    for m in range(1, size):
        low = m & -m
        below[m] = below[m ^ low] | P.strict_down[low.bit_length() - 1]
        values[m] = bin(below[m] & ~m).count("1")
    return SetFunctionTable(P.n, tuple(values))


def build_graph(P: Poset, variant: ConstructionVariant) -> WeightedBipartiteGraph:
    """Bipartite graph on ``U = {u_i}``, ``V = {v_j}`` with an edge u_i–v_j for ``j ≼ i``.

    F0 weighs off-diagonal edges 1; F2 weighs them by the longest chain from
    j to i; both give diagonal edges weight 0. F1 drops the diagonal and keeps
    the chain weights.
    """
    edges = []
    for i in range(P.n):
        for j in range(P.n):
            if not P.leq[j][i]:
                continue
            if i == j:
                if variant is not ConstructionVariant.F1:
                    edges.append((i, j, 0))
            elif variant is ConstructionVariant.F0:
                edges.append((i, j, 1))
            else:
                edges.append((i, j, max_chain_length(P, j, i)))
    return WeightedBipartiteGraph(P.n, P.n, frozenset(edges))


def build_table(
    P: Poset, variant: ConstructionVariant, cap: int | None = None
) -> SetFunctionTable:
    _check_cap(P, cap)
    G = build_graph(P, variant)
    full = (1 << P.n) - 1
    values = []
    for m in range(1 << P.n):
        X = from_mask(m)
        if variant is ConstructionVariant.F1:
            value, _ = max_weight_matching_within(G, X, from_mask(full & ~m))
        else:
            value, _ = max_weight_matching_saturating(G, X)
        values.append(value)
    return SetFunctionTable(P.n, tuple(values))
