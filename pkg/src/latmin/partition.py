"""Soft indicators exp(-r f) of a minimizer lattice, exact dyadic partition
sums, and the bridge from bipartite independent sets to poset ideals."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from latmin.config import caps
from latmin.constructions import SetFunctionTable
from latmin.errors import InfiniteValueError, InputFormatError, NonIntegerError, SizeError
from latmin.matching import NEG_INF
from latmin.poset import Poset, poset_from_relations


@dataclass(frozen=True)
class DyadicSum:
    value: Fraction

    def __post_init__(self) -> None:
        d = self.value.denominator
        if d & (d - 1):
            raise ValueError(f"denominator {d} is not a power of two")

    def __str__(self) -> str:
        return f"{self.value.numerator}/{self.value.denominator}"

    @classmethod
    def parse(cls, text: str) -> "DyadicSum":
        num, _, den = text.partition("/")
        return cls(Fraction(int(num), int(den or 1)))


@dataclass(frozen=True)
class BipartiteGraphPlain:
    a_size: int
    b_size: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        for a, b in self.edges:
            if not (0 <= a < self.a_size and 0 <= b < self.b_size):
                raise InputFormatError(f"edge ({a}, {b}) out of range")

    @classmethod
    def from_edges(cls, a_size: int, b_size: int, edges: Iterable[tuple[int, int]]) -> "BipartiteGraphPlain":
        edges = [tuple(e) for e in edges]
        fs = frozenset(edges)
        if len(fs) != len(edges):
            raise InputFormatError("duplicate edges")
        return cls(a_size, b_size, fs)


def g_r(f: SetFunctionTable, r: float, X: Iterable[int]) -> float:
    """exp(-r f(X)); tends to the indicator of ``f(X) == 0`` as r grows."""
    if not r > 0:
        raise ValueError(f"r must be positive, got {r}")
    v = f(X)
    if v == NEG_INF:
        raise InfiniteValueError("f(X) is -inf")
    return math.exp(-r * v)


def partition_sum_dyadic(f: SetFunctionTable) -> DyadicSum:
    """Σ_X 2^(-(n+2) f(X)) in exact rational arithmetic (r = (n+2) ln 2)."""
    scale = f.n + 2
    total = Fraction(0)
    for v in f.values:
        if v == NEG_INF:
            raise InfiniteValueError("table contains -inf entries")
        if isinstance(v, bool) or not (isinstance(v, int) or (isinstance(v, float) and v.is_integer())):
            raise NonIntegerError(f"non-integer value {v!r}")
        v = int(v)
        if v < 0:
            raise ValueError(f"negative value {v}")
        total += Fraction(1, 1 << (scale * v))
    return DyadicSum(total)


def estimate_ideal_count(f: SetFunctionTable) -> int:
    """Nearest integer to the dyadic partition sum.

    Exact count of ideals whenever f is integer-valued, zero on the ideals
    and positive elsewhere: the 2^n - |I(P)| positive terms are each at
    most 2^-(n+2), so they add less than 1/4.
    """
    s = partition_sum_dyadic(f).value
    return math.floor(s + Fraction(1, 2))


def bis_to_poset(G: BipartiteGraphPlain) -> Poset:
    """Height-2 poset on A ∪ B (A first, then B) with ``a ≺ b`` for every edge."""
    shift = G.a_size
    return poset_from_relations(G.a_size + G.b_size, [(a, shift + b) for a, b in sorted(G.edges)])


def independent_set_to_ideal(G: BipartiteGraphPlain, S: Iterable[int], T: Iterable[int]) -> frozenset[int]:
    """Image of the independent set ``S ⊆ A``, ``T ⊆ B`` under ``(S, T) ↦ (A∖S) ∪ T``,
    in the element labels of ``bis_to_poset(G)``."""
    S = set(S)
    return frozenset([a for a in range(G.a_size) if a not in S] + [G.a_size + b for b in T])


def count_bis_bruteforce(G: BipartiteGraphPlain, cap: int | None = None) -> int:
    cap = caps().bis_vertices if cap is None else cap
    total = G.a_size + G.b_size
    if total > cap:
        raise SizeError(f"{total} vertices exceed the brute-force cap {cap}")
    edge_masks = [1 << a | 1 << (G.a_size + b) for a, b in G.edges]
    return sum(
        1
        for m in range(1 << total)
        if not any(m & e == e for e in edge_masks)
    )

