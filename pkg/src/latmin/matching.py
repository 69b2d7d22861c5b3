"""Exact maximum-weight bipartite matching under side constraints.

Two entry points share one solver core:

* ``max_weight_matching_saturating``: the matched U-vertices are exactly R.
* ``max_weight_matching_within``: every matched vertex lies in the allowed
  sets; nothing has to be saturated.

The core is the shortest-augmenting-path assignment method with vertex
potentials, run over the edge lists only, so a U-vertex that cannot be
reached by an alternating path to a free V-vertex is detected as
infeasibility (value ``NEG_INF``). All arithmetic is on Python ints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from latmin.config import caps
from latmin.errors import InputFormatError, NegativeWeightError, SizeError

# Extended-integer bottom: below every int, absorbing under addition.
NEG_INF = float("-inf")

Adjacency = Sequence[Sequence[tuple[int, int]]]


@dataclass(frozen=True)
class WeightedBipartiteGraph:
    u_size: int
    v_size: int
    edges: frozenset[tuple[int, int, int]]

    def __post_init__(self) -> None:
        seen = set()
        for u, v, w in self.edges:
            if not (0 <= u < self.u_size and 0 <= v < self.v_size):
                raise InputFormatError(f"edge ({u}, {v}) out of range")
            if not isinstance(w, int) or isinstance(w, bool):
                raise InputFormatError(f"edge ({u}, {v}) has non-integer weight {w!r}")
            if (u, v) in seen:
                raise InputFormatError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))

    @classmethod
    def from_edges(
        cls, u_size: int, v_size: int, edges: Iterable[tuple[int, int, int]]
    ) -> "WeightedBipartiteGraph":
        edges = list(edges)
        fs = frozenset(edges)
        if len(fs) != len(edges):
            raise InputFormatError("duplicate edge triples")
        return cls(u_size, v_size, fs)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """``adjacency[u]`` = sorted ``(v, weight)`` pairs."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.u_size)]
        for u, v, w in self.edges:
            adj[u].append((v, w))
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def weight(self) -> dict[tuple[int, int], int]:
        return {(u, v): w for u, v, w in self.edges}

    @cached_property
    def has_negative_weight(self) -> bool:
        return any(w < 0 for _, _, w in self.edges)


@dataclass(frozen=True)
class Matching:
    pairs: frozenset[tuple[int, int]]
    weight: int

    @property
    def matched_u(self) -> frozenset[int]:
        return frozenset(u for u, _ in self.pairs)

    @property
    def matched_v(self) -> frozenset[int]:
        return frozenset(v for _, v in self.pairs)

    def is_valid_in(self, G: WeightedBipartiteGraph) -> bool:
        """Edges exist in G, no vertex is reused, and the weight adds up."""
        us = [u for u, _ in self.pairs]
        vs = [v for _, v in self.pairs]
        if len(set(us)) != len(us) or len(set(vs)) != len(vs):
            return False
        if any(p not in G.weight for p in self.pairs):
            return False
        return sum(G.weight[p] for p in self.pairs) == self.weight


def assign(rows: Sequence[int], adj: Adjacency, v_size: int) -> list[tuple[int, int]] | None:
    """Max-weight assignment of every vertex in ``rows`` to distinct V-vertices.

    ``adj[u]`` lists the usable ``(v, weight)`` pairs of u. Returns the
    matched pairs, or None when no matching saturates ``rows``.
    """
    k = len(rows)
    if k == 0:
        return []
    if k > v_size:
        return None
    inf = math.inf
    # 1-based rows/cols; column 0 is the virtual root of each search
    pot_u = [0] * (k + 1)
    pot_v = [0] * (v_size + 1)
    owner = [0] * (v_size + 1)
    way = [0] * (v_size + 1)
    nbrs = [()] + [tuple((v + 1, -w) for v, w in adj[u]) for u in rows]
    for r in range(1, k + 1):
        owner[0] = r
        j0 = 0
        minv = [inf] * (v_size + 1)
        tree = [0]  # columns already in the alternating tree
        free = list(range(1, v_size + 1))
        in_tree = [False] * (v_size + 1)
        in_tree[0] = True
        while True:
            i0 = owner[j0]
            base = pot_u[i0]
            for col, c in nbrs[i0]:
                if not in_tree[col]:
                    cur = c - base - pot_v[col]
                    if cur < minv[col]:
                        minv[col] = cur
                        way[col] = j0
            delta = inf
            j1 = -1
            for j in free:
                if minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            if j1 < 0:
                return None
            for j in tree:
                pot_u[owner[j]] += delta
                pot_v[j] -= delta
            for j in free:
                minv[j] -= delta
            j0 = j1
            if owner[j0] == 0:
                break
            tree.append(j0)
            in_tree[j0] = True
            free.remove(j0)
        while j0:
            j1 = way[j0]
            owner[j0] = owner[j1]
            j0 = j1
    return [(rows[owner[j] - 1], j - 1) for j in range(1, v_size + 1) if owner[j]]


def _check_u_subset(G: WeightedBipartiteGraph, R: Iterable[int], name: str) -> list[int]:
    rows = sorted(set(R))
    if rows and not (0 <= rows[0] and rows[-1] < G.u_size):
        raise InputFormatError(f"{name} is not a subset of U")
    return rows


def max_weight_matching_saturating(
    G: WeightedBipartiteGraph, R: Iterable[int]
) -> tuple[int | float, Matching | None]:
    """Best matching whose matched U-vertices are exactly R; ``(NEG_INF, None)`` if none exists."""
    rows = _check_u_subset(G, R, "R")
    pairs = assign(rows, G.adjacency, G.v_size)
    if pairs is None:
        return NEG_INF, None
    w = G.weight
    value = sum(w[p] for p in pairs)
    return value, Matching(frozenset(pairs), value)


def max_weight_matching_within(
    G: WeightedBipartiteGraph, allowed_u: Iterable[int], allowed_v: Iterable[int]
) -> tuple[int, Matching]:
    """Best matching using only vertices in ``allowed_u ∪ allowed_v``.

    Padded with one weight-0 dummy V-vertex per allowed U-vertex and then
    solved as a saturating problem; sound only for nonnegative weights.
    """
    if G.has_negative_weight:
        raise NegativeWeightError("the within variant needs nonnegative weights")
    rows = _check_u_subset(G, allowed_u, "allowed_u")
    cols = set(allowed_v)
    if cols and not (0 <= min(cols) and max(cols) < G.v_size):
        raise InputFormatError("allowed_v is not a subset of V")
    dummies = tuple((G.v_size + t, 0) for t in range(len(rows)))
    adj = [tuple(e for e in G.adjacency[u] if e[0] in cols) + dummies for u in rows]
    pairs = assign(range(len(rows)), adj, G.v_size + len(rows))
    assert pairs is not None  # dummies always saturate
    real = frozenset((rows[r], v) for r, v in pairs if v < G.v_size)
    value = sum(G.weight[p] for p in real)
    return value, Matching(real, value)


def enumerate_matchings_bruteforce(
    G: WeightedBipartiteGraph, cap: int | None = None
) -> list[Matching]:
    """Every edge subset of G that is a matching, with its weight.

    Plain include/exclude backtracking over the sorted edge list; shares
    nothing with the assignment solver.
    """
    cap = caps().matching_edges if cap is None else cap
    if len(G.edges) > cap:
        raise SizeError(f"|E|={len(G.edges)} exceeds the brute-force cap {cap}")
    edges = sorted(G.edges)
    out: list[Matching] = []

    def walk(k: int, used_u: int, used_v: int, chosen: list[tuple[int, int]], weight: int) -> None:
        if k == len(edges):
            out.append(Matching(frozenset(chosen), weight))
            return
        walk(k + 1, used_u, used_v, chosen, weight)
        u, v, w = edges[k]
        if not (used_u >> u & 1 or used_v >> v & 1):
            chosen.append((u, v))
            walk(k + 1, used_u | 1 << u, used_v | 1 << v, chosen, weight + w)
            chosen.pop()

    walk(0, 0, 0, [], 0)
    return out
