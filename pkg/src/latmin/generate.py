"""Seeded generators for posets and bipartite graphs."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from latmin.matching import WeightedBipartiteGraph
from latmin.partition import BipartiteGraphPlain
from latmin.poset import Poset, poset_from_relations


def random_dag_poset(n: int, edge_prob: float, rng: random.Random) -> Poset:
    """Draw each pair ``j < i`` independently as ``j ≺ i``, then close transitively."""
    if not 0.0 <= edge_prob <= 1.0:
        raise ValueError(f"edge_prob must lie in [0, 1], got {edge_prob}")
    pairs = [(j, i) for i in range(n) for j in range(i) if rng.random() < edge_prob]
    return poset_from_relations(n, pairs)


def random_poset_corpus(count: int, max_n: int, seed: int) -> list[Poset]:
    """``count`` posets with n uniform in ``0..max_n`` and edge probability uniform in [0, 1]."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(0, max_n)
        p = rng.random()
        out.append(random_dag_poset(n, p, rng))
    return out


def all_labeled_posets(n: int) -> Iterator[Poset]:
    """Every partial order on ``0..n-1`` (labeled, not up to isomorphism)."""
    pairs = [(j, i) for j in range(n) for i in range(n) if j != i]
    for bits in range(1 << len(pairs)):
        rel = {p for k, p in enumerate(pairs) if bits >> k & 1}
        if any((i, j) in rel for j, i in rel):
            continue
        if any((j, k) not in rel for j, i in rel for i2, k in rel if i2 == i):
            continue
        yield poset_from_relations(n, rel)


def random_weighted_graph(
    rng: random.Random, max_side: int, max_weight: int, edge_prob: float = 0.6
) -> WeightedBipartiteGraph:
    a, b = rng.randint(0, max_side), rng.randint(0, max_side)
    edges = [
        (u, v, rng.randint(0, max_weight))
        for u in range(a)
        for v in range(b)
        if rng.random() < edge_prob
    ]
    return WeightedBipartiteGraph(a, b, frozenset(edges))


def all_weighted_graphs(u_size: int, v_size: int, weights: range) -> Iterator[WeightedBipartiteGraph]:
    """Each of the ``u_size * v_size`` slots is absent or carries one of ``weights``."""
    slots = [(u, v) for u in range(u_size) for v in range(v_size)]
    choices = [None, *weights]
    for pick in itertools.product(choices, repeat=len(slots)):
        edges = frozenset((u, v, w) for (u, v), w in zip(slots, pick) if w is not None)
        yield WeightedBipartiteGraph(u_size, v_size, edges)


def random_bipartite(rng: random.Random, max_side: int, edge_prob: float | None = None) -> BipartiteGraphPlain:
    a, b = rng.randint(0, max_side), rng.randint(0, max_side)
    p = rng.random() if edge_prob is None else edge_prob
    edges = [(x, y) for x in range(a) for y in range(b) if rng.random() < p]
    return BipartiteGraphPlain(a, b, frozenset(edges))
