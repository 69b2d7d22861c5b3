"""Acceptance criteria, one test per criterion.

A summary line per criterion is printed at the end of the pytest run
(see ``conftest.pytest_terminal_summary``). Every check is exact.
"""

from __future__ import annotations

import itertools
import json
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from latmin.constructions import ConstructionVariant, build_prop2, build_table
from latmin.generate import (
    all_labeled_posets,
    all_weighted_graphs,
    random_bipartite,
    random_poset_corpus,
    random_weighted_graph,
)
from latmin.matching import (
    NEG_INF,
    enumerate_matchings_bruteforce,
    max_weight_matching_saturating,
    max_weight_matching_within,
)
from latmin.partition import (
    bis_to_poset,
    count_bis_bruteforce,
    estimate_ideal_count,
    partition_sum_dyadic,
)
from latmin.poset import (
    enumerate_ideals,
    from_mask,
    is_union_intersection_closed,
    poset_from_relations,
    verify_birkhoff_roundtrip,
)
from latmin.verify import (
    check_min_condition,
    is_generalized_matroid,
    is_mnat_concave,
    is_submodular,
    maximizers,
    minimizers,
)
from strategies import S

CORPUS_SEED = 20190701
RANDOM_POSETS = 500
MAX_N = 8
VARIANTS = list(ConstructionVariant)


@pytest.fixture(scope="module")
def corpus():
    """500 seeded random posets with n ≤ 8 plus every labeled poset with n ≤ 4,
    each with its ideal family and all four tables."""
    posets = random_poset_corpus(RANDOM_POSETS, MAX_N, CORPUS_SEED)
    posets += [P for n in range(5) for P in all_labeled_posets(n)]
    assert len(posets) == RANDOM_POSETS + 1 + 1 + 3 + 19 + 219
    entries = []
    for P in posets:
        tables = {v.value: build_table(P, v) for v in VARIANTS}
        tables["prop2"] = build_prop2(P)
        entries.append((P, enumerate_ideals(P), tables))
    return entries


@pytest.mark.criterion(1, "three-element worked example (exact, < 1 s)")
def test_c1_worked_example():
    start = time.perf_counter()
    P = poset_from_relations(3, [(1, 3), (2, 3)], one_indexed=True)
    f = build_prop2(P)
    assert (f(S(3)), f(S(1, 2)), f(S(1, 3)), f(S(2, 3))) == (2, 0, 1, 1)
    assert is_submodular(f) is None
    w = is_mnat_concave(f)
    assert w is not None
    assert (w.X, w.Y, w.i) == (S(3), S(1, 2), 2)
    assert set(w.tried_j) == {0, 1}
    # both swaps fail: f(X)+f(Y) = 2 > f(X-i+j)+f(Y+i-j) = 0 + 1
    assert w.lhs == 2 and all(r < w.lhs for r in w.rhs_j)
    assert w.reproduces(f)
    assert time.perf_counter() - start < 1.0


@pytest.mark.criterion(2, "f0/f1/f2 are M♮-concave, satisfy cond:min, and f1 = f2 on the corpus")
def test_c2_constructions(corpus):
    for P, _, tables in corpus:
        for v in VARIANTS:
            f = tables[v.value]
            assert is_mnat_concave(f) is None, (P, v)
            assert check_min_condition(f, P), (P, v)
        assert tables["f1"] == tables["f2"], P


@pytest.mark.criterion(3, "minimizers(table) = I(P) for f0, f1, f2, prop2")
def test_c3_representation(corpus):
    for P, ideals, tables in corpus:
        for name, f in tables.items():
            assert minimizers(f) == ideals, (P, name)


@pytest.mark.criterion(4, "minimizers lattice-closed; maximizers of M♮ tables are generalized matroids")
def test_c4_structure(corpus):
    checked_sub = checked_mnat = 0
    for P, _, tables in corpus:
        for name, f in tables.items():
            if is_submodular(f) is None:
                assert is_union_intersection_closed(minimizers(f)), (P, name)
                checked_sub += 1
            if is_mnat_concave(f) is None:
                assert is_generalized_matroid(maximizers(f)) is None, (P, name)
                checked_mnat += 1
    # every table is submodular; all but the non-M♮ prop2 tables are M♮
    assert checked_sub == 4 * len(corpus)
    assert checked_mnat >= 3 * len(corpus)


@pytest.mark.criterion(5, "|Σ 2^-(n+2)f0 - |I(P)|| ≤ 1/4 exactly; estimate = |I(P)|; worked-example sum = 163/32")
def test_c5_partition_bound(corpus):
    quarter = Fraction(1, 4)
    for P, ideals, tables in corpus:
        s = partition_sum_dyadic(tables["f0"]).value
        assert abs(s - len(ideals)) <= quarter, P
        assert estimate_ideal_count(tables["f0"]) == len(ideals), P
    P = poset_from_relations(3, [(1, 3), (2, 3)], one_indexed=True)
    assert partition_sum_dyadic(build_table(P, ConstructionVariant.F0)).value == Fraction(163, 32)


def _oracle_maxima(G):
    """Constrained maxima from the brute-force matching list, keyed by bitmasks."""
    a, b = G.u_size, G.v_size
    exact: dict[int, int | float] = {}
    best = [[NEG_INF] * (1 << b) for _ in range(1 << a)]
    for M in enumerate_matchings_bruteforce(G):
        mu = sum(1 << u for u in M.matched_u)
        mv = sum(1 << v for v in M.matched_v)
        exact[mu] = max(exact.get(mu, NEG_INF), M.weight)
        best[mu][mv] = max(best[mu][mv], M.weight)
    # within[U][V] = max over matchings with matched_u ⊆ U and matched_v ⊆ V
    for k in range(a):
        for U in range(1 << a):
            if U >> k & 1:
                row, sub = best[U], best[U ^ 1 << k]
                for V in range(1 << b):
                    if sub[V] > row[V]:
                        row[V] = sub[V]
    for k in range(b):
        for row in best:
            for V in range(1 << b):
                if V >> k & 1 and row[V ^ 1 << k] > row[V]:
                    row[V] = row[V ^ 1 << k]
    return exact, best


def _solver_agrees(G) -> bool:
    exact, within = _oracle_maxima(G)
    us = [from_mask(U) for U in range(1 << G.u_size)]
    vs = [from_mask(V) for V in range(1 << G.v_size)]
    for U, Us in enumerate(us):
        value, M = max_weight_matching_saturating(G, Us)
        if value != exact.get(U, NEG_INF):
            return False
        if M is not None and not (M.is_valid_in(G) and M.matched_u == Us):
            return False
        for V, Vs in enumerate(vs):
            value, M = max_weight_matching_within(G, Us, Vs)
            if value != within[U][V] or not M.is_valid_in(G):
                return False
            if not (M.matched_u <= Us and M.matched_v <= Vs):
                return False
    return True


@pytest.mark.slow
@pytest.mark.criterion(6, "matching solvers = brute force (exhaustive sides ≤ 3, w ∈ {0,1,2}; 1000 random sides ≤ 4)")
def test_c6_matching_oracle():
    graphs = 0
    for a, b in itertools.product(range(4), repeat=2):
        for G in all_weighted_graphs(a, b, range(3)):
            assert _solver_agrees(G), G
            graphs += 1
    assert graphs == sum(4 ** (a * b) for a in range(4) for b in range(4))
    rng = random.Random(CORPUS_SEED)
    for _ in range(1000):
        G = random_weighted_graph(rng, 4, 3, edge_prob=rng.random())
        assert _solver_agrees(G), G


@pytest.mark.criterion(7, "Birkhoff round-trip on the corpus")
def test_c7_birkhoff(corpus):
    for P, _, _ in corpus:
        assert verify_birkhoff_roundtrip(P), P


@pytest.mark.criterion(8, "#BIS count = ideal count of the height-2 poset (200 graphs, sides ≤ 6)")
def test_c8_bis_bridge():
    rng = random.Random(CORPUS_SEED)
    for _ in range(200):
        G = random_bipartite(rng, 6)
        assert count_bis_bruteforce(G) == len(enumerate_ideals(bis_to_poset(G))), G


def _cli(*argv: str) -> subprocess.CompletedProcess:
    return subprocess.run([sys.executable, "-m", "latmin", *argv], capture_output=True)


@pytest.mark.criterion(9, "CLI output byte-identical across runs; worked-example verify exits 1 with witness")
def test_c9_cli_determinism(tmp_path):
    wedge = tmp_path / "wedge.json"
    wedge.write_text(json.dumps({"n": 3, "relations": [[1, 3], [2, 3]]}))
    k22 = tmp_path / "k22.json"
    k22.write_text(json.dumps({"a": 2, "b": 2, "edges": [[1, 1], [1, 2], [2, 1], [2, 2]]}))
    gen = tmp_path / "gen.json"
    assert _cli("gen", "--kind", "random-dag", "--n", "6", "--seed", "42", "--edge-prob", "0.3", "--out", str(gen)).returncode == 0
    tables = {}
    for variant in ("f0", "prop2"):
        tables[variant] = tmp_path / f"{variant}.json"
        assert _cli("build", str(wedge), "--variant", variant, "--out", str(tables[variant])).returncode == 0

    commands = [
        ["gen", "--kind", "random-dag", "--n", "6", "--seed", "42", "--edge-prob", "0.3"],
        ["gen", "--kind", "chain", "--n", "3"],
        ["ideals", str(wedge), "--list"],
        ["ideals", str(gen), "--json", "--list"],
        ["build", str(gen), "--variant", "f1"],
        ["build", str(wedge), "--variant", "prop2"],
        ["verify", str(tables["prop2"]), str(wedge)],
        ["verify", str(tables["prop2"]), str(wedge), "--json"],
        ["verify", str(tables["f0"]), str(wedge)],
        ["count", str(wedge), "--via", "partition"],
        ["count", str(k22), "--via", "bis"],
        ["count", str(gen), "--via", "ideals", "--json"],
    ]
    for argv in commands:
        first, second = _cli(*argv), _cli(*argv)
        assert first.returncode == second.returncode, argv
        assert first.stdout == second.stdout and first.stdout, argv

    proc = _cli("verify", str(tables["prop2"]), str(wedge))
    assert proc.returncode == 1
    assert b"mnat-concave: FAIL  witness X={3} Y={1,2} i=3" in proc.stdout
