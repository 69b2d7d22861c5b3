import math
from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given

from latmin.constructions import ConstructionVariant, SetFunctionTable, build_prop2, build_table
from latmin.errors import InfiniteValueError, NonIntegerError, SizeError
from latmin.matching import NEG_INF
from latmin.partition import (
    BipartiteGraphPlain,
    DyadicSum,
    bis_to_poset,
    count_bis_bruteforce,
    estimate_ideal_count,
    g_r,
    independent_set_to_ideal,
    partition_sum_dyadic,
)
from latmin.poset import antichain, chain, enumerate_ideals
from oracles import independent_sets
from strategies import S, posets


def test_g_r_examples(wedge_poset):
    zero = SetFunctionTable(1, (0, 1))
    assert g_r(zero, 3.7, S()) == 1.0
    assert g_r(zero, math.log(2), S(1)) == pytest.approx(0.5, rel=1e-15)
    f = build_prop2(wedge_poset)
    assert g_r(f, math.log(2), S(3)) == pytest.approx(0.25, rel=1e-15)


def test_g_r_rejects_bad_input():
    f = SetFunctionTable(1, (0, NEG_INF))
    with pytest.raises(InfiniteValueError):
        g_r(f, 1.0, S(1))
    with pytest.raises(ValueError):
        g_r(f, 0.0, S())


@given(posets(max_n=5), st.floats(0.01, 20.0))
def test_indicator_and_decay(P, r):
    f = build_table(P, ConstructionVariant.F0)
    for X, v in f.items():
        g = g_r(f, r, X)
        assert (g == 1.0) == (v == 0)
        if v > 0:
            assert g_r(f, r * 1.5, X) < g


def test_partition_sum_wedge_f0(wedge_poset):
    s = partition_sum_dyadic(build_table(wedge_poset, ConstructionVariant.F0))
    assert s.value == 5 + 3 * Fraction(1, 2**5) == Fraction(163, 32)
    assert str(s) == "163/32"
    assert float(s.value) == 5.09375


def test_partition_sum_wedge_prop2(wedge_poset):
    s = partition_sum_dyadic(build_prop2(wedge_poset))
    assert s.value == 5 + Fraction(1, 2**10) + 2 * Fraction(1, 2**5)


@pytest.mark.parametrize("n", range(0, 6))
def test_partition_sum_constant_zero(n):
    assert partition_sum_dyadic(SetFunctionTable(n, (0,) * (1 << n))).value == 2**n


def test_partition_sum_rejects_non_integers():
    with pytest.raises(NonIntegerError):
        partition_sum_dyadic(SetFunctionTable(1, (0, 0.5)))
    with pytest.raises(InfiniteValueError):
        partition_sum_dyadic(SetFunctionTable(1, (0, NEG_INF)))


def test_dyadic_sum_roundtrip():
    s = DyadicSum(Fraction(163, 32))
    assert DyadicSum.parse(str(s)) == s
    with pytest.raises(ValueError):
        DyadicSum(Fraction(1, 3))


def test_estimate_examples(wedge_poset):
    assert estimate_ideal_count(build_table(wedge_poset, ConstructionVariant.F0)) == 5
    assert estimate_ideal_count(build_table(antichain(4), ConstructionVariant.F0)) == 16
    three = chain(3)
    assert estimate_ideal_count(build_table(three, ConstructionVariant.F0)) == len(enumerate_ideals(three)) == 4


@given(posets(max_n=6))
def test_quarter_bound(P):
    count = len(enumerate_ideals(P))
    for f in [build_prop2(P), *(build_table(P, v) for v in ConstructionVariant)]:
        s = partition_sum_dyadic(f).value
        assert abs(s - count) <= Fraction(1, 4)
        assert estimate_ideal_count(f) == count


def test_bis_examples():
    edge = BipartiteGraphPlain.from_edges(1, 1, [(0, 0)])
    P = bis_to_poset(edge)
    assert P.less(0, 1)
    assert count_bis_bruteforce(edge) == len(enumerate_ideals(P)) == 3

    k22 = BipartiteGraphPlain.from_edges(2, 2, [(a, b) for a in range(2) for b in range(2)])
    assert count_bis_bruteforce(k22) == len(independent_sets(2, 2, k22.edges)) == 7
    assert len(enumerate_ideals(bis_to_poset(k22))) == 7

    for k in range(5):
        empty = BipartiteGraphPlain(k, 0, frozenset())
        assert count_bis_bruteforce(empty) == len(enumerate_ideals(bis_to_poset(empty))) == 2**k


def test_bis_cap():
    with pytest.raises(SizeError):
        count_bis_bruteforce(BipartiteGraphPlain(3, 3, frozenset()), cap=5)


@st.composite
def bipartite(draw, max_side=4):
    a, b = draw(st.integers(0, max_side)), draw(st.integers(0, max_side))
    edges = frozenset((x, y) for x in range(a) for y in range(b) if draw(st.booleans()))
    return BipartiteGraphPlain(a, b, edges)


@given(bipartite())
def test_bis_bijection(G):
    P = bis_to_poset(G)
    ideals = enumerate_ideals(P).members
    images = [independent_set_to_ideal(G, S_, T) for S_, T in independent_sets(G.a_size, G.b_size, G.edges)]
    assert len(set(images)) == len(images)
    assert set(images) == ideals
    assert count_bis_bruteforce(G) == len(ideals)
