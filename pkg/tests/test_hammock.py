from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from k6minor import canon
from k6minor.errors import HypothesisViolation, NoFatHammock
from k6minor.generators import complete, cycle, random_graph
from k6minor.graph import Graph, delete_vertices, vertex_connectivity
from k6minor.hammock import (
    Hammock,
    augment,
    boundary,
    cap,
    extreme_3_components,
    minimal_fat_hammock,
    minimal_fat_hammocks,
    two_disjoint_minimal_fat,
)

import oracles


def glue(pieces: list[list[int]], n: int) -> Graph:
    """Union of complete graphs on the given vertex lists."""
    return Graph.from_edges(n, [(p[i], p[j]) for p in pieces for i in range(len(p)) for j in range(i + 1, len(p))])


TWO_K5 = glue([[0, 1, 2, 3, 4], [0, 1, 2, 5, 6]], 7)
THREE_K5 = glue([[0, 1, 2, 3, 4], [0, 1, 2, 5, 6], [0, 1, 2, 7, 8]], 9)


def test_boundary():
    g = cycle(7)
    assert boundary(g, range(7)) == frozenset()
    assert boundary(g, {3}) == {3}
    # two hexagons sharing the edge 0-1
    two_hex = Graph.from_edges(10, [(i, (i + 1) % 6) for i in range(6)] + [(0, 6), (6, 7), (7, 8), (8, 9), (9, 1)])
    assert boundary(two_hex, range(6)) == {0, 1}


def test_minimal_fat_two_k5():
    h = minimal_fat_hammock(TWO_K5, 3)
    assert h.vertices in ({0, 1, 2, 3, 4}, {0, 1, 2, 5, 6})
    assert {x.vertices for x in minimal_fat_hammocks(TWO_K5, 3)} == oracles.minimal_fat_hammocks(TWO_K5, 3)


def test_unique_nontrivial_cut_gives_smaller_side():
    g = glue([[0, 1, 2, 3, 4], [0, 1, 2, 5, 6, 7]], 8)
    assert minimal_fat_hammock(g, 3).vertices == {0, 1, 2, 3, 4}


def test_no_fat_hammock_in_k6():
    with pytest.raises(NoFatHammock):
        minimal_fat_hammock(complete(6), 5)
    with pytest.raises((NoFatHammock, HypothesisViolation)):
        two_disjoint_minimal_fat(complete(6), 5)


def test_two_disjoint():
    a, b = two_disjoint_minimal_fat(TWO_K5, 3)
    assert {a.vertices, b.vertices} == {frozenset({0, 1, 2, 3, 4}), frozenset({0, 1, 2, 5, 6})}
    petals = {frozenset({0, 1, 2, 3, 4}), frozenset({0, 1, 2, 5, 6}), frozenset({0, 1, 2, 7, 8})}
    a, b = two_disjoint_minimal_fat(THREE_K5, 3)
    assert a.vertices in petals and b.vertices in petals and a != b


def test_wrong_k_rejected():
    with pytest.raises(HypothesisViolation):
        minimal_fat_hammock(TWO_K5, 2)


def test_cap():
    c = cap(Hammock(cycle(6), frozenset({0, 1, 2, 3})))
    assert c.virtual_edge and canon.is_isomorphic(c.graph, cycle(4))
    two_k4 = glue([[0, 1, 2, 3], [0, 1, 4, 5]], 6)
    c = cap(Hammock(two_k4, frozenset({0, 1, 2, 3})))
    assert not c.virtual_edge and c.graph == complete(4)
    theta = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (0, 4), (4, 3), (0, 5), (5, 6), (6, 3)])
    c = cap(Hammock(theta, frozenset({0, 1, 2, 3, 4})))
    assert c.virtual_edge
    assert sorted(c.graph.degree(v) for v in range(c.graph.n)) == [2, 2, 2, 3, 3]


def test_augment():
    h = Hammock(TWO_K5, frozenset({0, 1, 2, 3, 4}))
    a = augment(h)
    assert a.degree(a.n - 1) == 3
    assert delete_vertices(a, [a.n - 1])[0] == h.graph()
    assert vertex_connectivity(a) >= 3


def test_extreme_components():
    comps = extreme_3_components(glue([[0, 1, 2, 3], [0, 1, 4, 5]], 6))
    assert len(comps) == 2 and all(not c.virtual_edge and c.graph == complete(4) for c in comps)
    k4_minus = Graph.from_edges(6, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (0, 5), (1, 4), (1, 5), (4, 5)])
    comps = extreme_3_components(k4_minus)
    assert len(comps) == 2 and all(c.virtual_edge and c.graph == complete(4) for c in comps)
    chain = glue([[0, 1, 2, 3], [2, 3, 4, 5], [4, 5, 6, 7]], 8)
    chain = Graph.from_edges(8, [e for e in chain.edges() if e not in {(2, 3), (4, 5)}])
    assert vertex_connectivity(chain) == 2
    sides = sorted(sorted(c.order) for c in extreme_3_components(chain))
    assert sides == [[0, 1, 2, 3], [4, 5, 6, 7]]


@st.composite
def three_connected_hosts(draw):
    seed = draw(st.integers(0, 10**6))
    rng = random.Random(seed)
    while True:
        n = rng.randint(6, 9)
        g = random_graph(n, rng.uniform(0.4, 0.7), rng.randrange(1 << 30))
        if g.min_degree >= 3 and vertex_connectivity(g) == 3:
            return g


@settings(max_examples=60, deadline=None)
@given(three_connected_hosts())
def test_minimal_fat_matches_enumeration(g):
    assert {h.vertices for h in minimal_fat_hammocks(g, 3)} == oracles.minimal_fat_hammocks(g, 3)
