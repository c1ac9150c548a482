from __future__ import annotations

import random
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from k6minor.errors import HypothesisViolation
from k6minor.generators import complete, cube, cycle, dodecahedron, heawood, icosahedron, petersen
from k6minor.graph import Graph
from k6minor.planarity import (
    PlaneEmbedding,
    check_nonplanar_girth6,
    check_order_bound,
    check_two_valent_bound,
    check_witness,
    discharge,
    initial_charges,
    planarity,
)

from oracles import to_nx


def coronene() -> Graph:
    """Central hexagon a0..a5, spokes to b0..b5, outer paths b_i c_i d_i b_{i+1}."""
    a, b = list(range(6)), list(range(6, 12))
    edges = [(a[i], a[(i + 1) % 6]) for i in range(6)] + [(a[i], b[i]) for i in range(6)]
    for i in range(6):
        c, d = 12 + 2 * i, 13 + 2 * i
        edges += [(b[i], c), (c, d), (d, b[(i + 1) % 6])]
    return Graph.from_edges(24, edges)


def subdivided(g: Graph) -> Graph:
    edges = []
    for i, (u, v) in enumerate(g.edges()):
        w = g.n + i
        edges += [(u, w), (w, v)]
    return Graph.from_edges(g.n + g.m, edges)


def random_plane_graph(n: int, seed: int) -> Graph:
    rng = random.Random(seed)
    h = nx.random_labeled_tree(n, seed=seed) if n > 1 else nx.empty_graph(1)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(pairs)
    for u, v in pairs[: 3 * n]:
        if h.has_edge(u, v):
            continue
        h.add_edge(u, v)
        if not nx.check_planarity(h)[0]:
            h.remove_edge(u, v)
    return Graph.from_edges(n, h.edges())


def test_embeddings_and_witnesses():
    e = planarity(complete(4))
    assert isinstance(e, PlaneEmbedding) and sorted(map(len, e.faces)) == [3, 3, 3, 3]
    w = planarity(complete(5))
    assert w.kind == "K5" and len(w.edges) == 10 and check_witness(complete(5), w)
    w = planarity(petersen())
    assert w.kind == "K33" and check_witness(petersen(), w)


def test_two_valent_bound():
    assert len(check_two_valent_bound(cycle(6)).special) == 6
    assert len(check_two_valent_bound(coronene()).special) == 12
    sc = subdivided(cube())
    r = check_two_valent_bound(sc)
    assert len(r.special) == 12 and all(q.holds for q in r.chain)


def test_nonplanar_girth6():
    assert check_nonplanar_girth6(heawood()).witness.kind in {"K5", "K33"}
    with pytest.raises(HypothesisViolation):
        check_nonplanar_girth6(petersen())
    with pytest.raises(HypothesisViolation):
        check_nonplanar_girth6(complete(6))


def test_order_bound():
    with pytest.raises(HypothesisViolation):
        check_order_bound(icosahedron())
    r = check_order_bound(dodecahedron())
    assert r.vertices == 20 and all(q.holds for q in r.chain)


def test_two_valent_vertex_charge():
    # theta graph: 0 and 3 are 3-valent, the rest 2-valent
    g = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (0, 4), (4, 3), (0, 5), (5, 6), (6, 3)])
    e = planarity(g)
    v = next(x for x in e.outer_face if g.degree(x) == 2)
    led = discharge(e, enforce=False)
    assert led.vertex_charge[v] == 4
    sent = sorted(a for x, _, a in led.transfers if x == v)
    assert sent == [Fraction(4, 5), Fraction(16, 5)]
    assert led.vertex_final[v] == 0


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 40), st.integers(0, 10**6))
def test_total_charge_is_one_third(n, seed):
    g = random_plane_graph(n, seed)
    e = planarity(g)
    vch, fch = initial_charges(e)
    assert sum(vch) + sum(fch) == Fraction(1, 3)
    assert discharge(e, enforce=False).total_final == Fraction(1, 3)


@settings(max_examples=80, deadline=None)
@given(st.integers(4, 11), st.floats(0.2, 0.8), st.integers(0, 10**6))
def test_planarity_agrees_with_networkx(n, p, seed):
    rng = random.Random(seed)
    g = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])
    out = planarity(g)
    assert isinstance(out, PlaneEmbedding) == nx.check_planarity(to_nx(g))[0]
    if not isinstance(out, PlaneEmbedding):
        assert check_witness(g, out)
