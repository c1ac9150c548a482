from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from k6minor.errors import GraphParseError
from k6minor.generators import cycle, grid
from k6minor.graph import Graph, add_edges
from k6minor.society import (
    Cross,
    DiscDrawing,
    Separation,
    Society,
    find_cross,
    overlap,
    trichotomy,
    verify_cross,
    verify_outcome,
)


def test_overlap():
    om = tuple(range(6))
    assert overlap(om, (0, 3), (1, 4))
    assert not overlap(om, (0, 1), (2, 3))
    with pytest.raises(ValueError):
        overlap(om, (0, 2), (2, 4))


def test_cross_on_chords():
    s = Society(add_edges(cycle(6), [(0, 3), (1, 4)]), tuple(range(6)))
    c = find_cross(s)
    assert {(c.p1[0], c.p1[-1]), (c.p2[0], c.p2[-1])} == {(0, 3), (1, 4)}
    assert isinstance(trichotomy(s), Cross)


def test_outerplanar_has_no_cross():
    g = add_edges(cycle(7), [(0, 2), (0, 3), (3, 6), (4, 6)])
    assert find_cross(Society(g, tuple(range(7)))) is None


def test_routed_cross():
    # C8 on 0..7, chord 0-4 through 8, chord 1-5 through 9 and 10
    g = add_edges(Graph.from_edges(11, cycle(8).edges()), [(0, 8), (8, 4), (1, 9), (9, 10), (10, 5)])
    s = Society(g, tuple(range(8)))
    c = find_cross(s)
    assert c is not None and verify_cross(s, c)
    assert len(c.p1) > 2 or len(c.p2) > 2


def test_trichotomy_branches():
    assert isinstance(trichotomy(Society(grid(3, 3), (0, 1, 2, 5, 8, 7, 6, 3))), DiscDrawing)
    edges = [(0, 1), (1, 2), (2, 3)] + [(a, b) for a in range(4, 9) for b in range(a + 1, 9)] + [(1, 4), (2, 5), (3, 6)]
    r = trichotomy(Society(Graph.from_edges(9, edges), (0, 1, 2, 3)))
    assert isinstance(r, Separation) and r.separator == {1, 2, 3}


def test_text_round_trip():
    s = Society(add_edges(cycle(6), [(0, 3)]), (0, 2, 4, 5))
    assert Society.from_text(s.to_text()) == s
    with pytest.raises(GraphParseError):
        Society.from_text("0 1\n1 2\n")


@settings(max_examples=300, deadline=None)
@given(st.integers(4, 8), st.floats(0.1, 0.9), st.integers(0, 10**6))
def test_outcome_always_verifies(n, p, seed):
    rng = random.Random(seed)
    g = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])
    om = tuple(rng.sample(range(n), rng.randint(4, min(6, n))))
    s = Society(g, om)
    r = trichotomy(s)
    assert verify_outcome(s, r)
    if not isinstance(r, Cross):
        assert find_cross(s) is None
