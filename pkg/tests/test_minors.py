from __future__ import annotations

import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from k6minor.errors import HypothesisViolation, NotAJump
from k6minor.generators import (
    complete,
    complete_bipartite,
    cube,
    dodecahedron,
    heawood,
    line_graph_k33,
    octahedron,
    petersen,
    random_graph,
    v8,
)
from k6minor.graph import Graph, add_edges
from k6minor.minors import (
    IsV8,
    MinorModel,
    NotFound,
    Timeout,
    find_minor,
    find_subdivision,
    k5_from_cross,
    k5_from_jump,
    k5_from_nonplanar,
    make_model,
    robertson_classify,
    verify_classification,
    verify_model,
    verify_subdivision,
    wagner_step,
)
from k6minor.planarity import planarity
from k6minor.society import Cross

import oracles

ORACLE = oracles.K5Oracle()


def test_verify_model():
    k6 = complete(6)
    assert verify_model(k6, make_model(k6, "k6", [{i} for i in range(6)]))
    p = petersen()
    spokes = [{i, i + 5} for i in range(5)]
    # Petersen here: outer 0..4, inner 5..9, spoke i -- i+5
    assert verify_model(p, make_model(p, "k5", spokes))
    bad = MinorModel("k5", complete(5), tuple(frozenset(s) for s in [{0, 1}, {1, 2}, {3}, {4}, {5}]), ())
    assert not verify_model(p, bad)


def test_find_minor_examples():
    r = find_minor(complete(6), "k6")
    assert isinstance(r, MinorModel) and sorted(map(len, r.branch_sets)) == [1] * 6
    assert verify_model(petersen(), find_minor(petersen(), "k5"))
    assert isinstance(find_minor(petersen(), "k6"), NotFound)
    assert isinstance(find_minor(dodecahedron(), "k5"), NotFound)
    assert verify_model(heawood(), find_minor(heawood(), "k5"))


def test_budget_gives_timeout():
    assert isinstance(find_minor(petersen(), "k6", budget=5, heuristic=False), Timeout)


def test_model_json_round_trip():
    m = find_minor(petersen(), "k5")
    back = MinorModel.from_dict(json.loads(m.to_json(petersen())))
    assert back == m and verify_model(petersen(), back)


def test_subdivisions():
    s = find_subdivision(v8(), "v8")
    assert s is not None and verify_subdivision(v8(), s)
    assert verify_subdivision(cube(), find_subdivision(cube(), "k4"))
    tv8 = find_subdivision(petersen(), "v8")
    assert (tv8 is not None) == oracles.has_subdivision(petersen(), v8())
    assert find_subdivision(petersen(), "k5") is None


@pytest.mark.parametrize("g", [complete(5), octahedron(), complete_bipartite(3, 3), cube()], ids=str)
def test_subdivision_matches_edge_subset_oracle(g):
    for target, tg in (("k4", complete(4)), ("k33", complete_bipartite(3, 3))):
        found = find_subdivision(g, target)
        assert (found is not None) == oracles.has_subdivision(g, tg)
        if found is not None:
            assert verify_subdivision(g, found)


def test_wagner_step():
    assert isinstance(wagner_step(v8()), IsV8)
    plus = add_edges(v8(), [(0, 2)])
    r = wagner_step(plus)
    assert isinstance(r, MinorModel) and verify_model(plus, r)
    with pytest.raises(HypothesisViolation):
        wagner_step(complete(6))


def test_robertson_cases():
    for g, case in ((complete(5), "small"), (octahedron(), "planar"), (line_graph_k33(), "lineK33")):
        r = robertson_classify(g)
        assert r.case == case and verify_classification(g, r)


def test_k5_from_nonplanar():
    assert verify_model(petersen(), k5_from_nonplanar(petersen()))
    with pytest.raises(HypothesisViolation):
        k5_from_nonplanar(dodecahedron())
    # K3,3 - e keeps girth 4, so K3,3 is not nearly 5-long
    with pytest.raises(HypothesisViolation):
        k5_from_nonplanar(complete_bipartite(3, 3))
    assert not ORACLE(complete_bipartite(3, 3))


def test_k5_from_cross_cube():
    e = planarity(cube())
    face = e.faces[0]
    r = k5_from_cross(e, 0, Cross((face[0], "a", face[2]), (face[1], "b", face[3])))
    assert verify_model(r.graph, r.model) and r.meets_host()
    fifth = [b for b in r.model.branch_sets if not b & set(face)]
    assert len(fifth) == 1 and len(fifth[0]) == 4
    with pytest.raises(HypothesisViolation):
        k5_from_cross(planarity(complete(4)), 0, Cross((0, "a", 1), (2, "b", 3)))


def test_k5_from_jump():
    e = planarity(dodecahedron())
    a, b = next((a, b) for a, b in itertools.combinations(range(20), 2) if not e.cofacial(a, b))
    r = k5_from_jump(e, [a, "p", "q", b])
    assert verify_model(r.graph, r.model) and r.meets_host()
    ec = planarity(cube())
    f = ec.faces[0]
    with pytest.raises(NotAJump):
        k5_from_jump(ec, [f[0], "x", f[2]])


@settings(max_examples=150, deadline=None)
@given(st.integers(5, 8), st.floats(0.3, 0.9), st.integers(0, 10**6))
def test_k5_search_matches_oracle(n, p, seed):
    g = random_graph(n, p, seed)
    r = find_minor(g, "k5")
    assert isinstance(r, MinorModel) == ORACLE(g)
    if isinstance(r, MinorModel):
        assert verify_model(g, r)


@settings(max_examples=25, deadline=None)
@given(st.integers(5, 7), st.floats(0.4, 0.9), st.integers(0, 10**6))
def test_partition_oracles_agree(n, p, seed):
    g = random_graph(n, p, seed)
    assert oracles.k5_partition_oracle(g) == ORACLE(g)
