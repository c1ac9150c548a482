"""Acceptance criteria 1-11. Each test prints one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` (the lines are also
printed without ``-s``; they bypass output capture).
"""

from __future__ import annotations

import itertools
import json
import random
import time
from fractions import Fraction

import pytest

from k6minor.census import (
    all_graphs,
    census_cross,
    census_dis_girth6,
    census_fat2,
    census_robertson,
    census_sizeofnearlylong,
)
from k6minor.errors import InternalAssertionFailed
from k6minor.generators import (
    cube,
    dodecahedron,
    hoffman_singleton,
    pg_incidence,
    random_clustered_high_girth,
    random_graph,
    random_high_girth,
)
from k6minor.minors import MinorModel, find_minor, k5_from_cross, k5_from_jump, verify_model
from k6minor.pipeline import k6_girth5, k6_girth6
from k6minor.planarity import initial_charges, planarity
from k6minor.society import Cross
from k6minor.truncation import internally4_truncation, postcondition_report, truncation_violations

import oracles
from test_planarity import random_plane_graph


@pytest.fixture
def report(capsys):
    def emit(number: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\nCRITERION {number:2d}: {'PASS' if ok else 'FAIL'} - {detail}")
        assert ok, detail

    return emit


def test_criterion_01_charge_identity(report):
    t = time.perf_counter()
    bad = 0
    for seed in range(200):
        rng = random.Random(seed)
        g = random_plane_graph(rng.randint(2, 40), seed)
        vch, fch = initial_charges(planarity(g))
        bad += sum(vch) + sum(fch) != Fraction(1, 3)
    took = time.perf_counter() - t
    report(1, bad == 0 and took < 30, f"200 plane graphs, {bad} with total != 1/3, {took:.1f}s")


def test_criterion_02_two_valent_census(report):
    t = time.perf_counter()
    rep = census_dis_girth6(12)
    took = time.perf_counter() - t
    tight = 6 in rep.stats["tight_orders"]
    report(2, rep.ok and tight and took < 600,
           f"{rep.checked} blocks n<=12, {len(rep.violations)} violations, C6 tight={tight}, {took:.1f}s")


def test_criterion_03_order_bound_census(report):
    t = time.perf_counter()
    rep = census_sizeofnearlylong(10)
    took = time.perf_counter() - t
    report(3, rep.ok and took < 900,
           f"{rep.checked} candidates n<=10, {rep.stats['planar_nearly_long']} planar nearly 5-long, "
           f"{len(rep.violations)} qualifying, {took:.1f}s")


def test_criterion_04_k5_oracle_equivalence(report):
    t = time.perf_counter()
    oracle = oracles.K5Oracle()
    disagree, count = [], 0
    for n in range(1, 9):
        for g in all_graphs(n):
            count += 1
            if isinstance(find_minor(g, "k5"), MinorModel) != oracle(g):
                disagree.append(g.edges())
    rng = random.Random(2024)
    for _ in range(500):
        g = random_graph(rng.randint(5, 12), rng.uniform(0.25, 0.6), rng.randrange(1 << 30))
        count += 1
        r = find_minor(g, "k5")
        if isinstance(r, MinorModel) != oracle(g) or (isinstance(r, MinorModel) and not verify_model(g, r)):
            disagree.append(g.edges())
    took = time.perf_counter() - t
    report(4, not disagree and took < 1200, f"{count} graphs, {len(disagree)} disagreements, {took:.1f}s")


def test_criterion_05_fat_hammock_augmentation(report):
    rep = census_fat2(8, samples=500, seed=5)
    kinds = {}
    for v in rep.violations:
        kinds[v["lemma"]] = kinds.get(v["lemma"], 0) + 1
    example = rep.violations[0] if rep.violations else None
    report(5, rep.ok,
           f"{rep.stats['hosts']} hosts, {rep.stats.get('hammocks', 0)} minimal fat 3-hammocks, "
           f"violations {kinds or 0}" + (f", e.g. {json.dumps(example)}" if example else ""))


def test_criterion_06_truncation_contract(report):
    bad = []
    for i in range(300):
        rng = random.Random(i)
        if i % 3 == 2:
            g = random_clustered_high_girth(rng.randint(28, 40), 5, i)
        else:
            # no C3/C4-free graph on 11 vertices has 17 edges, so skip that order
            g = random_high_girth(rng.choice([10, *range(12, 41)]), 5, i)
        if g.min_degree < 3:
            continue
        t = internally4_truncation(g, 5)
        post = postcondition_report(t)
        if not all(post.values()) or truncation_violations(t):
            bad.append((i, post, truncation_violations(t)))
    report(6, not bad, f"300 graphs (delta>=3, girth>=5), {len(bad)} violations")


def test_criterion_07_cross_trichotomy(report):
    rep = census_cross(8)
    report(7, rep.ok and rep.checked >= 10_000,
           f"{rep.checked} societies, outcomes {rep.stats['outcomes']}, {len(rep.violations)} violations")


def test_criterion_08_robertson_totality(report):
    rep = census_robertson(8)
    example = rep.violations[0]["edges"] if rep.violations else None
    report(8, rep.ok,
           f"{rep.checked} internally 4-connected V8-free graphs, cases {rep.stats['cases']}, "
           f"{len(rep.violations)} with no case" + (f", e.g. {example}" if example else ""))


def test_criterion_09_pg25_end_to_end(report):
    g = pg_incidence(5)
    t = time.perf_counter()
    r = k6_girth6(g, budget=10**7)
    took = time.perf_counter() - t
    ok = (g.n, g.m) == (62, 186) and r.model.target == "k6" and verify_model(g, r.model) and took < 600
    report(9, ok, f"PG(2,5) n={g.n} m={g.m}, K6 verified={verify_model(g, r.model)}, {took:.1f}s")


CORPUS = [
    ("girth6", "PG(2,5)", lambda: pg_incidence(5)),
    ("girth6", "PG(2,7)", lambda: pg_incidence(7)),
    ("girth6", "PG(2,8)", lambda: pg_incidence(8)),
    ("girth5", "Hoffman-Singleton", hoffman_singleton),
    ("girth5", "PG(2,7)", lambda: pg_incidence(7)),
    ("girth5", "PG(2,8)", lambda: pg_incidence(8)),
]


def test_criterion_10_falsification_harness(report, tmp_path):
    outcomes = []
    for variant, name, make in CORPUS:
        g = make()
        run = k6_girth6 if variant == "girth6" else k6_girth5
        try:
            r = run(g)
            ok = verify_model(g, r.model)
            outcomes.append((variant, name, "verified" if ok else "bad certificate", ok))
        except InternalAssertionFailed as exc:
            dump = tmp_path / f"{variant}_{name}.json".replace("(", "").replace(")", "").replace(",", "")
            dump.write_text(json.dumps({"claim": exc.claim, "message": str(exc), "dump": exc.dump}, default=list))
            outcomes.append((variant, name, f"claim {exc.claim} failed (dump {dump})", False))
    lines = "; ".join(f"{v} {n}: {s}" for v, n, s, _ in outcomes)
    report(10, all(ok for *_, ok in outcomes), lines)


def test_criterion_11_k5_constructions(report):
    results = []
    e = planarity(cube())
    f = e.faces[0]
    t = time.perf_counter()
    m = k5_from_cross(e, 0, Cross((f[0], "a", f[2]), (f[1], "b", f[3])))
    results.append(("cube+cross", verify_model(m.graph, m.model) and m.meets_host(), time.perf_counter() - t))
    e = planarity(dodecahedron())
    f = e.faces[0]
    t = time.perf_counter()
    m = k5_from_cross(e, 0, Cross((f[0], "a", f[2]), (f[1], "b", f[3])))
    results.append(("dodecahedron+cross", verify_model(m.graph, m.model) and m.meets_host(),
                    time.perf_counter() - t))
    a, b = next((a, b) for a, b in itertools.combinations(range(20), 2) if not e.cofacial(a, b))
    t = time.perf_counter()
    m = k5_from_jump(e, [a, "p", b])
    results.append(("dodecahedron+jump", verify_model(m.graph, m.model) and m.meets_host(),
                    time.perf_counter() - t))
    ok = all(good and took < 10 for _, good, took in results)
    report(11, ok, ", ".join(f"{n}: {'ok' if good else 'bad'} {took:.2f}s" for n, good, took in results))
