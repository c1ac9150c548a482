"""Exhaustive small-graph censuses for the structural lemmas.

Each census returns a CensusReport; a violation is recorded with the edge
list of the offending graph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations

from . import canon
from .errors import Inconsistent, InternalAssertionFailed
from .generators import cycle, random_graph
from .graph import (
    Graph,
    add_vertex,
    bfs_distances,
    find_disconnectors,
    girth,
    is_internally_k_connected,
    vertex_connectivity,
)
from .hammock import augment, minimal_fat_hammocks
from .minors import MinorModel, Timeout, find_minor, robertson_classify, verify_classification
from .planarity import check_two_valent_bound, is_planar, qualifies_for_order_bound
from .society import Cross, Society, trichotomy, verify_cross, verify_outcome
from .truncation import is_nearly_k_long


@dataclass
class CensusReport:
    lemma: str
    n_max: int
    checked: int = 0
    violations: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {"lemma": self.lemma, "n_max": self.n_max, "checked": self.checked,
                "violations": self.violations, "stats": self.stats}


# ------------------------------------------------------------ enumeration


def _extend_by_vertex(graphs, keep=None):
    seen: dict[bytes, Graph] = {}
    for g in graphs:
        for r in range(g.n + 1):
            for nb in combinations(range(g.n), r):
                h = add_vertex(g, nb)
                if keep is not None and not keep(h):
                    continue
                c = canon.certificate(h)
                if c not in seen:
                    seen[c] = h
    return [seen[c] for c in sorted(seen)]


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """Every graph on n vertices up to isomorphism (n <= 8 is practical)."""
    if n == 0:
        return (Graph.empty(0),)
    return tuple(_extend_by_vertex(all_graphs(n - 1)))


@lru_cache(maxsize=None)
def girth5_graphs(n: int) -> tuple[Graph, ...]:
    """Graphs (possibly disconnected) on n vertices with no cycle shorter than 5."""
    if n == 0:
        return (Graph.empty(0),)
    return tuple(_extend_by_vertex(girth5_graphs(n - 1), lambda h: girth(h) >= 5))


def planar_girth6_blocks(n_max: int) -> list[Graph]:
    """2-connected planar graphs of girth >= 6 on at most n_max vertices, by
    ear additions starting from every cycle C6..C_{n_max}. Every such graph
    has an ear decomposition whose stages are subgraphs of it, so pruning by
    girth and planarity loses nothing."""
    seen: dict[bytes, Graph] = {}
    frontier = []
    for k in range(6, n_max + 1):
        c = cycle(k)
        seen[canon.certificate(c)] = c
        frontier.append(c)
    while frontier:
        nxt = []
        for g in frontier:
            for a, b in combinations(range(g.n), 2):
                d = bfs_distances(g, a)[b]
                for length in range(max(0, 5 - d), n_max - g.n + 1):
                    if length == 0 and g.has_edge(a, b):
                        continue
                    new = list(range(g.n, g.n + length))
                    chain = [a] + new + [b]
                    h = Graph.from_edges(g.n + length, list(g.edges()) + list(zip(chain, chain[1:])))
                    c = canon.certificate(h)
                    if c in seen or not is_planar(h):
                        continue
                    seen[c] = h
                    nxt.append(h)
        frontier = nxt
    return [seen[c] for c in sorted(seen, key=lambda c: (seen[c].n, seen[c].m, c))]


def nearly_long_candidates(n_max: int) -> list[Graph]:
    """Graphs on <= n_max vertices with minimum degree >= 3 that are H + v for
    some H of girth >= 5. Every nearly 5-long graph arises this way: remove the
    vertex breaker, an end of the edge breaker, or any vertex."""
    seen: dict[bytes, Graph] = {}
    for n in range(4, n_max):
        for h in girth5_graphs(n):
            low = [v for v in range(h.n) if h.degree(v) < 3]
            if any(h.degree(v) < 2 for v in low):
                continue
            must = set(low)
            others = [v for v in range(h.n) if v not in must]
            for r in range(0, len(others) + 1):
                for extra in combinations(others, r):
                    nb = sorted(must | set(extra))
                    if len(nb) < 3:
                        continue
                    g = add_vertex(h, nb)
                    c = canon.certificate(g)
                    if c not in seen:
                        seen[c] = g
    return [seen[c] for c in sorted(seen)]


# --------------------------------------------------------------- censuses


def census_dis_girth6(n_max: int = 12) -> CensusReport:
    rep = CensusReport("dis:girth6", n_max)
    tight = []
    for g in planar_girth6_blocks(n_max):
        rep.checked += 1
        try:
            r = check_two_valent_bound(g)
        except InternalAssertionFailed:
            rep.violations.append({"edges": [list(e) for e in g.edges()]})
            continue
        if len(r.special) == 6:
            tight.append(g.n)
    rep.stats = {"tight_orders": sorted(set(tight)), "tight_count": len(tight)}
    return rep


def census_sizeofnearlylong(n_max: int = 10) -> CensusReport:
    rep = CensusReport("sizeofnearlylong", n_max)
    filtered = 0
    for g in nearly_long_candidates(n_max):
        rep.checked += 1
        if not is_planar(g) or not is_nearly_k_long(g, 5):
            continue
        filtered += 1
        if qualifies_for_order_bound(g):
            rep.violations.append({"edges": [list(e) for e in g.edges()], "n": g.n})
    rep.stats = {"planar_nearly_long": filtered}
    return rep


def _fat_checks(g: Graph, rep: CensusReport) -> None:
    for h in minimal_fat_hammocks(g, 3):
        rep.stats["hammocks"] = rep.stats.get("hammocks", 0) + 1
        if vertex_connectivity(augment(h), cutoff=3) < 3:
            rep.violations.append({"lemma": "fat2", "edges": [list(e) for e in g.edges()],
                                   "hammock": sorted(h.vertices)})
        hg = h.graph()
        if girth(hg) <= 3:
            continue
        for u, v in combinations(sorted(h.boundary), 2):
            if g.has_edge(u, v):
                rep.stats["fat2'"] = rep.stats.get("fat2'", 0) + 1
                if vertex_connectivity(augment(h, (u, v)), cutoff=3) < 3:
                    rep.violations.append({"lemma": "fat2'", "edges": [list(e) for e in g.edges()],
                                           "hammock": sorted(h.vertices), "edge": [u, v]})


def fat_hosts(n_max: int = 8) -> list[Graph]:
    out = []
    for n in range(5, n_max + 1):
        for g in all_graphs(n):
            if g.m >= 3 * n / 2 and vertex_connectivity(g, cutoff=4) == 3 and _nontrivial3(g):
                out.append(g)
    return out


def _nontrivial3(g: Graph) -> bool:
    return any(not d.trivial for d in find_disconnectors(g, 3))


def random_fat_hosts(count: int, seed: int = 0, n_range=(9, 14)) -> list[Graph]:
    """3-connected graphs with a nontrivial 3-cut: two random dense pieces
    glued through three disjoint edges, plus a few random edges."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(*n_range)
        a = rng.randint(4, n - 4)
        left = random_graph(a, 0.7, rng.randrange(1 << 30))
        right = random_graph(n - a, 0.7, rng.randrange(1 << 30))
        edges = list(left.edges()) + [(u + a, v + a) for u, v in right.edges()]
        for x, y in zip(rng.sample(range(a), 3), rng.sample(range(a, n), 3)):
            edges.append((x, y))
        g = Graph.from_edges(n, edges)
        if vertex_connectivity(g, cutoff=4) == 3 and _nontrivial3(g):
            out.append(g)
    return out


def census_fat2(n_max: int = 8, samples: int = 0, seed: int = 0) -> CensusReport:
    rep = CensusReport("fat2", n_max)
    hosts = fat_hosts(n_max) + random_fat_hosts(samples, seed)
    for g in hosts:
        rep.checked += 1
        _fat_checks(g, rep)
    rep.stats["hosts"] = len(hosts)
    return rep


def census_robertson(n_max: int = 8) -> CensusReport:
    rep = CensusReport("robertson", n_max)
    cases: dict[str, int] = {}
    for n in range(5, n_max + 1):
        for g in all_graphs(n):
            if g.min_degree < 3 or not is_internally_k_connected(g, 4):
                continue
            r = find_minor(g, "v8")
            if isinstance(r, (MinorModel, Timeout)):
                continue
            rep.checked += 1
            try:
                res = robertson_classify(g)
            except Exception as exc:  # NoCase or anything unexpected
                rep.violations.append({"edges": [list(e) for e in g.edges()], "error": repr(exc)})
                continue
            if not verify_classification(g, res):
                rep.violations.append({"edges": [list(e) for e in g.edges()], "case": res.case})
            cases[res.case] = cases.get(res.case, 0) + 1
    rep.stats = {"cases": dict(sorted(cases.items()))}
    return rep


def societies(n_max: int = 8, seed: int = 0, exhaustive_upto: int = 5):
    """All societies with |omega| in 4..6 over hosts on <= exhaustive_upto
    vertices (cyclic orders up to rotation), then one seeded random society
    per host graph on larger orders."""
    rng = random.Random(seed)
    for n in range(4, n_max + 1):
        for g in all_graphs(n):
            if n <= exhaustive_upto:
                for k in range(4, min(6, n) + 1):
                    for chosen in combinations(range(n), k):
                        first, rest = chosen[0], chosen[1:]
                        for perm in permutations(rest):
                            yield Society(g, (first,) + perm)
            else:
                k = rng.randint(4, min(6, n))
                om = rng.sample(range(n), k)
                yield Society(g, tuple(om))


def census_cross(n_max: int = 8, seed: int = 0, exhaustive_upto: int = 5) -> CensusReport:
    rep = CensusReport("cross", n_max)
    kinds: dict[str, int] = {}
    for s in societies(n_max, seed, exhaustive_upto):
        rep.checked += 1
        try:
            r = trichotomy(s)
        except Inconsistent:
            rep.violations.append({"edges": [list(e) for e in s.graph.edges()], "omega": list(s.omega)})
            continue
        if not verify_outcome(s, r) or (isinstance(r, Cross) and not verify_cross(s, r)):
            rep.violations.append({"edges": [list(e) for e in s.graph.edges()], "omega": list(s.omega),
                                   "outcome": type(r).__name__})
        kinds[type(r).__name__] = kinds.get(type(r).__name__, 0) + 1
    rep.stats = {"outcomes": dict(sorted(kinds.items()))}
    return rep


CENSUSES = {
    "dis:girth6": census_dis_girth6,
    "sizeofnearlylong": census_sizeofnearlylong,
    "fat2": census_fat2,
    "fat2'": census_fat2,
    "robertson": census_robertson,
    "cross": census_cross,
}


def run_census(lemma: str, n_max: int) -> CensusReport:
    if lemma not in CENSUSES:
        raise ValueError(f"unknown lemma {lemma!r}; known: {sorted(CENSUSES)}")
    rep = CENSUSES[lemma](n_max)
    rep.lemma = lemma
    return rep
