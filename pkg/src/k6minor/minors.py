"""Minor models, minor and subdivision search, and the K5 constructions."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import combinations

from . import canon
from .errors import (
    HypothesisViolation,
    InternalAssertionFailed,
    NoCase,
    NotAJump,
    NotNearlyLong,
    SearchBudgetExceeded,
)
from .generators import complete, complete_bipartite, line_graph_k33, v8
from .graph import (
    Graph,
    add_edges,
    components,
    contract_map,
    delete_vertices,
    induced,
    is_connected_subset,
    is_internally_k_connected,
    is_k_connected,
)
from .planarity import NonplanarWitness, PlaneEmbedding, is_planar, planarity

DEFAULT_BUDGET = 10_000_000
EXACT_LIMIT = 13  # reduced hosts up to this order go straight to the exact search

_TARGET_BUILDERS = {
    "k4": lambda: complete(4),
    "k5": lambda: complete(5),
    "k6": lambda: complete(6),
    "k33": lambda: complete_bipartite(3, 3),
    "v8": v8,
    "lk33": line_graph_k33,
}


def target_graph(target) -> tuple[str, Graph]:
    if isinstance(target, Graph):
        return "explicit", target
    name = str(target).lower()
    if name not in _TARGET_BUILDERS:
        raise ValueError(f"unknown target {target!r}; known: {sorted(_TARGET_BUILDERS)}")
    return name, _TARGET_BUILDERS[name]()


# ------------------------------------------------------------------ models


@dataclass(frozen=True)
class MinorModel:
    target: str
    target_graph: Graph
    branch_sets: tuple[frozenset[int], ...]
    edge_witnesses: tuple[tuple[int, int], ...]  # one per edge of target_graph.edges()
    note: str = field(default="", compare=False)
    nodes: int = field(default=0, compare=False)

    def as_dict(self, host: Graph | None = None) -> dict:
        out = {
            "target": self.target,
            "branch_sets": [sorted(b) for b in self.branch_sets],
            "edge_witnesses": [list(e) for e in self.edge_witnesses],
        }
        if self.target == "explicit":
            out["target_edges"] = [list(e) for e in self.target_graph.edges()]
        if host is not None:
            out["verified"] = verify_model(host, self)
        return out

    def to_json(self, host: Graph | None = None) -> str:
        return json.dumps(self.as_dict(host), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> MinorModel:
        if d["target"] == "explicit":
            sets = d["branch_sets"]
            tg = Graph.from_edges(len(sets), [tuple(e) for e in d["target_edges"]])
            name = "explicit"
        else:
            name, tg = target_graph(d["target"])
        return cls(name, tg, tuple(frozenset(b) for b in d["branch_sets"]),
                   tuple(tuple(e) for e in d["edge_witnesses"]))

    def relabel(self, mapping) -> MinorModel:
        """Push vertex ids through ``mapping`` (a sequence or dict)."""
        return MinorModel(self.target, self.target_graph,
                          tuple(frozenset(mapping[v] for v in b) for b in self.branch_sets),
                          tuple((mapping[u], mapping[v]) for u, v in self.edge_witnesses),
                          self.note, self.nodes)


def _witnesses(g: Graph, h: Graph, sets) -> tuple[tuple[int, int], ...] | None:
    owner = {v: i for i, b in enumerate(sets) for v in b}
    found: dict[tuple[int, int], tuple[int, int]] = {}
    for u, v in g.edges():
        a, b = owner.get(u), owner.get(v)
        if a is None or b is None or a == b:
            continue
        key = (min(a, b), max(a, b))
        if key not in found:
            found[key] = (u, v) if a < b else (v, u)
    out = []
    for e in h.edges():
        if e not in found:
            return None
        out.append(found[e])
    return tuple(out)


def make_model(g: Graph, target, sets, note: str = "", nodes: int = 0) -> MinorModel:
    name, h = target_graph(target)
    sets = tuple(frozenset(b) for b in sets)
    wit = _witnesses(g, h, sets)
    if wit is None:
        raise ValueError("branch sets do not realise every target edge")
    return MinorModel(name, h, sets, wit, note, nodes)


def verify_model(g: Graph, m: MinorModel) -> bool:
    h = m.target_graph
    if len(m.branch_sets) != h.n or len(m.edge_witnesses) != h.m:
        return False
    seen: set[int] = set()
    owner = {}
    for i, b in enumerate(m.branch_sets):
        if not b or b & seen or any(not 0 <= v < g.n for v in b):
            return False
        if not is_connected_subset(g, b):
            return False
        seen |= b
        owner.update({v: i for v in b})
    for (a, b), (u, v) in zip(h.edges(), m.edge_witnesses):
        if not g.has_edge(u, v) or {owner.get(u), owner.get(v)} != {a, b}:
            return False
    return True


@dataclass(frozen=True)
class NotFound:
    reason: str
    nodes: int = 0


@dataclass(frozen=True)
class Timeout:
    nodes: int


class _OutOfBudget(Exception):
    pass


class _Counter:
    def __init__(self, budget: int):
        self.budget = budget
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _OutOfBudget


# -------------------------------------------------------------- reductions


def _reduce(g: Graph, parts: list[frozenset[int]], min_target_degree: int):
    """Delete vertices of degree <= 1; when the target has minimum degree >= 3,
    also suppress degree-2 vertices into a neighbour. ``parts`` tracks the
    original vertices each vertex stands for."""
    adj = {v: set(g.adj[v]) for v in range(g.n)}
    part = {v: set(parts[v]) for v in range(g.n)}
    changed = True
    while changed:
        changed = False
        for v in sorted(adj):
            if v not in adj:
                continue
            d = len(adj[v])
            if d <= 1 and min_target_degree >= 2:
                for w in adj[v]:
                    adj[w].discard(v)
                del adj[v], part[v]
                changed = True
            elif d == 2 and min_target_degree >= 3:
                a, b = sorted(adj[v])
                adj[a].discard(v)
                adj[b].discard(v)
                adj[a].add(b)
                adj[b].add(a)
                part[a] |= part[v]
                del adj[v], part[v]
                changed = True
    keep = sorted(adj)
    idx = {v: i for i, v in enumerate(keep)}
    rg = Graph.from_edges(len(keep), [(idx[u], idx[w]) for u in keep for w in adj[u] if u < w])
    return rg, [frozenset(part[v]) for v in keep]


# ----------------------------------------------------------- exact search


def _bfs_order(g: Graph) -> list[int]:
    start = max(range(g.n), key=lambda v: (g.degree(v), -v))
    order, seen = [start], {start}
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for w in sorted(g.adj[v], key=lambda x: (-g.degree(x), x)):
            if w not in seen:
                seen.add(w)
                order.append(w)
    return order


def _full_order(g: Graph) -> list[int]:
    order: list[int] = []
    for comp in sorted(components(g), key=min):
        sub, back = induced(g, comp)
        order += [back[v] for v in _bfs_order(sub)]
    return order


def _embed(h: Graph, qadj: list[int]) -> list[int] | None:
    """Injective map of h's vertices into the quotient (bitmask adjacency)
    preserving adjacency, by backtracking."""
    t = h.n
    order = sorted(range(t), key=lambda v: (-h.degree(v), v))
    qdeg = [bin(m).count("1") for m in qadj]
    img = [-1] * t
    used = [False] * t

    def rec(i):
        if i == t:
            return True
        v = order[i]
        for q in range(t):
            if used[q] or qdeg[q] < h.degree(v):
                continue
            if all(qadj[q] >> img[w] & 1 for w in h.adj[v] if img[w] >= 0):
                img[v], used[q] = q, True
                if rec(i + 1):
                    return True
                img[v], used[q] = -1, False
        return False

    return img if rec(0) else None


class _PartitionSearch:
    """Partitions of V(g) into t connected blocks, grown vertex by vertex in
    BFS order with restricted-growth labels, pruned by connectivity of each
    block inside its still-free surroundings and by potential block degrees."""

    def __init__(self, g: Graph, h: Graph, counter: _Counter):
        self.g, self.h, self.counter = g, h, counter
        self.t = h.n
        self.complete = h.m == self.t * (self.t - 1) // 2
        self.hdeg = sorted(h.degree(v) for v in range(self.t))
        self.masks = g.masks
        self.order = _bfs_order(g)

    def _nbhd(self, mask: int) -> int:
        out = 0
        masks = self.masks
        while mask:
            low = mask & -mask
            out |= masks[low.bit_length() - 1]
            mask ^= low
        return out

    def _flood(self, start: int, allowed: int) -> int:
        seen = frontier = start
        while frontier:
            frontier = self._nbhd(frontier) & allowed & ~seen
            seen |= frontier
        return seen

    def _feasible(self, used: int) -> bool:
        free = self.free
        reach, around = [], []
        for b in range(used):
            blk = self.blocks[b]
            r = self._flood(blk & -blk, blk | free)
            if blk & ~r:
                return False
            reach.append(r)
            around.append(self._nbhd(r) | r)
        empty = self.t - used
        pds = []
        for a in range(used):
            pd = sum(1 for b in range(used) if b != a and around[a] & reach[b])
            if empty and self._nbhd(reach[a]) & free:
                pd += empty
            pds.append(pd)
        if self.complete:
            return all(pd >= self.t - 1 for pd in pds)
        pds.sort()
        return all(p >= d for p, d in zip(pds, self.hdeg))

    def _leaf(self) -> list[int] | None:
        nb = [self._nbhd(b) for b in self.blocks]
        qadj = [0] * self.t
        for a in range(self.t):
            for b in range(self.t):
                if a != b and nb[a] & self.blocks[b]:
                    qadj[a] |= 1 << b
        if self.complete:
            full = (1 << self.t) - 1
            return list(range(self.t)) if all(qadj[a] | 1 << a == full for a in range(self.t)) else None
        return _embed(self.h, qadj)

    def run(self) -> list[frozenset[int]] | None:
        n, t = self.g.n, self.t
        if n < t:
            return None
        self.blocks = [0] * t
        self.free = (1 << n) - 1
        found = self._rec(0, 0)
        if found is None:
            return None
        img = found
        sets = [frozenset(v for v in range(n) if self.blocks[img[x]] >> v & 1) for x in range(t)]
        return sets

    def _rec(self, i: int, used: int):
        self.counter.tick()
        if i == len(self.order):
            return self._leaf() if used == self.t else None
        v = self.order[i]
        bit = 1 << v
        self.free &= ~bit
        remaining = len(self.order) - i - 1
        choices = []
        if used < self.t:
            choices.append(used)
        near = [b for b in range(used) if self.masks[v] & self.blocks[b]]
        choices += near + [b for b in range(used) if b not in near]
        for b in choices:
            nused = used + (b == used)
            if self.t - nused > remaining:
                continue
            self.blocks[b] |= bit
            if self._feasible(nused):
                res = self._rec(i + 1, nused)
                if res is not None:
                    return res
            self.blocks[b] &= ~bit
        self.free |= bit
        return None


def _exact(g: Graph, h: Graph, counter: _Counter) -> list[frozenset[int]] | None:
    return _PartitionSearch(g, h, counter).run()


# ------------------------------------------------------- heuristic search


def _contract_parts(g: Graph, parts, u: int, v: int):
    cg, old_to_new = contract_map(g, [u, v])
    merged: dict[int, set[int]] = {}
    for old, new in old_to_new.items():
        merged.setdefault(new, set()).update(parts[old])
    return cg, [frozenset(merged[i]) for i in range(cg.n)]


def _heuristic(g: Graph, h: Graph, counter: _Counter, seed: int, attempts: int = 24):
    """Contract edges with few common neighbours (cheap in edges lost) while
    keeping the graph nonplanar when the target is, then search exactly."""
    keep_nonplanar = not is_planar(h)
    min_td = h.min_degree
    for attempt in range(attempts):
        rng = random.Random(seed * 1000 + attempt)
        cur, parts = _reduce(g, [frozenset([v]) for v in range(g.n)], min_td)
        stuck = False
        while cur.n > EXACT_LIMIT and not stuck:
            scored = sorted(cur.edges(), key=lambda e: (len(cur.adj[e[0]] & cur.adj[e[1]]), rng.random()))
            stuck = True
            for u, v in scored[:40]:
                counter.tick()
                cg, cp = _contract_parts(cur, parts, u, v)
                cg, cp = _reduce(cg, cp, min_td)
                if cg.n < h.n or cg.m < h.m:
                    continue
                if keep_nonplanar and is_planar(cg):
                    continue
                cur, parts, stuck = cg, cp, False
                break
        if stuck:
            continue
        sub = _Counter(min(counter.budget - counter.nodes, 200_000))
        try:
            sets = _exact(cur, h, sub)
        except _OutOfBudget:
            sets = None
        counter.nodes += sub.nodes
        if counter.nodes > counter.budget:
            raise _OutOfBudget
        if sets is not None:
            return [frozenset().union(*(parts[x] for x in s)) for s in sets]
    return None


# ------------------------------------------------------------ find_minor


def _model_from_k5_subdivision(w: NonplanarWitness) -> list[frozenset[int]]:
    sets = {b: {b} for b in w.branch_vertices}
    for p in w.paths:
        sets[p[0]].update(p[1:-1])
    return [frozenset(sets[b]) for b in w.branch_vertices]


def find_minor(g: Graph, target="k5", budget: int = DEFAULT_BUDGET, *, seed: int = 0,
               heuristic: bool = True) -> MinorModel | NotFound | Timeout:
    """Search for a ``target`` minor in ``g``.

    NotFound is only returned after a complete search (or a sound shortcut:
    size counts, or planarity of ``g`` for a nonplanar target).
    """
    name, h = target_graph(target)
    counter = _Counter(budget)
    if h.n > g.n or h.m > g.m:
        return NotFound("size", 0)
    if h.n == 0:
        return make_model(g, target, [])
    target_nonplanar = not is_planar(h)
    timed_out = False
    for comp in sorted(components(g), key=lambda c: (-len(c), min(c))):
        if len(comp) < h.n:
            continue
        sub, back = induced(g, comp)
        rg, parts = _reduce(sub, [frozenset([v]) for v in range(sub.n)], h.min_degree if h.n > 1 else 0)
        if rg.n < h.n or rg.m < h.m:
            continue
        if target_nonplanar:
            w = planarity(rg)
            if isinstance(w, PlaneEmbedding):
                continue
            if name == "k5" and w.kind == "K5":
                sets = _model_from_k5_subdivision(w)
                return _finish(g, target, sets, parts, back, "kuratowski", counter.nodes)
        try:
            sets = None
            note = "exact"
            if rg.n > EXACT_LIMIT and heuristic:
                sets = _heuristic(rg, h, counter, seed)
                note = "heuristic"
            if sets is None:
                note = "exact"
                sets = _exact(rg, h, counter)
        except _OutOfBudget:
            timed_out = True
            continue
        if sets is not None:
            return _finish(g, target, sets, parts, back, note, counter.nodes)
    if timed_out:
        return Timeout(counter.nodes)
    return NotFound("exhaustive", counter.nodes)


def _finish(g, target, sets, parts, back, note, nodes) -> MinorModel:
    lifted = [frozenset(back[x] for v in s for x in parts[v]) for s in sets]
    m = make_model(g, target, lifted, note, nodes)
    if not verify_model(g, m):
        raise InternalAssertionFailed("minor-model", "search produced an invalid model")
    return m


def has_minor(g: Graph, target, budget: int = DEFAULT_BUDGET) -> bool:
    r = find_minor(g, target, budget)
    if isinstance(r, Timeout):
        raise SearchBudgetExceeded(f"{target} minor", r.nodes)
    return isinstance(r, MinorModel)


# ------------------------------------------------------------ subdivisions


@dataclass(frozen=True)
class Subdivision:
    target: str
    target_graph: Graph
    branch: tuple[int, ...]  # host vertex of each target vertex
    paths: tuple[tuple[int, ...], ...]  # host path for each target edge, in edge order

    def edges(self) -> set[tuple[int, int]]:
        return {(min(a, b), max(a, b)) for p in self.paths for a, b in zip(p, p[1:])}


def verify_subdivision(g: Graph, s: Subdivision) -> bool:
    h = s.target_graph
    if len(s.branch) != h.n or len(set(s.branch)) != h.n or len(s.paths) != h.m:
        return False
    inner: set[int] = set()
    for (a, b), p in zip(h.edges(), s.paths):
        if p[0] != s.branch[a] or p[-1] != s.branch[b] or len(set(p)) != len(p):
            return False
        if any(not g.has_edge(x, y) for x, y in zip(p, p[1:])):
            return False
        mid = set(p[1:-1])
        if mid & inner or mid & set(s.branch):
            return False
        inner |= mid
    return True


def find_subdivision(g: Graph, target, budget: int = DEFAULT_BUDGET) -> Subdivision | None | Timeout:
    """A subdivision of ``target`` in ``g`` by exhaustive backtracking: target
    vertices are placed in BFS order, each new one reached by a path from an
    already placed neighbour, then its other placed neighbours are routed."""
    name, h = target_graph(target)
    if h.n > g.n or h.m > g.m:
        return None
    counter = _Counter(budget)
    t = h.n
    order = _full_order(h)
    rank = {v: i for i, v in enumerate(order)}
    img = [-1] * t
    used = [False] * g.n
    paths: dict[tuple[int, int], tuple[int, ...]] = {}

    def simple_paths(s: int, stop):
        """Simple paths from s whose internal vertices are unused; ``stop(y)``
        says whether y may end a path. Callers mark vertices themselves."""
        stack, on = [s], {s}

        def walk(x):
            counter.tick()
            for y in g.nbrs(x):
                if y in on:
                    continue
                if stop(y):
                    yield stack + [y]
                if not used[y]:
                    stack.append(y)
                    on.add(y)
                    yield from walk(y)
                    stack.pop()
                    on.discard(y)

        yield from walk(s)

    def route(tv: int, pending: list[int], i: int):
        if not pending:
            return place(i + 1)
        q = pending[0]
        target_v = img[q]
        for p in simple_paths(img[tv], lambda y: y == target_v):
            for x in p[1:-1]:
                used[x] = True
            paths[(min(tv, q), max(tv, q))] = tuple(p) if tv < q else tuple(reversed(p))
            if route(tv, pending[1:], i):
                return True
            del paths[(min(tv, q), max(tv, q))]
            for x in p[1:-1]:
                used[x] = False
        return False

    def place(i: int) -> bool:
        if i == t:
            return True
        tv = order[i]
        need = h.degree(tv)
        earlier = sorted((w for w in h.adj[tv] if rank[w] < i), key=rank.get)
        if not earlier:
            for w in range(g.n):
                counter.tick()
                if used[w] or g.degree(w) < need:
                    continue
                used[w], img[tv] = True, w
                if place(i + 1):
                    return True
                used[w], img[tv] = False, -1
            return False
        p0 = earlier[0]

        def ok_end(y):
            return not used[y] and g.degree(y) >= need

        for p in simple_paths(img[p0], ok_end):
            w = p[-1]
            if not ok_end(w):
                continue
            img[tv] = w
            for x in p[1:]:
                used[x] = True
            paths[(min(tv, p0), max(tv, p0))] = tuple(p) if p0 < tv else tuple(reversed(p))
            if route(tv, earlier[1:], i):
                return True
            del paths[(min(tv, p0), max(tv, p0))]
            for x in p[1:]:
                used[x] = False
            img[tv] = -1
        return False

    try:
        ok = place(0)
    except _OutOfBudget:
        return Timeout(counter.nodes)
    if not ok:
        return None
    sub = Subdivision(name, h, tuple(img), tuple(paths[e] for e in h.edges()))
    if not verify_subdivision(g, sub):
        raise InternalAssertionFailed("subdivision", "search produced an invalid subdivision")
    return sub


# ------------------------------------------------------ V8 and Robertson


@dataclass(frozen=True)
class IsV8:
    isomorphism: dict


def wagner_step(g: Graph, budget: int = DEFAULT_BUDGET) -> MinorModel | IsV8:
    if not is_k_connected(g, 3):
        raise HypothesisViolation("3-connected", "wagner_step needs a 3-connected graph")
    sub = find_subdivision(g, "v8", budget)
    if isinstance(sub, Timeout):
        raise SearchBudgetExceeded("V8 subdivision", sub.nodes)
    if sub is None:
        raise HypothesisViolation("TV8", "graph has no subdivided V8")
    iso = canon.isomorphism(g, v8())
    if iso is not None:
        return IsV8(iso)
    r = find_minor(g, "k5", budget)
    if isinstance(r, Timeout):
        raise SearchBudgetExceeded("K5 minor", r.nodes)
    if isinstance(r, NotFound):
        raise InternalAssertionFailed("transform-V8", "3-connected graph with a TV8, not V8, without K5 minor",
                                      {"edges": list(g.edges())})
    return r


@dataclass(frozen=True)
class ClassifyResult:
    case: str  # planar | lineK33 | circuit_pair | small | apex4
    witness: object


def _circuit_pair(g: Graph):
    for u, v in g.edges():
        rest, back = delete_vertices(g, [u, v])
        if rest.n >= 3 and all(rest.degree(x) == 2 for x in range(rest.n)) and len(components(rest)) == 1:
            return (u, v)
    return None


def _vertex_cover(g: Graph, size: int):
    for k in range(size + 1):
        for x in combinations(range(g.n), k):
            xs = set(x)
            if all(a in xs or b in xs for a, b in g.edges()):
                return tuple(x)
    return None


def robertson_classify(g: Graph, budget: int = DEFAULT_BUDGET) -> ClassifyResult:
    if not is_internally_k_connected(g, 4):
        raise HypothesisViolation("internally-4-connected", "classification needs an internally 4-connected graph")
    r = find_minor(g, "v8", budget)
    if isinstance(r, Timeout):
        raise SearchBudgetExceeded("V8 minor", r.nodes)
    if isinstance(r, MinorModel):
        raise HypothesisViolation("V8-free", "graph has a V8 minor")
    emb = planarity(g)
    if isinstance(emb, PlaneEmbedding):
        return ClassifyResult("planar", emb)
    iso = canon.isomorphism(g, line_graph_k33())
    if iso is not None:
        return ClassifyResult("lineK33", iso)
    if g.n <= 7:
        return ClassifyResult("small", g.n)
    pair = _circuit_pair(g)
    if pair is not None:
        return ClassifyResult("circuit_pair", pair)
    cover = _vertex_cover(g, 4)
    if cover is not None:
        return ClassifyResult("apex4", cover)
    raise NoCase(f"no case applies to {list(g.edges())}")


def verify_classification(g: Graph, r: ClassifyResult) -> bool:
    if r.case == "planar":
        return isinstance(r.witness, PlaneEmbedding) and r.witness.graph == g
    if r.case == "lineK33":
        ref = line_graph_k33()
        phi = r.witness
        return g.n == 9 and g.m == ref.m and all(ref.has_edge(phi[a], phi[b]) for a, b in g.edges())
    if r.case == "circuit_pair":
        u, v = r.witness
        rest = delete_vertices(g, [u, v])[0]
        return (g.has_edge(u, v) and rest.n >= 3 and len(components(rest)) == 1
                and all(rest.degree(x) == 2 for x in range(rest.n)))
    if r.case == "small":
        return g.n <= 7
    if r.case == "apex4":
        xs = set(r.witness)
        return len(xs) <= 4 and all(a in xs or b in xs for a, b in g.edges())
    return False


# ------------------------------------------------------ K5 constructions


def _require_nearly_long_i4c(g: Graph) -> None:
    from .truncation import nearly_k_long

    if not is_internally_k_connected(g, 4):
        raise HypothesisViolation("internally-4-connected", "host must be internally 4-connected")
    try:
        nearly_k_long(g, 5)
    except NotNearlyLong as exc:
        raise HypothesisViolation("nearly-5-long", str(exc)) from None


def k5_from_nonplanar(g: Graph, budget: int = DEFAULT_BUDGET) -> MinorModel:
    """K5 model in a nearly 5-long, internally 4-connected nonplanar graph.

    Tries, in order: a K5-type Kuratowski subdivision, the V8 route on small
    hosts, and finally the general search.
    """
    w = planarity(g)
    if isinstance(w, PlaneEmbedding):
        raise HypothesisViolation("nonplanar", "graph is planar")
    _require_nearly_long_i4c(g)
    if w.kind == "K5":
        return _checked(g, make_model(g, "k5", _model_from_k5_subdivision(w), "kuratowski"))
    if g.n <= 12 and canon.isomorphism(g, v8()) is None:
        sub = find_subdivision(g, "v8", min(budget, 200_000))
        if isinstance(sub, Subdivision):
            r = wagner_step(g, budget)
            if isinstance(r, MinorModel):
                return _checked(g, MinorModel(r.target, r.target_graph, r.branch_sets, r.edge_witnesses,
                                              "wagner", r.nodes))
    r = find_minor(g, "k5", budget)
    if isinstance(r, Timeout):
        raise SearchBudgetExceeded("K5 minor", r.nodes)
    if isinstance(r, NotFound):
        raise InternalAssertionFailed("thomas-cor", "nonplanar nearly 5-long graph without K5 minor",
                                      {"edges": list(g.edges())})
    return _checked(g, r)


def _checked(g: Graph, m: MinorModel) -> MinorModel:
    if not verify_model(g, m):
        raise InternalAssertionFailed("minor-model", "constructed model fails verification")
    return m


@dataclass(frozen=True)
class ExtendedModel:
    """A model in ``graph`` = host plus new vertices host_n, host_n+1, ...
    standing for the labels in ``extra``."""

    graph: Graph
    model: MinorModel
    host_n: int
    extra: tuple

    def meets_host(self) -> bool:
        return all(min(b) < self.host_n for b in self.model.branch_sets)

    def to_labels(self, host_ids=None) -> list[frozenset]:
        """Branch sets with host vertices through ``host_ids`` and new ones by label."""
        def name(v):
            if v < self.host_n:
                return host_ids[v] if host_ids is not None else v
            return self.extra[v - self.host_n]
        return [frozenset(name(v) for v in b) for b in self.model.branch_sets]


def _extend(host: Graph, paths) -> tuple[Graph, list[list[int]], tuple]:
    """Add path internals as new vertices; returns the graph, the paths in
    new ids, and the labels of the new vertices."""
    extra: dict = {}
    out_paths = []
    for p in paths:
        if len(p) < 2:
            raise HypothesisViolation("path", "paths need two ends")
        for end in (p[0], p[-1]):
            if not (isinstance(end, int) and 0 <= end < host.n):
                raise HypothesisViolation("path-ends", f"path end {end!r} is not a host vertex")
        q = [p[0]]
        for x in p[1:-1]:
            if isinstance(x, int) and 0 <= x < host.n:
                raise HypothesisViolation("path-internal", f"internal vertex {x} lies in the host")
            if x in extra:
                raise HypothesisViolation("path-disjoint", f"vertex {x!r} is used twice")
            extra[x] = host.n + len(extra)
            q.append(extra[x])
        q.append(p[-1])
        out_paths.append(q)
    edges = list(host.edges())
    for q in out_paths:
        edges += list(zip(q, q[1:]))
    g = Graph.from_edges(host.n + len(extra), edges)
    return g, out_paths, tuple(extra)


def k5_from_jump(e: PlaneEmbedding, p, budget: int = DEFAULT_BUDGET) -> ExtendedModel:
    host = e.graph
    a, b = p[0], p[-1]
    if a == b:
        raise HypothesisViolation("path-ends", "jump ends coincide")
    if e.cofacial(a, b):
        raise NotAJump(f"{a} and {b} share a face")
    _require_nearly_long_i4c(host)
    g, (q,), extra = _extend(host, [p])
    shortcut = add_edges(host, [(a, b)])
    r = find_minor(shortcut, "k5", budget, seed=a * 7919 + b)
    if isinstance(r, Timeout):
        raise SearchBudgetExceeded("K5 minor", r.nodes)
    if isinstance(r, NotFound):
        raise InternalAssertionFailed("jump", "host plus a jump edge has no K5 minor",
                                      {"edges": list(host.edges()), "jump": [a, b]})
    sets = [set(s) for s in r.branch_sets]
    holder = next((s for s in sets if a in s), None)
    if holder is None:
        holder = next(s for s in sets if b in s)
    holder.update(q[1:-1])
    m = _checked(g, make_model(g, "k5", sets, "jump", r.nodes))
    out = ExtendedModel(g, m, host.n, extra)
    if not out.meets_host():
        raise InternalAssertionFailed("jump", "branch set misses the host")
    return out


def k5_from_cross(e: PlaneEmbedding, f: int, c) -> ExtendedModel:
    """Explicit K5: four sets from the facial cycle and the cross, the fifth
    is the host minus the face."""
    from .society import overlap

    host = e.graph
    if host.n < 5 or not is_k_connected(host, 3):
        raise HypothesisViolation("3-connected", "host must be 3-connected with at least 5 vertices")
    face = list(e.faces[f])
    if len(set(face)) != len(face):
        raise HypothesisViolation("facial-circuit", "face is not a circuit")
    if host.n == len(face):
        raise HypothesisViolation("face-proper", "host has no vertex off the face")
    p1, p2 = list(c.p1), list(c.p2)
    ends = [p1[0], p1[-1], p2[0], p2[-1]]
    if any(x not in face for x in ends):
        raise HypothesisViolation("cross-ends", "cross ends must lie on the face")
    if not overlap(face, (p1[0], p1[-1]), (p2[0], p2[-1])):
        raise HypothesisViolation("cross-overlap", "cross end pairs do not overlap")
    g, (q1, q2), extra = _extend(host, [p1, p2])
    pos = {v: i for i, v in enumerate(face)}
    # rotate so that the ends appear as s1, s2, t1, t2 along the face
    s1, t1 = q1[0], q1[-1]
    s2, t2 = q2[0], q2[-1]
    L = len(face)

    def ahead(x, y):
        return (pos[y] - pos[x]) % L

    if ahead(s1, s2) > ahead(s1, t1):
        q2 = q2[::-1]
        s2, t2 = t2, s2

    def arc_inside(x, y):
        i = pos[x]
        out = []
        while True:
            i = (i + 1) % L
            if face[i] == y:
                return out
            out.append(face[i])

    x1 = {s1, *q1[1:-1], *arc_inside(s1, s2)}
    x2 = {s2, *q2[1:-1], *arc_inside(s2, t1)}
    x3 = {t1, *arc_inside(t1, t2)}
    x4 = {t2, *arc_inside(t2, s1)}
    x5 = set(range(host.n)) - set(face)
    if not is_connected_subset(host, x5):
        raise InternalAssertionFailed("addcross", "host minus a facial circuit is disconnected",
                                      {"edges": list(host.edges()), "face": face})
    m = _checked(g, make_model(g, "k5", [x1, x2, x3, x4, x5], "cross"))
    out = ExtendedModel(g, m, host.n, extra)
    if not out.meets_host():
        raise InternalAssertionFailed("addcross", "branch set misses the host")
    return out
