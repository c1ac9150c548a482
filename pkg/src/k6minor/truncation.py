"""Nearly long graphs and truncations.

A truncation is stored together with a minor model of its host: every
vertex of the truncation owns a connected branch set of host vertices, and
every body vertex additionally has a *core* host vertex so that the body is
a subgraph of the host through the core map. The vertex-breaker (if any)
has no core; its branch set is a connected piece of the host that was
contracted. An edge-breaker is realized by a host path between the cores
of its ends, whose inner vertices join the branch set of the first end.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import HypothesisViolation, InternalAssertionFailed, NotNearlyLong
from .graph import (
    ConnClass,
    Graph,
    bfs_path,
    blocks,
    components,
    connectivity_class,
    contract_map,
    delete_edges,
    delete_vertices,
    girth,
    induced,
    is_connected_subset,
    is_k_connected,
    short_cycle,
    vertex_connectivity,
)
from .hammock import Hammock, _extreme, augment, minimal_fat_hammocks


@dataclass(frozen=True)
class Breaker:
    kind: str  # "none", "edge" or "vertex"
    elements: tuple[int, ...] = ()
    valence: int | None = None

    @property
    def vertex(self) -> int | None:
        return self.elements[0] if self.kind == "vertex" else None

    @property
    def edge(self) -> tuple[int, int] | None:
        return (self.elements[0], self.elements[1]) if self.kind == "edge" else None

    def as_dict(self) -> dict:
        out: dict = {"kind": self.kind, "elements": list(self.elements)}
        if self.valence is not None:
            out["valence"] = self.valence
        return out


NO_BREAKER = Breaker("none")


def _remove(g: Graph, x: Breaker) -> Graph:
    if x.kind == "vertex":
        return delete_vertices(g, [x.vertex])[0]
    if x.kind == "edge":
        return delete_edges(g, [x.edge])
    return g


def _candidates(g: Graph, k: int) -> tuple[list[Breaker], list[int] | None]:
    cyc = short_cycle(g, k)
    if cyc is None:
        return [], None
    verts = [Breaker("vertex", (v,), g.degree(v)) for v in sorted(cyc)]
    edges = sorted(tuple(sorted((cyc[i], cyc[(i + 1) % len(cyc)]))) for i in range(len(cyc)))
    return verts + [Breaker("edge", e) for e in edges], cyc


def all_breakers(g: Graph, k: int) -> list[Breaker]:
    """Every vertex or edge x with girth(g - x) >= k; empty when girth(g) >= k."""
    cands, cyc = _candidates(g, k)
    return [x for x in cands if girth(_remove(g, x)) >= k]


def nearly_k_long(g: Graph, k: int) -> Breaker:
    """The first breaker (edges before vertices, each in increasing order).

    A breaker lies on every cycle shorter than k, so only the elements of
    one such cycle need testing.
    """
    if girth(g) >= k:
        return NO_BREAKER
    cands, cyc = _candidates(g, k)
    cands = [x for x in cands if x.kind == "edge"] + [x for x in cands if x.kind == "vertex"]
    for x in cands:
        if girth(_remove(g, x)) >= k:
            return x
    pair = disjoint_short_cycles(g, k)
    raise NotNearlyLong(k, None if pair is None else (tuple(pair[0]), tuple(pair[1])))


def is_nearly_k_long(g: Graph, k: int) -> bool:
    try:
        nearly_k_long(g, k)
    except NotNearlyLong:
        return False
    return True


# -------------------------------------------------------------- truncations


@dataclass(frozen=True)
class Truncation:
    host: Graph
    graph: Graph
    breaker: Breaker
    core: tuple[int | None, ...]
    branch_sets: tuple[frozenset[int], ...]
    k: int
    virtual_path: tuple[int, ...] = ()
    history: tuple[str, ...] = field(default=(), compare=False)

    @property
    def proper(self) -> bool:
        return self.breaker.kind == "none"

    @property
    def body(self) -> Graph:
        return _remove(self.graph, self.breaker)

    @property
    def body_order(self) -> int:
        return self.graph.n - (1 if self.breaker.kind == "vertex" else 0)

    def body_map(self) -> list[int]:
        """Host vertex of each body vertex (body ids follow ``body``)."""
        keep = [v for v in range(self.graph.n) if v != self.breaker.vertex]
        return [self.core[v] for v in keep]

    def lift(self, vertices) -> frozenset[int]:
        """Host vertices represented by a set of truncation vertices."""
        out: set[int] = set()
        for v in vertices:
            out |= self.branch_sets[v]
        return frozenset(out)

    def owner(self) -> dict[int, int]:
        return {h: v for v, bs in enumerate(self.branch_sets) for h in bs}

    @property
    def host_trace(self) -> list[tuple]:
        """Minor operations turning the host into ``graph``."""
        keep = sorted(set().union(*self.branch_sets))
        ops: list[tuple] = [("keep", keep)]
        for bs in self.branch_sets:
            if len(bs) > 1:
                ops.append(("contract", sorted(bs)))
        reps = [min(bs) for bs in self.branch_sets]
        quotient_edges = set()
        owner = self.owner()
        for u, v in self.host.edges():
            a, b = owner.get(u), owner.get(v)
            if a is not None and b is not None and a != b:
                quotient_edges.add((min(a, b), max(a, b)))
        extra = sorted(quotient_edges - set(self.graph.edges()))
        if extra:
            ops.append(("delete_edges", [(reps[a], reps[b]) for a, b in extra]))
        ops.append(("order", reps))
        return ops

    def as_dict(self) -> dict:
        return {
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.edges()],
            "breaker": self.breaker.as_dict(),
            "core": list(self.core),
            "branch_sets": [sorted(b) for b in self.branch_sets],
            "host_trace": [[op[0], op[1]] for op in self.host_trace],
        }


def replay_trace(host: Graph, trace) -> Graph:
    """Apply a host trace; vertices are tracked by the least host id they absorbed."""
    g = host.with_labels(range(host.n))
    for op, arg in trace:
        pos = {g.label(v): v for v in range(g.n)}
        if op == "keep":
            g = induced(g, [pos[v] for v in arg])[0]
        elif op == "contract":
            g = contract_map(g, [pos[v] for v in arg])[0]
        elif op == "delete_edges":
            g = delete_edges(g, [(pos[a], pos[b]) for a, b in arg])
        elif op == "order":
            idx = {pos[v]: i for i, v in enumerate(arg)}
            if len(idx) != g.n:
                raise ValueError("order does not list every remaining vertex")
            g = Graph.from_edges(g.n, [(idx[a], idx[b]) for a, b in g.edges()])
        else:
            raise ValueError(f"unknown trace operation {op!r}")
    return g


def truncation_violations(t: Truncation) -> list[str]:
    """Names of the structural invariants that ``t`` breaks (empty when sound)."""
    bad = []
    host, h = t.host, t.graph
    sets = t.branch_sets
    if len(sets) != h.n or len(t.core) != h.n:
        return ["shape"]
    seen: set[int] = set()
    for bs in sets:
        if not bs or bs & seen or not is_connected_subset(host, bs):
            bad.append("branch-sets")
            break
        seen |= bs
    owner = t.owner()
    touching = set()
    for u, v in host.edges():
        a, b = owner.get(u), owner.get(v)
        if a is not None and b is not None and a != b:
            touching.add((min(a, b), max(a, b)))
    if not set(h.edges()) <= touching:
        bad.append("edge-witness")
    x = t.breaker.vertex
    for v in range(h.n):
        if (v == x) != (t.core[v] is None) or (t.core[v] is not None and t.core[v] not in sets[v]):
            bad.append("core")
            break
    e = t.breaker.edge
    for a, b in h.edges():
        if (a, b) == e or a == x or b == x:
            continue
        if not host.has_edge(t.core[a], t.core[b]):
            bad.append("body-subgraph")
            break
    if girth(t.body) < t.k:
        bad.append("body-girth")
    if replay_trace(host, t.host_trace) != h:
        bad.append("trace")
    return bad


def _proper(host: Graph, vertices, k: int, note: str) -> Truncation:
    sub, order = induced(host, vertices)
    return Truncation(host, sub, NO_BREAKER, tuple(order), tuple(frozenset({v}) for v in order), k,
                      history=(note,))


def _from_capping(host: Graph, block: Truncation, capping, k: int) -> Truncation:
    b = block.graph
    order = capping.order
    core = tuple(block.core[v] for v in order)
    sets = [frozenset({c}) for c in core]
    if not capping.virtual_edge:
        return Truncation(host, capping.graph, NO_BREAKER, core, tuple(sets), k,
                          history=block.history + ("extreme component",))
    a, c = capping.window
    outside = set(range(b.n)) - capping.hammock.vertices
    path = bfs_path(b, order[a], order[c], outside)
    if path is None:
        raise InternalAssertionFailed("ess4.A", "window of the extreme component is not linked outside it")
    hpath = tuple(block.core[v] for v in path)
    sets[a] = sets[a] | frozenset(hpath[1:-1])
    return Truncation(host, capping.graph, Breaker("edge", (a, c)), core, tuple(sets), k, hpath,
                      history=block.history + ("extreme component with virtual edge",))


def _augment_step(t: Truncation, j: Hammock, drop: tuple[int, int] | None) -> Truncation:
    h = t.graph
    d = j.boundary
    rest = [c for c in components(h, set(range(h.n)) - d) if not c & j.vertices]
    c2 = rest[0]
    new = augment(j, drop)
    order = j.order
    core = tuple(t.core[v] for v in order) + (None,)
    sets = [frozenset({t.core[v]}) for v in order]
    r = set(t.lift(c2))
    e = t.breaker.edge
    if e is not None and (e[0] in c2 or e[1] in c2):
        r |= set(t.virtual_path[1:-1])
    sets.append(frozenset(r))
    return Truncation(t.host, new, Breaker("vertex", (len(order),), new.degree(len(order))), core, tuple(sets),
                      t.k, history=t.history + (f"augment hammock with boundary {sorted(d)}",))


def _smaller(t: Truncation, claim: str) -> Truncation:
    """A 3-connected 3-truncation with strictly smaller body, built from a
    minimal fat 3-hammock of ``t.graph`` avoiding the breaker."""
    h = t.graph
    x = t.breaker.vertex
    e = t.breaker.edge
    for j in minimal_fat_hammocks(h, 3):
        if x is not None and x in j.vertices:
            continue
        drop = None
        if e is not None and set(e) <= j.vertices:
            if not set(e) <= j.boundary:
                continue
            drop = e
        if len(j.vertices) >= t.body_order:
            continue
        cand = _augment_step(t, j, drop)
        if is_k_connected(cand.graph, 3):
            return cand
    raise InternalAssertionFailed(claim, "no minimal fat 3-hammock yields a smaller 3-connected truncation",
                                  {"edges": [list(p) for p in h.edges()], "breaker": t.breaker.as_dict()})


def _check_hypotheses(g: Graph, k: int) -> None:
    if k < 5:
        raise HypothesisViolation("k>=5", f"k = {k}")
    if g.n == 0:
        raise HypothesisViolation("nonempty", "empty graph")
    if girth(g) < k:
        raise HypothesisViolation(f"girth>={k}", f"girth is {girth(g)}")
    if g.min_degree < 3:
        raise HypothesisViolation("delta>=3", f"minimum degree is {g.min_degree}")


def _initial(g: Graph, k: int) -> Truncation:
    comp = components(g)[0]
    sub, order = induced(g, comp)
    bt = blocks(sub)
    leaf = bt.blocks[bt.leaves[0]]
    block = _proper(g, [order[v] for v in leaf], k, "leaf block")
    if vertex_connectivity(block.graph, cutoff=3) >= 3:
        return block
    caps = _extreme(block.graph, require_two=False)
    if not caps:
        raise InternalAssertionFailed("ess4.A", "leaf block has no extreme 3-connected component",
                                      {"edges": [list(p) for p in block.graph.edges()]})
    return _from_capping(g, block, caps[0], k)


def _run(t: Truncation, target: ConnClass) -> Truncation:
    while True:
        if not is_k_connected(t.graph, 3):
            raise InternalAssertionFailed("ess4", "intermediate truncation is not 3-connected")
        if t.graph.n < 5 and is_nearly_k_long(t.graph, 5):
            raise InternalAssertionFailed("trun", "3-connected nearly 5-long graph of order < 5")
        cls = connectivity_class(t.graph, 4)
        if cls is ConnClass.INTERNALLY or (cls is ConnClass.ESSENTIALLY and target is ConnClass.ESSENTIALLY):
            return t
        claim = "ess4'" if cls is ConnClass.ESSENTIALLY else ("ess4.C" if t.breaker.kind == "vertex" else "ess4.B")
        t = _smaller(t, claim)


def _postcheck(t: Truncation, internal: bool) -> None:
    bad = truncation_violations(t)
    cls = connectivity_class(t.graph, 4)
    if internal and cls is not ConnClass.INTERNALLY:
        bad.append("internally-4-connected")
    if cls is ConnClass.NEITHER:
        bad.append("essentially-4-connected")
    if t.graph.n < 4:
        bad.append("order>=4")
    if t.breaker.kind == "vertex" and (t.breaker.valence != 3 or t.graph.n < 5):
        bad.append("3-truncation")
    if internal and t.graph.n < 5:
        bad.append("order>=5")
    if not is_nearly_k_long(t.graph, t.k):
        bad.append("nearly-long")
    if bad:
        raise InternalAssertionFailed("trun" if internal else "ess4", f"postcondition failed: {bad}",
                                      {"edges": [list(p) for p in t.host.edges()]})


def ess4_truncation(g: Graph, k: int = 5) -> Truncation:
    """An essentially 4-connected nearly k-long truncation of ``g``."""
    _check_hypotheses(g, k)
    t = _run(_initial(g, k), ConnClass.ESSENTIALLY)
    _postcheck(t, internal=False)
    return t


def internally4_truncation(g: Graph, k: int = 5) -> Truncation:
    """An internally 4-connected nearly k-long truncation of order >= 5 whose
    vertex-breaker, if any, is 3-valent."""
    _check_hypotheses(g, k)
    t = _run(_run(_initial(g, k), ConnClass.ESSENTIALLY), ConnClass.INTERNALLY)
    _postcheck(t, internal=True)
    return t


def postcondition_report(t: Truncation) -> dict[str, bool]:
    cls = connectivity_class(t.graph, 4)
    return {
        "internally-4-connected": cls is ConnClass.INTERNALLY,
        "nearly-long": is_nearly_k_long(t.graph, t.k),
        "order>=5": t.graph.n >= 5,
        "breaker-3-valent": t.breaker.kind != "vertex" or t.graph.degree(t.breaker.vertex) == 3,
    }


def disjoint_short_cycles(g: Graph, k: int) -> tuple[list[int], list[int]] | None:
    """Two vertex-disjoint cycles shorter than k, if the first one found has a disjoint partner."""
    cyc = short_cycle(g, k)
    if cyc is None:
        return None
    rest, order = delete_vertices(g, cyc)
    other = short_cycle(rest, k)
    return None if other is None else (cyc, [order[v] for v in other])


__all__ = [
    "Breaker", "NO_BREAKER", "Truncation", "all_breakers", "nearly_k_long", "is_nearly_k_long",
    "ess4_truncation", "internally4_truncation", "replay_trace", "truncation_violations",
    "postcondition_report", "disjoint_short_cycles",
]
