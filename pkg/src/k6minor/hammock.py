"""k-hammocks and the operations built on them.

A hammock is stored as a vertex set of the host and read as the induced
subgraph. For k = kappa(host), every fat k-hammock has a minimum separator D
as boundary and is D together with some (not all) components of host - D.
Each such hammock contains an *atomic* one: D plus a single non-singleton
component, or D plus two singleton components. Minimal fat hammocks are
therefore exactly the atomic ones containing no other atomic one, which is
what the enumeration below relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import HypothesisViolation, InternalAssertionFailed, NoFatHammock
from .graph import (
    Graph,
    add_vertex,
    delete_edges,
    find_disconnectors,
    induced,
    is_connected_subset,
    is_k_connected,
    vertex_connectivity,
)


def boundary(g: Graph, s) -> frozenset[int]:
    """Members of ``s`` with a neighbour outside ``s``."""
    s = set(s)
    return frozenset(v for v in s if not g.adj[v] <= s)


@dataclass(frozen=True)
class Hammock:
    host: Graph
    vertices: frozenset[int]

    def __post_init__(self):
        if not is_connected_subset(self.host, self.vertices):
            raise ValueError("hammock vertices must induce a connected subgraph")

    @cached_property
    def boundary(self) -> frozenset[int]:
        return boundary(self.host, self.vertices)

    @property
    def interior(self) -> frozenset[int]:
        return self.vertices - self.boundary

    @property
    def k(self) -> int:
        return len(self.boundary)

    @property
    def kind(self) -> str:
        extra = len(self.vertices) - self.k
        return "trivial" if extra == 0 else "degenerate" if extra == 1 else "fat"

    @property
    def fat(self) -> bool:
        return len(self.vertices) >= self.k + 2

    @property
    def order(self) -> list[int]:
        """Host ids in local order: local vertex i is host vertex order[i]."""
        return sorted(self.vertices)

    def graph(self) -> Graph:
        return induced(self.host, self.vertices)[0]

    def key(self) -> tuple[int, ...]:
        return tuple(self.order)

    def as_dict(self) -> dict:
        return {"vertices": self.order, "boundary": sorted(self.boundary), "kind": self.kind}


@dataclass(frozen=True)
class Capping:
    graph: Graph
    window: tuple[int, int]  # local ids
    virtual_edge: bool
    order: tuple[int, ...]  # local -> host ids
    hammock: Hammock


def _require_kappa(g: Graph, k: int) -> None:
    kappa = vertex_connectivity(g)
    if k != kappa:
        raise HypothesisViolation("k=kappa", f"hammock operations need k = kappa(g) = {kappa}, got k = {k}")


def atomic_fat_hammocks(g: Graph, k: int) -> list[Hammock]:
    """Atomic fat k-hammocks for k = kappa(g), sorted by vertex tuple.

    Requires that every k-disconnector is a minimum separator, which holds
    when k = kappa(g).
    """
    found: set[frozenset[int]] = set()
    for d in find_disconnectors(g, k):
        comps = d.components_after
        big = [c for c in comps if len(c) >= 2]
        small = sorted(next(iter(c)) for c in comps if len(c) == 1)
        for c in big:
            found.add(d.vertices | c)
        for a, b in combinations(small, 2):
            if len(comps) >= 3:
                found.add(d.vertices | {a, b})
    out = [Hammock(g, s) for s in found]
    out = [h for h in out if h.k == k and h.fat]
    out.sort(key=Hammock.key)
    return out


def minimal_fat_hammocks(g: Graph, k: int) -> list[Hammock]:
    """Every minimal fat k-hammock of g (k = kappa(g)), sorted."""
    atoms = atomic_fat_hammocks(g, k)
    return [h for h in atoms if not any(o.vertices < h.vertices for o in atoms)]


def _has_nontrivial(g: Graph, k: int) -> bool:
    return any(not d.trivial for d in find_disconnectors(g, k))


def _check_fat_hypotheses(g: Graph, k: int) -> None:
    _require_kappa(g, k)
    if g.min_degree < 3:
        raise HypothesisViolation("delta>=3", f"minimum degree is {g.min_degree}")
    if not _has_nontrivial(g, k):
        raise NoFatHammock(f"every {k}-disconnector is trivial")


def descend(h: Hammock) -> Hammock:
    """Replace ``h`` by its lexicographically least proper fat k-hammock until none is left."""
    atoms = atomic_fat_hammocks(h.host, h.k)
    cur = h
    while True:
        inside = [a for a in atoms if a.vertices < cur.vertices]
        if not inside:
            return cur
        cur = inside[0]


def minimal_fat_hammock(g: Graph, k: int, avoid: tuple[int, int] | None = None) -> Hammock:
    """A minimal fat k-hammock; with ``avoid`` = e, one that contains e only
    when both ends of e are on its boundary."""
    _check_fat_hypotheses(g, k)
    atoms = atomic_fat_hammocks(g, k)
    if not atoms:
        raise InternalAssertionFailed("each", "nontrivial disconnector but no fat hammock")
    if avoid is None:
        return descend(atoms[0])
    u, v = avoid
    for h in minimal_fat_hammocks(g, k):
        if not ({u, v} <= h.vertices) or {u, v} <= h.boundary:
            return h
    raise InternalAssertionFailed("fat3", f"no minimal fat {k}-hammock avoids edge {avoid}",
                                  {"edges": list(g.edges()), "avoid": list(avoid)})


def two_disjoint_minimal_fat(g: Graph, k: int) -> tuple[Hammock, Hammock]:
    _check_fat_hypotheses(g, k)
    mins = minimal_fat_hammocks(g, k)
    for a, b in combinations(mins, 2):
        if not a.interior & b.interior:
            return a, b
    raise InternalAssertionFailed("fat1", "fewer than two minimal fat hammocks with disjoint interiors",
                                  {"edges": list(g.edges())})


def cap(h: Hammock) -> Capping:
    if h.k != 2:
        raise ValueError(f"capping needs a 2-hammock, got k = {h.k}")
    sub, order = induced(h.host, h.vertices)
    local = {v: i for i, v in enumerate(order)}
    a, b = sorted(local[v] for v in h.boundary)
    virtual = not sub.has_edge(a, b)
    graph = Graph.from_edges(sub.n, list(sub.edges()) + [(a, b)])
    return Capping(graph, (a, b), virtual, tuple(order), h)


def augment(h: Hammock, drop_edge: tuple[int, int] | None = None) -> Graph:
    """Hammock graph (local ids, see ``Hammock.order``) plus vertex ``|h|``
    joined to the boundary. ``drop_edge`` (host ids) is removed first."""
    sub, order = induced(h.host, h.vertices)
    local = {v: i for i, v in enumerate(order)}
    if drop_edge is not None:
        u, v = drop_edge
        sub = delete_edges(sub, [(local[u], local[v])])
    return add_vertex(sub, [local[v] for v in h.boundary])


def extreme_3_components(g: Graph) -> list[Capping]:
    """3-connected cappings of minimal fat 2-hammocks (kappa = 2, delta >= 3)."""
    if vertex_connectivity(g) != 2:
        raise HypothesisViolation("kappa=2", "extreme components need a graph with connectivity 2")
    if g.min_degree < 3:
        raise HypothesisViolation("delta>=3", f"minimum degree is {g.min_degree}")
    return _extreme(g, require_two=True)


def _extreme(g: Graph, require_two: bool) -> list[Capping]:
    caps = [cap(h) for h in minimal_fat_hammocks(g, 2)]
    caps = [c for c in caps if is_k_connected(c.graph, 3)]
    if require_two and not any(not a.hammock.interior & b.hammock.interior for a, b in combinations(caps, 2)):
        raise InternalAssertionFailed("extreme", "fewer than two disjoint extreme 3-connected components",
                                      {"edges": list(g.edges())})
    return caps

