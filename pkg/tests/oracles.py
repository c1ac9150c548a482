"""Slow, independent reference implementations used to freeze expected values.

They share nothing with the package beyond the Graph container and
networkx, which serves as a second opinion for planarity and isomorphism.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product

import networkx as nx

from k6minor.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def _connected(adj: dict[int, set[int]], verts: set[int]) -> bool:
    if not verts:
        return True
    start = next(iter(verts))
    seen, stack = {start}, [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y in verts and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen == verts


def kappa(g: Graph) -> int:
    """Smallest vertex set whose removal disconnects; n - 1 for complete graphs."""
    adj = {v: set(g.adj[v]) for v in range(g.n)}
    if g.m == g.n * (g.n - 1) // 2:
        return max(g.n - 1, 0)
    for k in range(g.n):
        for s in combinations(range(g.n), k):
            if not _connected(adj, set(range(g.n)) - set(s)):
                return k
    return g.n - 1


# ------------------------------------------------------------ K5 minors


def _canon(h: nx.Graph) -> str:
    return nx.weisfeiler_lehman_graph_hash(h, iterations=4) + f"|{h.number_of_nodes()}|{h.number_of_edges()}"


class K5Oracle:
    """K5 minor test by exhaustive vertex deletion and edge contraction.

    A complete target never needs edge deletions. Graphs are memoized up to
    isomorphism (hash buckets resolved with networkx isomorphism); planar
    graphs are answered directly.
    """

    def __init__(self):
        self.memo: dict[str, list[tuple[nx.Graph, bool]]] = {}

    def __call__(self, g: Graph) -> bool:
        return self._has(to_nx(g))

    def _lookup(self, h):
        for other, ans in self.memo.get(_canon(h), ()):
            if nx.is_isomorphic(h, other):
                return ans
        return None

    def _has(self, h: nx.Graph) -> bool:
        h = nx.Graph(h)
        # peel vertices that cannot be in a K5 model's core after contraction
        changed = True
        while changed:
            changed = False
            for v in list(h):
                if h.degree(v) <= 1:
                    h.remove_node(v)
                    changed = True
                elif h.degree(v) == 2:
                    a, b = h[v]
                    h.remove_node(v)
                    h.add_edge(a, b)
                    changed = True
        h = nx.convert_node_labels_to_integers(h)
        if h.number_of_nodes() < 5 or h.number_of_edges() < 10:
            return False
        if nx.check_planarity(h)[0]:
            return False
        hit = self._lookup(h)
        if hit is not None:
            return hit
        ans = self._search(h)
        self.memo.setdefault(_canon(h), []).append((h, ans))
        return ans

    def _search(self, h: nx.Graph) -> bool:
        deg4 = [v for v in h if h.degree(v) >= 4]
        for five in combinations(deg4, 5):
            if all(h.has_edge(a, b) for a, b in combinations(five, 2)):
                return True
        for u, v in list(h.edges()):
            c = nx.contracted_nodes(h, u, v, self_loops=False)
            if self._has(c):
                return True
        for v in list(h):
            d = h.copy()
            d.remove_node(v)
            if self._has(d):
                return True
        return False


def k5_partition_oracle(g: Graph) -> bool:
    """Direct branch-set enumeration: label every vertex 0..5 (5 = unused)
    with first occurrences of 0..4 in increasing order. Only sensible for n <= 8."""
    adj = {v: set(g.adj[v]) for v in range(g.n)}
    for lab in product(range(6), repeat=g.n):
        firsts = [lab.index(i) if i in lab else None for i in range(5)]
        if None in firsts or firsts != sorted(firsts):
            continue
        sets = [{v for v in range(g.n) if lab[v] == i} for i in range(5)]
        if not all(_connected(adj, s) for s in sets):
            continue
        if all(any(adj[x] & sets[j] for x in sets[i]) for i, j in combinations(range(5), 2)):
            return True
    return False


# ----------------------------------------------------------- subdivisions


def has_subdivision(g: Graph, target: Graph) -> bool:
    """Try every edge subset: suppress 2-valent vertices and compare."""
    tn = to_nx(target)
    edges = list(g.edges())
    for r in range(target.m, len(edges) + 1):
        for sub in combinations(edges, r):
            h = nx.Graph(sub)
            if any(d == 1 for _, d in h.degree()):
                continue
            h = _suppress(h)
            if h is not None and nx.is_isomorphic(h, tn):
                return True
    return False


def _suppress(h: nx.Graph) -> nx.Graph | None:
    h = nx.MultiGraph(h)
    while True:
        two = [v for v in h if h.degree(v) == 2 and len(set(h[v])) == 2]
        if not two:
            break
        v = two[0]
        a, b = list(h[v])
        h.remove_node(v)
        h.add_edge(a, b)
    simple = nx.Graph(h)
    if simple.number_of_edges() != h.number_of_edges():
        return None
    return simple


# ---------------------------------------------------------------- hammocks


def connected_subsets(g: Graph):
    adj = {v: set(g.adj[v]) for v in range(g.n)}
    for r in range(1, g.n + 1):
        for s in combinations(range(g.n), r):
            if _connected(adj, set(s)):
                yield frozenset(s)


def bnd(g: Graph, s) -> frozenset[int]:
    return frozenset(v for v in s if not g.adj[v] <= s)


def fat_hammocks(g: Graph, k: int) -> list[frozenset[int]]:
    """Induced fat k-hammocks, i.e. connected proper vertex sets with k boundary vertices."""
    return [s for s in connected_subsets(g) if len(s) < g.n and len(bnd(g, s)) == k and len(s) >= k + 2]


def minimal_fat_hammocks(g: Graph, k: int) -> set[frozenset[int]]:
    fat = fat_hammocks(g, k)
    return {s for s in fat if not any(o < s for o in fat)}


# -------------------------------------------------------------- 2-cuts


def two_cuts(g: Graph) -> set[frozenset[int]]:
    adj = {v: set(g.adj[v]) for v in range(g.n)}
    return {frozenset(p) for p in combinations(range(g.n), 2)
            if not _connected(adj, set(range(g.n)) - set(p))}


def is_internally_4_connected(g: Graph) -> bool:
    """3-connected and every 3-cut leaves exactly a singleton and one more component."""
    if g.n < 5 or kappa(g) < 3:
        return False
    h = to_nx(g)
    for s in combinations(range(g.n), 3):
        rest = h.subgraph(set(range(g.n)) - set(s))
        comps = list(nx.connected_components(rest))
        if len(comps) > 1 and (len(comps) != 2 or min(map(len, comps)) != 1):
            return False
    return True
