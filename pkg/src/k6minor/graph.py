"""Simple undirected graphs over dense integer ids, plus the structural
primitives everything else is built on: girth, vertex connectivity,
disconnectors, blocks, contraction and text formats.

Graphs are immutable. Every operation that removes or merges vertices
returns a new graph whose ids are again ``0..n-1``; the order of surviving
vertices is preserved and ``labels`` carries external names across.
"""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable, Sequence

from .errors import GraphParseError

INF = math.inf


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]
    labels: tuple[Hashable, ...] | None = None

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels length does not match n")
        for v, nb in enumerate(self.adj):
            if v in nb:
                raise ValueError(f"self-loop at {v}")
            for w in nb:
                if not 0 <= w < self.n or v not in self.adj[w]:
                    raise ValueError(f"asymmetric or out-of-range edge {v}-{w}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> Graph:
        nb: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            nb[u].add(v)
            nb[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nb), None if labels is None else tuple(labels))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, tuple(frozenset() for _ in range(n)))

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    @cached_property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    @cached_property
    def _edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v)

    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @cached_property
    def _sorted(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(s)) for s in self.adj)

    def nbrs(self, v: int) -> tuple[int, ...]:
        """Neighbours of ``v`` in increasing order."""
        return self._sorted[v]

    @cached_property
    def masks(self) -> tuple[int, ...]:
        out = []
        for s in self.adj:
            m = 0
            for w in s:
                m |= 1 << w
            out.append(m)
        return tuple(out)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def min_degree(self) -> int:
        return min((len(s) for s in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def label(self, v: int) -> Hashable:
        return v if self.labels is None else self.labels[v]

    def with_labels(self, labels: Sequence[Hashable] | None) -> Graph:
        return Graph(self.n, self.adj, None if labels is None else tuple(labels))


# ---------------------------------------------------------------- builders


def induced(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``vertices``; returns it with the new->old id map."""
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    adj = tuple(frozenset(index[w] for w in g.adj[v] if w in index) for v in keep)
    labels = None if g.labels is None else tuple(g.labels[v] for v in keep)
    return Graph(len(keep), adj, labels), keep


def delete_vertices(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    drop = set(vertices)
    return induced(g, (v for v in range(g.n) if v not in drop))


def delete_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    nb = [set(s) for s in g.adj]
    for u, v in edges:
        nb[u].discard(v)
        nb[v].discard(u)
    return Graph(g.n, tuple(frozenset(s) for s in nb), g.labels)


def add_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    nb = [set(s) for s in g.adj]
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at {u}")
        nb[u].add(v)
        nb[v].add(u)
    return Graph(g.n, tuple(frozenset(s) for s in nb), g.labels)


def add_vertex(g: Graph, neighbours: Iterable[int], label: Hashable = None) -> Graph:
    """Append vertex ``g.n`` adjacent to ``neighbours``."""
    new = g.n
    nb = [set(s) for s in g.adj] + [set(neighbours)]
    for w in nb[new]:
        nb[w].add(new)
    labels = None
    if g.labels is not None or label is not None:
        labels = tuple(g.label(v) for v in range(g.n)) + (label,)
    return Graph(g.n + 1, tuple(frozenset(s) for s in nb), labels)


def quotient(g: Graph, parts: Sequence[Iterable[int]]) -> Graph:
    """Merge each part into one vertex (part ``i`` becomes vertex ``i``).

    Vertices outside every part are deleted; parallel edges are merged and
    edges inside a part disappear, so the result is simple.
    """
    owner: dict[int, int] = {}
    for i, part in enumerate(parts):
        for v in part:
            if v in owner:
                raise ValueError(f"vertex {v} in two parts")
            owner[v] = i
    nb: list[set[int]] = [set() for _ in parts]
    for u, v in g.edges():
        a, b = owner.get(u), owner.get(v)
        if a is not None and b is not None and a != b:
            nb[a].add(b)
            nb[b].add(a)
    return Graph(len(parts), tuple(frozenset(s) for s in nb))


def contract_map(g: Graph, h: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """G/H together with the old->new id map (all of ``h`` maps to one id)."""
    hs = set(h)
    if not hs:
        raise ValueError("cannot contract an empty set")
    if not is_connected_subset(g, hs):
        raise ValueError("contracted set does not induce a connected subgraph")
    rep = min(hs)
    order = [v for v in range(g.n) if v not in hs or v == rep]
    new_id = {v: i for i, v in enumerate(order)}
    mapping = {v: new_id[rep] if v in hs else new_id[v] for v in range(g.n)}
    parts = [[v] if v != rep else sorted(hs) for v in order]
    out = quotient(g, parts)
    if g.labels is not None:
        out = out.with_labels([g.labels[v] for v in order])
    return out, mapping


def contract(g: Graph, h: Iterable[int]) -> tuple[Graph, int]:
    """Contract the connected set ``h``; returns G/H and the merged vertex id."""
    hs = set(h)
    out, mapping = contract_map(g, hs)
    return out, mapping[min(hs)]


def disjoint_union(a: Graph, b: Graph) -> Graph:
    return Graph.from_edges(a.n + b.n, list(a.edges()) + [(u + a.n, v + a.n) for u, v in b.edges()])


# ---------------------------------------------------------- basic queries


def components(g: Graph, within: Iterable[int] | None = None) -> list[frozenset[int]]:
    """Connected components (of ``g[within]`` when given), ordered by least vertex."""
    alive = set(range(g.n)) if within is None else set(within)
    seen: set[int] = set()
    out = []
    for s in sorted(alive):
        if s in seen:
            continue
        comp = {s}
        q = [s]
        while q:
            u = q.pop()
            for w in g.adj[u]:
                if w in alive and w not in comp:
                    comp.add(w)
                    q.append(w)
        seen |= comp
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def is_connected_subset(g: Graph, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    return bool(vs) and len(components(g, vs)) == 1


def bfs_distances(g: Graph, source: int, within: set[int] | None = None) -> dict[int, int]:
    dist = {source: 0}
    q = deque([source])
    while q:
        u = q.popleft()
        for w in g.adj[u]:
            if w not in dist and (within is None or w in within):
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def bfs_path(g: Graph, s: int, t: int, allowed: set[int] | None = None) -> list[int] | None:
    """Shortest s-t path whose interior lies in ``allowed`` (all vertices if None)."""
    if s == t:
        return [s]
    parent = {s: s}
    q = deque([s])
    while q:
        u = q.popleft()
        for w in g.nbrs(u):
            if w in parent:
                continue
            if w == t:
                parent[w] = u
                path = [t]
                while path[-1] != s:
                    path.append(parent[path[-1]])
                return path[::-1]
            if allowed is None or w in allowed:
                parent[w] = u
                q.append(w)
    return None


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = INF
    for r in range(g.n):
        dist = {r: 0}
        parent = {r: -1}
        q = deque([r])
        while q:
            u = q.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def short_cycle(g: Graph, below: float) -> list[int] | None:
    """Some cycle of length < ``below`` as a vertex list, or None."""
    best: list[int] | None = None
    for r in range(g.n):
        dist = {r: 0}
        parent = {r: -1}
        q = deque([r])
        while q:
            u = q.popleft()
            if 2 * dist[u] + 1 >= below:
                break
            for w in g.nbrs(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif parent[u] != w and dist[u] + dist[w] + 1 < below:
                    cyc = _close_cycle(parent, u, w)
                    if cyc is not None and len(cyc) < below:
                        if best is None or len(cyc) < len(best):
                            best = cyc
                            below = len(cyc)
        if best is not None and len(best) == 3:
            break
    return best


def _close_cycle(parent: dict[int, int], u: int, w: int) -> list[int] | None:
    pu = [u]
    while parent[pu[-1]] != -1:
        pu.append(parent[pu[-1]])
    pw = [w]
    while parent[pw[-1]] != -1:
        pw.append(parent[pw[-1]])
    # strip the shared root-side prefix
    while len(pu) > 1 and len(pw) > 1 and pu[-2] == pw[-2]:
        pu.pop()
        pw.pop()
    if pu[-1] != pw[-1]:
        return None
    cyc = pu + pw[-2::-1]
    return cyc if len(set(cyc)) == len(cyc) and len(cyc) >= 3 else None


# ------------------------------------------------------------ connectivity


def _local_connectivity(g: Graph, s: int, t: int, cutoff: float = INF) -> int:
    """Maximum number of internally disjoint s-t paths for non-adjacent s, t.

    Unit-capacity augmenting paths on the vertex-split network: node 2v is
    v_in, 2v+1 is v_out, with an internal arc v_in -> v_out of capacity 1.
    """
    inner: set[int] = set()  # vertices whose internal arc carries flow
    flow: set[tuple[int, int]] = set()  # saturated arcs u_out -> v_in, as (u, v)
    source, sink = 2 * s + 1, 2 * t
    nbrs = g.nbrs
    paths = 0
    while paths < cutoff:
        parent: dict[int, int | None] = {source: None}
        q = deque([source])
        while q and sink not in parent:
            x = q.popleft()
            v, is_out = divmod(x, 2)
            if is_out:
                for w in nbrs(v):
                    y = 2 * w
                    if y not in parent and (v, w) not in flow:
                        parent[y] = x
                        q.append(y)
                if v in inner and 2 * v not in parent:
                    parent[2 * v] = x
                    q.append(2 * v)
            else:
                if v not in inner and v != t and x + 1 not in parent:
                    parent[x + 1] = x
                    q.append(x + 1)
                for u in nbrs(v):
                    y = 2 * u + 1
                    if (u, v) in flow and y not in parent:
                        parent[y] = x
                        q.append(y)
        if sink not in parent:
            break
        y = sink
        while parent[y] is not None:
            x = parent[y]
            a, a_out = divmod(x, 2)
            b, _ = divmod(y, 2)
            if a_out:
                if a == b:
                    inner.discard(a)  # undo internal arc
                else:
                    flow.add((a, b))
            else:
                if a == b:
                    inner.add(a)
                else:
                    flow.discard((b, a))  # undo arc b_out -> a_in
            y = x
        paths += 1
    return paths


def local_connectivity(g: Graph, s: int, t: int, cutoff: float = INF) -> int:
    """kappa(s, t): internally disjoint s-t paths (s, t must be non-adjacent)."""
    if s == t or g.has_edge(s, t):
        raise ValueError("local connectivity needs distinct non-adjacent vertices")
    return _local_connectivity(g, s, t, cutoff)


def vertex_connectivity(g: Graph, cutoff: float = INF) -> int:
    """kappa(g) by max-flow; complete graphs give n-1, disconnected graphs 0.

    With ``cutoff`` the search stops once the answer is known to be at least
    ``cutoff`` and returns ``cutoff`` in that case.
    """
    n = g.n
    if n <= 1 or not is_connected(g):
        return 0
    if g.m == n * (n - 1) // 2:
        return min(n - 1, cutoff)
    v = min(range(n), key=lambda x: (g.degree(x), x))
    k = min(g.degree(v), cutoff)
    for w in range(n):
        if w != v and not g.has_edge(v, w):
            k = min(k, _local_connectivity(g, v, w, k))
            if k == 0:
                return 0
    for x, y in combinations(g.nbrs(v), 2):
        if not g.has_edge(x, y):
            k = min(k, _local_connectivity(g, x, y, k))
    return int(k)


def is_k_connected(g: Graph, k: int) -> bool:
    if k <= 0:
        return True
    if g.n <= k:
        return False
    return vertex_connectivity(g, cutoff=k) >= k


def cut_vertices(g: Graph, removed: Iterable[int] = ()) -> set[int]:
    """Articulation points of ``g - removed`` (per component)."""
    dead = set(removed)
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    result: set[int] = set()
    counter = 0
    for root in range(g.n):
        if root in dead or root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        stack = [(root, -1, iter(g.nbrs(root)))]
        while stack:
            v, par, it = stack[-1]
            for w in it:
                if w in dead:
                    continue
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(g.nbrs(w))))
                    break
                if w != par and disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if p == root:
                        root_children += 1
                    elif low[v] >= disc[p]:
                        result.add(p)
        if root_children >= 2:
            result.add(root)
    return result


class DisconnectorKind(str, enum.Enum):
    TRIVIAL = "trivial"
    NONTRIVIAL = "nontrivial"


@dataclass(frozen=True)
class Disconnector:
    vertices: frozenset[int]
    kind: DisconnectorKind
    components_after: tuple[frozenset[int], ...]

    @property
    def trivial(self) -> bool:
        return self.kind is DisconnectorKind.TRIVIAL


def _make_disconnector(g: Graph, s: frozenset[int]) -> Disconnector:
    comps = tuple(components(g, set(range(g.n)) - s))
    kind = DisconnectorKind.TRIVIAL if any(len(c) == 1 for c in comps) else DisconnectorKind.NONTRIVIAL
    return Disconnector(s, kind, comps)


def _disconnects(g: Graph, s: set[int]) -> bool:
    rest = set(range(g.n)) - s
    return len(rest) >= 2 and len(components(g, rest)) >= 2


def find_disconnectors(g: Graph, k: int) -> list[Disconnector]:
    """All inclusion-minimal vertex sets of size exactly ``k`` whose removal
    disconnects ``g``, sorted lexicographically.

    A minimal cut S is found from A = S - max(S): g - A is connected and
    max(S) is one of its articulation points.
    """
    if k < 1 or k > g.n - 2:
        return []
    kappa = vertex_connectivity(g, cutoff=k + 1)
    if kappa > k:
        return []
    need_minimality = kappa < k
    found: set[frozenset[int]] = set()
    for a in combinations(range(g.n), k - 1):
        aset = set(a)
        if a and not is_connected_subset(g, set(range(g.n)) - aset):
            continue
        top = a[-1] if a else -1
        for c in cut_vertices(g, aset):
            if c > top:
                found.add(frozenset(aset | {c}))
    out = []
    for s in sorted(found, key=sorted):
        if need_minimality and any(
            _disconnects(g, set(sub)) for r in range(1, k) for sub in combinations(sorted(s), r)
        ):
            continue
        out.append(_make_disconnector(g, s))
    return out


class ConnClass(str, enum.Enum):
    INTERNALLY = "internally"
    ESSENTIALLY = "essentially"
    NEITHER = "neither"


def connectivity_class(g: Graph, k: int) -> ConnClass:
    """Classify against essential / internal k-connectivity.

    Both notions presuppose (k-1)-connectivity; on top of that essentially
    k-connected means every (k-1)-disconnector isolates a vertex, and
    internally k-connected additionally means it leaves exactly two
    components. INTERNALLY is reported in preference to ESSENTIALLY.
    """
    if not is_k_connected(g, k - 1) and not (g.n == k - 1 and g.m == g.n * (g.n - 1) // 2):
        return ConnClass.NEITHER
    cuts = find_disconnectors(g, k - 1)
    if not all(d.trivial for d in cuts):
        return ConnClass.NEITHER
    if all(len(d.components_after) == 2 for d in cuts):
        return ConnClass.INTERNALLY
    return ConnClass.ESSENTIALLY


def is_internally_k_connected(g: Graph, k: int) -> bool:
    return connectivity_class(g, k) is ConnClass.INTERNALLY


def is_essentially_k_connected(g: Graph, k: int) -> bool:
    return connectivity_class(g, k) is not ConnClass.NEITHER


# ------------------------------------------------------------------ blocks


@dataclass(frozen=True)
class BlockTree:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]

    def is_leaf(self, i: int) -> bool:
        return len(self.blocks) == 1 or len(self.blocks[i] & self.cut_vertices) <= 1

    @property
    def leaves(self) -> list[int]:
        return [i for i in range(len(self.blocks)) if self.is_leaf(i)]

    def tree_edges(self) -> list[tuple[int, int]]:
        """Block-cut tree edges as (block index, cut vertex) pairs."""
        return [(i, c) for i, b in enumerate(self.blocks) for c in sorted(b & self.cut_vertices)]


def blocks(g: Graph) -> BlockTree:
    """Blocks (maximal 2-connected pieces and bridges) of a connected graph."""
    if not is_connected(g):
        raise ValueError("blocks() needs a connected graph")
    if g.n == 1:
        return BlockTree((frozenset({0}),), frozenset())
    disc: dict[int, int] = {0: 0}
    low: dict[int, int] = {0: 0}
    counter = 1
    edge_stack: list[tuple[int, int]] = []
    found: list[frozenset[int]] = []
    stack = [(0, -1, iter(g.nbrs(0)))]
    while stack:
        v, par, it = stack[-1]
        for w in it:
            if w not in disc:
                disc[w] = low[w] = counter
                counter += 1
                edge_stack.append((v, w))
                stack.append((w, v, iter(g.nbrs(w))))
                break
            if w != par and disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        else:
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] >= disc[p]:
                    comp: set[int] = set()
                    while True:
                        e = edge_stack.pop()
                        comp.update(e)
                        if e == (p, v):
                            break
                    found.append(frozenset(comp))
    found.sort(key=lambda b: sorted(b))
    count: dict[int, int] = {}
    for b in found:
        for v in b:
            count[v] = count.get(v, 0) + 1
    cuts = frozenset(v for v, c in count.items() if c > 1)
    return BlockTree(tuple(found), cuts)


# ------------------------------------------------------------ text formats


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    edges = []
    declared = n
    offset = 0
    seen_edge = False
    for lineno, raw in enumerate(text.splitlines(keepends=True), start=1):
        line = raw.split("#", 1)[0].strip()
        here = offset
        offset += len(raw.encode())
        if not line:
            continue
        if line.startswith("n="):
            if seen_edge or declared is not None and n is None:
                raise GraphParseError("misplaced n= header", line=lineno, offset=here)
            try:
                declared = int(line[2:])
            except ValueError:
                raise GraphParseError(f"bad vertex count {line[2:]!r}", line=lineno, offset=here) from None
            if declared < 0:
                raise GraphParseError("negative vertex count", line=lineno, offset=here)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", line=lineno, offset=here)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"non-integer vertex in {line!r}", line=lineno, offset=here) from None
        if u < 0 or v < 0:
            raise GraphParseError("negative vertex id", line=lineno, offset=here)
        if u == v:
            raise GraphParseError(f"self-loop at {u}", line=lineno, offset=here)
        if declared is not None and max(u, v) >= declared:
            raise GraphParseError(f"vertex {max(u, v)} exceeds n={declared}", line=lineno, offset=here)
        seen_edge = True
        edges.append((u, v))
    count = declared if declared is not None else (max((max(e) for e in edges), default=-1) + 1)
    return Graph.from_edges(count, edges)


def serialize_edge_list(g: Graph) -> str:
    lines = [f"n={g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def _g6_size(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def serialize_graph6(g: Graph) -> str:
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(chr(int("".join(map(str, bits[i:i + 6])), 2) + 63) for i in range(0, len(bits), 6))
    return _g6_size(g.n) + body


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(">>graph6<<"):
        s = s[10:]
        base = 10
    if not s:
        raise GraphParseError("empty graph6 string", offset=base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphParseError(f"invalid graph6 byte {ch!r}", offset=base + i)
    if s[0] != "~":
        n, pos = ord(s[0]) - 63, 1
    elif len(s) > 1 and s[1] == "~":
        if len(s) < 8:
            raise GraphParseError("truncated graph6 size", offset=base + len(s))
        n = 0
        for ch in s[2:8]:
            n = (n << 6) | (ord(ch) - 63)
        pos = 8
    else:
        if len(s) < 4:
            raise GraphParseError("truncated graph6 size", offset=base + len(s))
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        pos = 4
    need = (n * (n - 1) // 2 + 5) // 6
    if len(s) - pos != need:
        raise GraphParseError(f"graph6 body has {len(s) - pos} bytes, expected {need}", offset=base + pos)
    bits = []
    for ch in s[pos:]:
        val = ord(ch) - 63
        bits.extend((val >> (5 - b)) & 1 for b in range(6))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


FORMATS = ("edgelist", "graph6")


def parse_graph(text: str, format: str = "edgelist") -> Graph:
    if format in ("edgelist", "edge-list"):
        return parse_edge_list(text)
    if format == "graph6":
        return parse_graph6(text)
    raise ValueError(f"unknown format {format!r}")


def serialize_graph(g: Graph, format: str = "edgelist") -> str:
    if format in ("edgelist", "edge-list"):
        return serialize_edge_list(g)
    if format == "graph6":
        return serialize_graph6(g)
    raise ValueError(f"unknown format {format!r}")
