"""Societies (a graph with a cyclic order on some of its vertices), crosses,
and the three-way split: cross, small separation, or disc drawing."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import GraphParseError, Inconsistent
from .graph import Graph, bfs_path, components, parse_edge_list, serialize_edge_list
from .planarity import PlaneEmbedding, planarity


@dataclass(frozen=True)
class Society:
    graph: Graph
    omega: tuple[int, ...]

    def __post_init__(self):
        if len(self.omega) < 4:
            raise ValueError("a society needs at least four boundary vertices")
        if len(set(self.omega)) != len(self.omega):
            raise ValueError("boundary vertices must be distinct")
        if any(not 0 <= v < self.graph.n for v in self.omega):
            raise ValueError("boundary vertex outside the graph")

    @property
    def boundary(self) -> frozenset[int]:
        return frozenset(self.omega)

    def to_text(self) -> str:
        return serialize_edge_list(self.graph) + "omega: " + " ".join(map(str, self.omega)) + "\n"

    @classmethod
    def from_text(cls, text: str) -> Society:
        keep, omega = [], None
        for lineno, line in enumerate(text.splitlines(), start=1):
            if line.strip().startswith("omega:"):
                if omega is not None:
                    raise GraphParseError("second omega line", line=lineno)
                try:
                    omega = tuple(int(x) for x in line.split(":", 1)[1].split())
                except ValueError:
                    raise GraphParseError("non-integer omega entry", line=lineno) from None
                keep.append("")
            else:
                keep.append(line)
        if omega is None:
            raise GraphParseError("missing 'omega:' line")
        g = parse_edge_list("\n".join(keep))
        if omega and max(omega) >= g.n:
            g = Graph.from_edges(max(omega) + 1, g.edges())
        try:
            return cls(g, omega)
        except ValueError as exc:
            raise GraphParseError(str(exc)) from None


def overlap(omega, pair1, pair2) -> bool:
    """True iff s1, s2, t1, t2 occur in this cyclic order along ``omega``."""
    s1, t1 = pair1
    s2, t2 = pair2
    four = [s1, t1, s2, t2]
    if len(set(four)) != 4:
        raise ValueError("overlap needs four distinct vertices")
    pos = {v: i for i, v in enumerate(omega)}
    if any(v not in pos for v in four):
        raise ValueError("vertex not in omega")
    a, b = sorted((pos[s1], pos[t1]))
    inside = [a < pos[v] < b for v in (s2, t2)]
    return inside[0] != inside[1]


@dataclass(frozen=True)
class Cross:
    p1: tuple[int, ...]
    p2: tuple[int, ...]


def verify_cross(s: Society, c: Cross) -> bool:
    g, bd = s.graph, s.boundary
    for p in (c.p1, c.p2):
        if len(p) < 2 or len(set(p)) != len(p):
            return False
        if any(not g.has_edge(a, b) for a, b in zip(p, p[1:])):
            return False
        if p[0] not in bd or p[-1] not in bd or set(p[1:-1]) & bd:
            return False
    if set(c.p1) & set(c.p2):
        return False
    return overlap(s.omega, (c.p1[0], c.p1[-1]), (c.p2[0], c.p2[-1]))


def _quadruples(omega):
    """Overlapping end pairs, lexicographic in boundary positions."""
    for a, b, c, d in combinations(range(len(omega)), 4):
        yield (omega[a], omega[c]), (omega[b], omega[d])


def _paths_avoiding(g: Graph, s: int, t: int, blocked: set[int]):
    """All simple s-t paths whose internal vertices avoid ``blocked``."""
    stack, on = [s], {s}

    def walk(x):
        for y in g.nbrs(x):
            if y == t:
                yield stack + [t]
            elif y not in on and y not in blocked:
                stack.append(y)
                on.add(y)
                yield from walk(y)
                stack.pop()
                on.discard(y)

    yield from walk(s)


def _second_path(g: Graph, s: int, t: int, forbidden: set[int]) -> list[int] | None:
    if g.has_edge(s, t):
        return [s, t]
    allowed = set(range(g.n)) - forbidden
    allowed |= {s, t}
    return bfs_path(g, s, t, allowed)


def find_cross(s: Society) -> Cross | None:
    g, bd = s.graph, set(s.boundary)
    for (s1, t1), (s2, t2) in _quadruples(s.omega):
        block2 = bd - {s2, t2}
        if _second_path(g, s2, t2, block2) is None:
            continue
        if _second_path(g, s1, t1, bd - {s1, t1}) is None:
            continue
        for p in _paths_avoiding(g, s1, t1, bd):
            q = _second_path(g, s2, t2, block2 | set(p))
            if q is not None:
                c = Cross(tuple(p), tuple(q))
                assert verify_cross(s, c)
                return c
    return None


@dataclass(frozen=True)
class Separation:
    """G1 = G - private, G2 = G[separator + private] minus the edges inside
    the separator; the boundary stays in G1."""

    separator: frozenset[int]
    private: frozenset[int]


def verify_separation(s: Society, sep: Separation) -> bool:
    g = s.graph
    d, priv = sep.separator, sep.private
    if len(d) > 3 or len(priv) < 2 or d & priv or priv & s.boundary:
        return False
    outside = set(range(g.n)) - d - priv
    return not any(g.adj[v] & outside for v in priv)


def find_separation(s: Society) -> Separation | None:
    g, bd = s.graph, s.boundary
    for k in range(4):
        for d in combinations(range(g.n), k):
            rest = set(range(g.n)) - set(d)
            private = frozenset().union(*(c for c in components(g, rest) if not c & bd))
            if len(private) >= 2:
                return Separation(frozenset(d), private)
    return None


@dataclass(frozen=True)
class DiscDrawing:
    """Embedding of the graph plus a rim (each boundary step subdivided once)
    and an apex joined to the boundary; vertex ``apex`` is the apex."""

    embedding: PlaneEmbedding
    apex: int


def _rim_apex(s: Society) -> Graph:
    g, om = s.graph, s.omega
    k = len(om)
    edges = list(g.edges())
    for i in range(k):
        r = g.n + i
        edges += [(om[i], r), (r, om[(i + 1) % k])]
    apex = g.n + k
    edges += [(apex, v) for v in om]
    return Graph.from_edges(apex + 1, edges)


def find_disc_drawing(s: Society) -> DiscDrawing | None:
    aug = _rim_apex(s)
    e = planarity(aug)
    if not isinstance(e, PlaneEmbedding):
        return None
    return DiscDrawing(e, aug.n - 1)


def verify_disc_drawing(s: Society, d: DiscDrawing) -> bool:
    aug = _rim_apex(s)
    return d.embedding.graph == aug and d.apex == aug.n - 1 and isinstance(planarity(aug), PlaneEmbedding)


def trichotomy(s: Society) -> Cross | Separation | DiscDrawing:
    """First verified outcome among cross, separation, disc drawing."""
    c = find_cross(s)
    if c is not None:
        return c
    sep = find_separation(s)
    if sep is not None:
        return sep
    d = find_disc_drawing(s)
    if d is not None:
        return d
    raise Inconsistent(f"society with omega {s.omega} has no outcome")


def verify_outcome(s: Society, r) -> bool:
    if isinstance(r, Cross):
        return verify_cross(s, r)
    if isinstance(r, Separation):
        return verify_separation(s, r)
    if isinstance(r, DiscDrawing):
        return verify_disc_drawing(s, r)
    return False
