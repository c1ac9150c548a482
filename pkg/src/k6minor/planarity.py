"""Plane embeddings, Kuratowski witnesses, and the face-counting and
discharging arguments for nearly long plane graphs.

The planarity test itself is networkx's left-right algorithm. Everything
it returns is re-validated here: embeddings by tracing faces from the
rotation system and checking Euler's formula per component, witnesses by
suppressing degree-2 vertices and matching K5 or K3,3.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

import networkx as nx

from . import canon
from .errors import HypothesisViolation, InternalAssertionFailed, NotNearlyLong
from .generators import complete, complete_bipartite
from .graph import Graph, blocks, components, girth, is_connected, is_internally_k_connected, is_k_connected


@dataclass(frozen=True)
class PlaneEmbedding:
    graph: Graph
    rotation: tuple[tuple[int, ...], ...]  # clockwise neighbour order per vertex
    faces: tuple[tuple[int, ...], ...]  # closed walks, each listed once
    outer: int

    @property
    def outer_face(self) -> tuple[int, ...]:
        return self.faces[self.outer]

    def face_sets(self) -> list[frozenset[int]]:
        return [frozenset(f) for f in self.faces]

    def with_outer(self, index: int) -> PlaneEmbedding:
        if not 0 <= index < len(self.faces):
            raise IndexError(f"no face {index}")
        return PlaneEmbedding(self.graph, self.rotation, self.faces, index)

    def cofacial(self, u: int, v: int) -> bool:
        return any(u in f and v in f for f in self.face_sets())

    def faces_containing(self, vertices) -> list[int]:
        vs = set(vertices)
        return [i for i, f in enumerate(self.face_sets()) if vs <= f]

    def to_json(self) -> str:
        return json.dumps({"rotation": {str(v): list(r) for v, r in enumerate(self.rotation)},
                           "outer": list(self.outer_face)}, sort_keys=True)


@dataclass(frozen=True)
class NonplanarWitness:
    kind: str  # "K5" or "K33"
    edges: tuple[tuple[int, int], ...]
    branch_vertices: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]


def trace_faces(g: Graph, rotation) -> list[tuple[int, ...]]:
    """Faces of a rotation system. The walk leaving half-edge (v, w) continues
    with (w, x) where x follows v counter-clockwise around w."""
    pos = [{w: i for i, w in enumerate(rot)} for rot in rotation]
    seen: set[tuple[int, int]] = set()
    faces = []
    for v in range(g.n):
        for w in rotation[v]:
            if (v, w) in seen:
                continue
            face = []
            a, b = v, w
            while (a, b) not in seen:
                seen.add((a, b))
                face.append(a)
                rot = rotation[b]
                x = rot[(pos[b][a] - 1) % len(rot)]
                a, b = b, x
            faces.append(tuple(face))
    return faces


def embedding_from_rotation(g: Graph, rotation, outer: int | None = None) -> PlaneEmbedding:
    rotation = tuple(tuple(r) for r in rotation)
    for v in range(g.n):
        if sorted(rotation[v]) != sorted(g.adj[v]):
            raise ValueError(f"rotation at {v} does not list its neighbours")
    faces = trace_faces(g, rotation)
    _check_euler(g, faces)
    if outer is None:
        outer = max(range(len(faces)), key=lambda i: (len(faces[i]), -i)) if faces else 0
    return PlaneEmbedding(g, rotation, tuple(faces), outer)


def _check_euler(g: Graph, faces) -> None:
    for comp in components(g):
        e = sum(len(g.adj[v]) for v in comp) // 2
        if e == 0:
            continue
        f = sum(1 for face in faces if face[0] in comp)
        if len(comp) - e + f != 2:
            raise ValueError(f"rotation system is not planar: V-E+F = {len(comp) - e + f} on a component")


def _nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def is_planar(g: Graph) -> bool:
    return nx.check_planarity(_nx(g))[0]


def planarity(g: Graph, outer: int | None = None) -> PlaneEmbedding | NonplanarWitness:
    """An embedding (validated by Euler) or a Kuratowski subdivision (validated)."""
    ok, cert = nx.check_planarity(_nx(g), counterexample=True)
    if ok:
        rotation = [tuple(cert.neighbors_cw_order(v)) if g.adj[v] else () for v in range(g.n)]
        return embedding_from_rotation(g, rotation, outer)
    edges = tuple(sorted(tuple(sorted(e)) for e in cert.edges()))
    witness = classify_subdivision(edges)
    if witness is None:
        raise InternalAssertionFailed("planarity", "Kuratowski certificate failed validation")
    return witness


def classify_subdivision(edges) -> NonplanarWitness | None:
    """Recognise ``edges`` as a subdivided K5 or K3,3 (nothing else)."""
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    if any(len(s) < 2 for s in adj.values()):
        return None
    branch = sorted(v for v, s in adj.items() if len(s) >= 3)
    bset = set(branch)
    paths = []
    used: set[tuple[int, int]] = set()
    for b in branch:
        for w in sorted(adj[b]):
            if (b, w) in used:
                continue
            walk = [b, w]
            used.add((b, w))
            while walk[-1] not in bset:
                nxt = [x for x in adj[walk[-1]] if x != walk[-2]]
                if len(nxt) != 1:
                    return None
                walk.append(nxt[0])
            used.add((walk[-1], walk[-2]))
            paths.append(tuple(walk))
    if len(edges) != sum(len(p) - 1 for p in paths):
        return None  # stray cycles without branch vertices
    index = {v: i for i, v in enumerate(branch)}
    pairs = [tuple(sorted((index[p[0]], index[p[-1]]))) for p in paths]
    if len(set(pairs)) != len(pairs) or any(a == b for a, b in pairs):
        return None
    core = Graph.from_edges(len(branch), pairs)
    if canon.is_isomorphic(core, complete(5)):
        kind = "K5"
    elif canon.is_isomorphic(core, complete_bipartite(3, 3)):
        kind = "K33"
    else:
        return None
    return NonplanarWitness(kind, tuple(sorted(edges)), tuple(branch), tuple(paths))


def check_witness(g: Graph, w: NonplanarWitness) -> bool:
    return all(g.has_edge(u, v) for u, v in w.edges) and classify_subdivision(w.edges) is not None


# ------------------------------------------------------- counting arguments


@dataclass(frozen=True)
class Inequality:
    label: str
    lhs: Fraction
    rhs: Fraction
    relation: str  # ">=" or "<="

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs if self.relation == ">=" else self.lhs <= self.rhs

    @property
    def slack(self) -> Fraction:
        return self.lhs - self.rhs if self.relation == ">=" else self.rhs - self.lhs


@dataclass(frozen=True)
class CountReport:
    vertices: int
    edges: int
    faces: int
    special: tuple[int, ...]
    chain: tuple[Inequality, ...]

    def as_dict(self) -> dict:
        return {
            "V": self.vertices, "E": self.edges, "F": self.faces, "S": list(self.special),
            "chain": [{"label": q.label, "lhs": str(q.lhs), "rhs": str(q.rhs), "relation": q.relation,
                       "holds": q.holds} for q in self.chain],
        }


def _require(cond: bool, clause: str, message: str) -> None:
    if not cond:
        raise HypothesisViolation(clause, message)


def check_two_valent_bound(g: Graph) -> CountReport:
    """2-connected plane graphs of girth >= 6 have at least six 2-valent vertices."""
    _require(is_k_connected(g, 2), "2-connected", "graph is not 2-connected")
    _require(girth(g) >= 6, "girth>=6", f"girth is {girth(g)}")
    emb = planarity(g)
    _require(isinstance(emb, PlaneEmbedding), "planar", "graph is not planar")
    V, E, F = g.n, g.m, len(emb.faces)
    S = tuple(v for v in range(g.n) if g.degree(v) == 2)
    s = len(S)
    chain = (
        Inequality("euler E >= V + F - 2", Fraction(E), Fraction(V + F - 2), ">="),
        Inequality("euler E <= V + F - 2", Fraction(E), Fraction(V + F - 2), "<="),
        Inequality("degrees 2E >= 3(V-|S|) + 2|S|", Fraction(2 * E), Fraction(3 * (V - s) + 2 * s), ">="),
        Inequality("faces 2E >= 6F", Fraction(2 * E), Fraction(6 * F), ">="),
        Inequality("combined V <= 2F + |S| - 4", Fraction(V), Fraction(2 * F + s - 4), "<="),
        Inequality("combined V >= 2F + 2", Fraction(V), Fraction(2 * F + 2), ">="),
        Inequality("bound |S| >= 6", Fraction(s), Fraction(6), ">="),
    )
    report = CountReport(V, E, F, S, chain)
    bad = [q.label for q in chain if not q.holds]
    if bad:
        raise InternalAssertionFailed("dis:girth6", f"failed {bad}", {"edges": list(g.edges())})
    return report


def _nearly_long_or_violation(g: Graph, k: int):
    from .truncation import nearly_k_long

    try:
        return nearly_k_long(g, k)
    except NotNearlyLong as exc:
        raise HypothesisViolation(f"nearly-{k}-long", str(exc)) from None


@dataclass(frozen=True)
class NonplanarVerdict:
    witness: NonplanarWitness
    breaker: object


def check_nonplanar_girth6(g: Graph) -> NonplanarVerdict:
    """A nearly 6-long internally 4-connected graph must be nonplanar."""
    breaker = _nearly_long_or_violation(g, 6)
    _require(is_internally_k_connected(g, 4), "internally-4-connected", "graph is not internally 4-connected")
    out = planarity(g)
    if isinstance(out, PlaneEmbedding):
        raise InternalAssertionFailed("dis2", "nearly 6-long internally 4-connected graph is planar",
                                      {"edges": list(g.edges())})
    return NonplanarVerdict(out, breaker)


def breaker_rule_holds(g: Graph, k: int = 5) -> bool:
    """Girth >= k, or an edge-breaker exists, or a 3-valent vertex-breaker exists."""
    from .truncation import all_breakers

    if girth(g) >= k:
        return True
    brs = all_breakers(g, k)
    return any(b.kind == "edge" or (b.kind == "vertex" and g.degree(b.vertex) == 3) for b in brs)


def qualifies_for_order_bound(g: Graph) -> bool:
    """Planar, internally 4-connected, nearly 5-long with the breaker rule."""
    from .truncation import is_nearly_k_long

    return (g.n >= 4 and g.min_degree >= 3 and is_nearly_k_long(g, 5) and breaker_rule_holds(g)
            and is_planar(g) and is_internally_k_connected(g, 4))


def check_order_bound(g: Graph) -> CountReport:
    """Planar, internally 4-connected, nearly 5-long graphs (3-valent vertex-breaker
    when the breaker is a vertex) have at least 11 vertices."""
    from .truncation import all_breakers

    _nearly_long_or_violation(g, 5)
    _require(breaker_rule_holds(g), "3-valent-breaker", "no edge-breaker and no 3-valent vertex-breaker")
    _require(is_internally_k_connected(g, 4), "internally-4-connected", "graph is not internally 4-connected")
    emb = planarity(g)
    _require(isinstance(emb, PlaneEmbedding), "planar", "graph is not planar")
    V, E, F = g.n, g.m, len(emb.faces)
    special: tuple[int, ...] = ()
    if girth(g) < 5:
        brs = all_breakers(g, 5)
        pick = next((b for b in brs if b.kind == "edge"), None) or next(
            b for b in brs if b.kind == "vertex" and g.degree(b.vertex) == 3)
        special = pick.elements
    chain = (
        Inequality("degrees 2E >= 3(V-3) + 6", Fraction(2 * E), Fraction(3 * (V - 3) + 6), ">="),
        Inequality("faces 2E >= 5F", Fraction(2 * E), Fraction(5 * F), ">="),
        Inequality("euler+degrees F >= (V+1)/2", Fraction(F), Fraction(V + 1, 2), ">="),
        Inequality("euler+faces F <= (2V-4)/3", Fraction(F), Fraction(2 * V - 4, 3), "<="),
        Inequality("bound V >= 11", Fraction(V), Fraction(11), ">="),
    )
    report = CountReport(V, E, F, special, chain)
    if V < 11:
        raise InternalAssertionFailed("sizeofnearlylong", f"qualifying graph with {V} vertices",
                                      {"edges": list(g.edges())})
    return report


# ----------------------------------------------------------- discharging

TWO_VALENT_TO_OUTER = Fraction(16, 5)
THREE_VALENT_TO_OUTER = Fraction(13, 8)
TO_INNER_FACE = Fraction(4, 5)
OUTER_FACE_BASE = Fraction(-17, 3)


@dataclass
class ChargeLedger:
    embedding: PlaneEmbedding
    vertex_charge: list[Fraction]
    face_charge: list[Fraction]
    vertex_final: list[Fraction]
    face_final: list[Fraction]
    S: frozenset[int] = frozenset()
    S1: frozenset[int] = frozenset()
    S2: frozenset[int] = frozenset()
    transfers: list[tuple[int, int, Fraction]] = field(default_factory=list)

    @property
    def total_initial(self) -> Fraction:
        return sum(self.vertex_charge, Fraction(0)) + sum(self.face_charge, Fraction(0))

    @property
    def total_final(self) -> Fraction:
        return sum(self.vertex_final, Fraction(0)) + sum(self.face_final, Fraction(0))

    def positive(self) -> list[tuple[str, int, Fraction]]:
        out = [("vertex", v, c) for v, c in enumerate(self.vertex_final) if c > 0]
        out += [("face", f, c) for f, c in enumerate(self.face_final) if c > 0]
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["element", "ch", "ch_star"])
        for v in range(len(self.vertex_charge)):
            w.writerow([f"v{v}", str(self.vertex_charge[v]), str(self.vertex_final[v])])
        for f in range(len(self.face_charge)):
            name = "X" if f == self.embedding.outer else f"f{f}"
            w.writerow([name, str(self.face_charge[f]), str(self.face_final[f])])
        return buf.getvalue()


def initial_charges(e: PlaneEmbedding) -> tuple[list[Fraction], list[Fraction]]:
    """ch(v) = 6 - d(v); ch(f) = 6 - 2|f| for inner faces; ch(X) = -5 2/3 - 2|X|."""
    g = e.graph
    vch = [Fraction(6 - g.degree(v)) for v in range(g.n)]
    fch = [OUTER_FACE_BASE - 2 * len(f) if i == e.outer else Fraction(6 - 2 * len(f))
           for i, f in enumerate(e.faces)]
    return vch, fch


def _corner_faces(e: PlaneEmbedding) -> dict[int, list[int]]:
    """Face index of every corner, per vertex (a vertex has one corner per incidence)."""
    out: dict[int, list[int]] = {v: [] for v in range(e.graph.n)}
    for i, f in enumerate(e.faces):
        for v in f:
            out[v].append(i)
    return out


def _dis1_violation(e: PlaneEmbedding, s: frozenset[int]) -> tuple[str, str] | None:
    g = e.graph
    if not is_k_connected(g, 2):
        return "2-connected", "host is not 2-connected"
    if girth(g) < 5:
        return "dis1.1", f"girth {girth(g)} < 5"
    outer = set(e.outer_face)
    inner_low = [v for v in range(g.n) if v not in outer and g.degree(v) < 4]
    if inner_low:
        return "dis1.2", f"vertices {inner_low} off the outer face have degree < 4"
    if not s <= outer:
        return "dis1.3", "S is not contained in the outer face"
    if len(s) > 3:
        return "dis1.3", f"|S| = {len(s)} > 3"
    if any(g.degree(v) != 2 for v in s):
        return "dis1.3", "a member of S is not 2-valent"
    low = [v for v in outer - s if g.degree(v) < 3]
    if low:
        return "dis1.3", f"outer vertices {sorted(low)} outside S have degree < 3"
    return None


def discharge(e: PlaneEmbedding, s=(), *, enforce: bool = True) -> ChargeLedger:
    """Assign initial charges and move them from vertices to faces.

    Each vertex sends to the outer face, per corner there, 3 1/5 if
    2-valent, 1 5/8 if 3-valent and 4/5 otherwise; every other corner
    receives 4/5. With ``enforce`` the three hypotheses of the
    non-existence statement are checked first, and a failing clause raises
    HypothesisViolation.
    """
    s = frozenset(s)
    if enforce:
        bad = _dis1_violation(e, s)
        if bad is not None:
            raise HypothesisViolation(*bad)
    g = e.graph
    vch, fch = initial_charges(e)
    vfin, ffin = list(vch), list(fch)
    transfers = []
    for v, corners in _corner_faces(e).items():
        d = g.degree(v)
        for f in corners:
            if f == e.outer:
                amount = TWO_VALENT_TO_OUTER if d == 2 else THREE_VALENT_TO_OUTER if d == 3 else TO_INNER_FACE
            else:
                amount = TO_INNER_FACE
            vfin[v] -= amount
            ffin[f] += amount
            transfers.append((v, f, amount))
    outer = set(e.outer_face)
    s1 = frozenset(v for v in outer if g.degree(v) == 3)
    s2 = frozenset(outer - s - s1)
    return ChargeLedger(e, vch, fch, vfin, ffin, s, s1, s2, transfers)


def outer_face_bound(outer_length: int, s_size: int = 3) -> Fraction:
    """Exact upper bound on ch*(X) when |S| = s_size and every other outer
    vertex is 3-valent: -5 2/3 - 2|X| + 3 1/5 |S| + 1 5/8 (|X| - |S|)."""
    return (OUTER_FACE_BASE - 2 * outer_length + TWO_VALENT_TO_OUTER * s_size
            + THREE_VALENT_TO_OUTER * (outer_length - s_size))


def leaf_block_vertices(g: Graph) -> frozenset[int]:
    bt = blocks(g)
    return bt.blocks[bt.leaves[0]]


def is_connected_plane(e: PlaneEmbedding) -> bool:
    return is_connected(e.graph)
