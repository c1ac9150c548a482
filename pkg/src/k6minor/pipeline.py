"""K6-minor extraction for dense graphs of girth >= 6 (slope 3) and for
6-connected graphs of girth >= 5 (slope 16/5).

Both procedures contract a maximal connected subgraph H0 while the quotient
stays dense, look at the graph H1 induced by the neighbours of H0, find a K5
minor there (through a truncation), and add H0 as the sixth branch set.
Each intermediate claim is asserted at runtime and logged.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import networkx as nx

from .errors import HypothesisViolation, InternalAssertionFailed, JumpDetected
from .graph import (
    Graph,
    bfs_path,
    components,
    contract_map,
    delete_vertices,
    girth,
    induced,
    vertex_connectivity,
)
from .minors import (
    DEFAULT_BUDGET,
    ExtendedModel,
    MinorModel,
    k5_from_cross,
    k5_from_jump,
    k5_from_nonplanar,
    make_model,
    verify_model,
)
from .planarity import PlaneEmbedding, _nx, check_nonplanar_girth6, discharge, planarity
from .society import Cross, Society, find_cross, find_disc_drawing, find_separation
from .truncation import Truncation, internally4_truncation


@dataclass(frozen=True)
class DensityFamily:
    """Connected H with |G/H| >= 5 and ||G/H|| >= a|G/H| - b."""

    a: Fraction
    b: Fraction

    def admits(self, order: int, size: int) -> bool:
        return order >= 5 and size >= self.a * order - self.b


GIRTH6 = DensityFamily(Fraction(3), Fraction(7))
GIRTH5 = DensityFamily(Fraction(16, 5), Fraction(8))


@dataclass
class ClaimRecord:
    claim: str
    holds: bool
    values: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"claim": self.claim, "holds": self.holds, "values": self.values}


class ClaimLog(list):
    """Claim records. In strict mode a failed claim raises; otherwise it is
    only recorded and the run goes on (diagnostic use)."""

    def __init__(self, strict: bool = True):
        super().__init__()
        self.strict = strict

    def check(self, claim: str, cond: bool, dump=None, **values) -> bool:
        self.append(ClaimRecord(claim, bool(cond), values))
        if not cond and self.strict:
            raise InternalAssertionFailed(claim, f"claim failed: {values}", dump)
        return bool(cond)

    def failed(self) -> list[ClaimRecord]:
        return [c for c in self if not c.holds]


@dataclass
class PipelineState:
    graph: Graph
    h0: frozenset[int]
    g0: Graph
    z0: int
    to_g0: dict[int, int]  # G vertex -> G0 vertex
    h1: Graph
    h1_ids: list[int]  # H1 vertex -> G vertex
    truncation: Truncation | None = None
    bridges: list = field(default_factory=list)
    patches: list = field(default_factory=list)


@dataclass
class PipelineResult:
    model: MinorModel
    claims: ClaimLog
    state: PipelineState
    route: str

    def as_dict(self) -> dict:
        st = self.state
        out = {
            "route": self.route,
            "h0": sorted(st.h0),
            "g0": {"n": st.g0.n, "m": st.g0.m},
            "h1": {"n": st.h1.n, "m": st.h1.m},
            "claims": [c.as_dict() for c in self.claims],
            "certificate": self.model.as_dict(st.graph),
        }
        if st.truncation is not None:
            out["truncation"] = {"n": st.truncation.graph.n, "breaker": st.truncation.breaker.as_dict()}
        return out


# ----------------------------------------------------------------- H0


def quotient_counts(g: Graph, h: set[int]) -> tuple[int, int]:
    """Order and size of G/H (kept simple): ||G/H|| = ||G - H|| + |N(H)|."""
    nh = set().union(*(g.adj[v] for v in h)) - h
    inner = sum(1 for u, v in g.edges() if u not in h and v not in h)
    return g.n - len(h) + 1, inner + len(nh)


def grow_maximal_H0(g: Graph, fam: DensityFamily, start=None) -> frozenset[int]:
    """Greedy growth from ``start`` (default vertex 0), always adding the
    smallest admissible neighbour, until no single-vertex extension stays in
    the family."""
    if g.n == 0:
        raise HypothesisViolation("nonempty", "empty graph")
    if not fam.admits(g.n, g.m):
        raise HypothesisViolation("density", f"||G|| = {g.m} < {fam.a}*{g.n} - {fam.b}")
    h = set(start) if start is not None else {0}
    nh = set().union(*(g.adj[v] for v in h)) - h
    outside_edges = sum(1 for u, v in g.edges() if u not in h and v not in h)
    while True:
        for v in sorted(nh):
            new_nh = (nh | g.adj[v]) - h - {v}
            new_out = outside_edges - len(g.adj[v] - h)
            if fam.admits(g.n - len(h), new_out + len(new_nh)):
                h.add(v)
                nh, outside_edges = new_nh, new_out
                break
        else:
            return frozenset(h)


def _min_cut(g: Graph) -> set[int]:
    return set(nx.minimum_node_cut(_nx(g)))


def _connected_extensions(g: Graph, h: frozenset[int], size: int):
    """Connected vertex sets of the given size outside ``h`` touching N(h),
    in sorted order."""
    nh = sorted(set().union(*(g.adj[v] for v in h)) - h)
    found: set[frozenset[int]] = set()
    layer = {frozenset([u]) for u in nh}
    for _ in range(size - 1):
        layer = {s | {w} for s in layer for v in s for w in g.adj[v] if w not in h and w not in s}
    found = layer
    return sorted(found, key=lambda s: sorted(s))


def extend_locally(g: Graph, fam: DensityFamily, h: frozenset[int], max_size: int = 3) -> frozenset[int]:
    """Grow greedily by single vertices, then by connected sets of up to
    ``max_size`` vertices, until no such extension stays in the family."""
    h = grow_maximal_H0(g, fam, h)
    size = 2
    while size <= max_size:
        for s in _connected_extensions(g, h, size):
            if fam.admits(*quotient_counts(g, h | s)):
                h = grow_maximal_H0(g, fam, h | s)
                size = 2
                break
        else:
            size += 1
    return h


def grow_cut_maximal_H0(g: Graph, fam: DensityFamily, log: ClaimLog, max_cut: int = 4,
                        local: int = 3) -> frozenset[int]:
    """Local growth (see ``extend_locally``), then, while G/H0 has a cut T of
    order <= max_cut, absorb every component of G0 - T but one into H0 when
    that stays in the family, and grow again. A cut that admits neither
    extension fails the connectivity claim."""
    h0 = extend_locally(g, fam, grow_maximal_H0(g, fam), local)
    repairs = 0
    while True:
        g0, to_g0 = contract_map(g, h0)
        z0 = to_g0[min(h0)]
        if g0.n <= max_cut + 1 or vertex_connectivity(g0, cutoff=max_cut + 1) > max_cut:
            break
        cut = _min_cut(g0)
        back: dict[int, list[int]] = {}
        for v, w in to_g0.items():
            back.setdefault(w, []).append(v)
        comps = components(g0, set(range(g0.n)) - cut)
        dump = {"edges": list(g.edges()), "h0": sorted(h0),
                "cut": sorted(v for w in cut for v in back[w] if w != z0)}
        if z0 not in cut:
            log.check("girth5-main.D", False, dump, reason="cut avoids z0")
            break
        grown = None
        sides = []
        for keep in sorted(comps, key=lambda c: (-len(c), min(c))):
            absorbed = set(h0)
            for c in comps:
                if c is not keep:
                    absorbed |= {v for w in c for v in back[w]}
            counts = quotient_counts(g, absorbed)
            sides.append({"order": counts[0], "size": counts[1]})
            if fam.admits(*counts):
                grown = frozenset(absorbed)
                break
        if grown is None:
            y = sum(1 for x in cut if x != z0 and g0.has_edge(z0, x))
            log.check("girth5-main.D", False, dump, reason="no side of the cut extends H0",
                      cut_order=len(cut), y=y, g0={"order": g0.n, "size": g0.m}, sides=sides)
            break
        h0 = extend_locally(g, fam, grown, local)
        repairs += 1
    log.append(ClaimRecord("H0-maximality", True, {"local_extension_size": local, "cut_repairs": repairs}))
    return h0


def _setup(g: Graph, fam: DensityFamily, log: ClaimLog, k: int, claim_prefix: str,
           cut_maximal: bool = False) -> PipelineState:
    h0 = grow_cut_maximal_H0(g, fam, log) if cut_maximal else grow_maximal_H0(g, fam)
    g0, to_g0 = contract_map(g, h0)
    z0 = to_g0[min(h0)]
    nh = sorted(set().union(*(g.adj[v] for v in h0)) - h0)
    h1, h1_ids = induced(g, nh)
    dump = {"edges": list(g.edges()), "h0": sorted(h0)}
    log.check(f"{claim_prefix}.A", g0.n >= 6, dump, order_g0=g0.n)
    for x in range(h1.n):
        loss = 1 + h1.degree(x)
        still_in = fam.admits(g0.n - 1, g0.m - loss)
        if still_in or loss < 4:
            log.check(f"{claim_prefix}.B", False, dump, x=h1_ids[x], loss=loss, contraction_in_family=still_in)
    log.check(f"{claim_prefix}.B", h1.n == 0 or h1.min_degree >= 3, dump,
              min_degree_h1=h1.min_degree if h1.n else None, min_loss=1 + min((h1.degree(x) for x in range(h1.n)), default=0))
    gh1 = girth(h1)
    log.check(f"girth(H1)>={k}", gh1 >= k, dump, girth_h1=gh1 if gh1 != float("inf") else "inf")
    return PipelineState(g, h0, g0, z0, to_g0, h1, h1_ids)


def _lift_k5(st: PipelineState, t: Truncation, sets) -> list[frozenset[int]]:
    """Truncation vertex sets -> G vertex sets (through the branch sets and H1 ids)."""
    return [frozenset(st.h1_ids[v] for v in t.lift(s)) for s in sets]


def _k6(st: PipelineState, k5_sets, note: str, log: ClaimLog) -> MinorModel:
    sets = [st.h0] + [frozenset(s) for s in k5_sets]
    m = make_model(st.graph, "k6", sets, note)
    ok = verify_model(st.graph, m)
    log.append(ClaimRecord("certificate", ok, {"route": note}))
    if not ok:
        raise InternalAssertionFailed("certificate", "lifted K6 model fails verification",
                                      {"edges": list(st.graph.edges())})
    return m


# -------------------------------------------------------------- girth 6


def k6_girth6(g: Graph, budget: int = DEFAULT_BUDGET, strict: bool = True) -> PipelineResult:
    if girth(g) < 6:
        raise HypothesisViolation("girth>=6", f"girth is {girth(g)}")
    if g.m < 3 * g.n - 7:
        raise HypothesisViolation("size>=3n-7", f"{g.m} < {3 * g.n - 7}")
    log = ClaimLog(strict)
    st = _setup(g, GIRTH6, log, 6, "girth6-main")
    t = internally4_truncation(st.h1, 6)
    st.truncation = t
    check_nonplanar_girth6(t.graph)
    log.check("dis2", True, order=t.graph.n)
    k5 = k5_from_nonplanar(t.graph, budget)
    log.check("thomas-cor", True, route=k5.note)
    model = _k6(st, _lift_k5(st, t, k5.branch_sets), "girth6/" + k5.note, log)
    return PipelineResult(model, log, st, "truncation-nonplanar")


# -------------------------------------------------------------- girth 5


def claim_d_table() -> list[dict]:
    """Right side of the cut inequality for every |T| <= 4 and admissible y."""
    rows = []
    for size in range(1, 5):
        for y in range(0, size):
            rhs = Fraction(6, 5) * size + y
            rows.append({"T": size, "y": y, "rhs": str(rhs), "below_8": rhs < 8})
    return rows


@dataclass(frozen=True)
class Bridge:
    """A component of G1 minus the truncation's vertices (or a single chord
    edge), seen through the truncation vertices it touches."""

    attachments: frozenset[int]  # truncation vertices
    inner: frozenset[int]  # G vertices
    links: tuple[tuple[int, int, int], ...]  # (truncation vertex, G vertex in its set, G vertex in inner or chord end)

    def path_between(self, g: Graph, a: int, b: int) -> list:
        """Truncation vertices a, b joined through the bridge; inner vertices
        carry ("g", id) labels."""
        if not self.inner:
            return [a, b]
        la = next(l for l in self.links if l[0] == a)
        lb = next(l for l in self.links if l[0] == b)
        inner_path = bfs_path(g, la[2], lb[2], set(self.inner))
        return [a] + [("g", c) for c in inner_path] + [b]


def find_bridges(g: Graph, st: PipelineState, t: Truncation) -> list[Bridge]:
    owner = {st.h1_ids[h]: v for h, v in t.owner().items()}
    g1 = set(range(g.n)) - st.h0
    rest = g1 - set(owner)
    out = []
    for comp in sorted(components(g, rest), key=min):
        links = sorted({(owner[u], u, c) for c in comp for u in g.adj[c] if u in owner})
        out.append(Bridge(frozenset(l[0] for l in links), comp, tuple(links)))
    for u, w in g.edges():
        a, b = owner.get(u), owner.get(w)
        if a is None or b is None or a == b or t.graph.has_edge(a, b):
            continue
        out.append(Bridge(frozenset((a, b)), frozenset(), ((a, u, w), (b, w, u))))
    return out


@dataclass(frozen=True)
class Patch:
    face: int
    rim: tuple[int, ...]
    bridges: tuple[Bridge, ...]
    clean: bool


def patches(e: PlaneEmbedding, bridges, x: int | None = None, g: Graph | None = None) -> list[Patch]:
    """Group bridges by the lowest-index face holding all their attachments."""
    by_face: dict[int, list] = {}
    for br in bridges:
        att = sorted(br.attachments)
        for a, b in combinations(att, 2):
            if not e.cofacial(a, b):
                path = br.path_between(g, a, b) if g is not None else [a, b]
                raise JumpDetected(path, (a, b))
        faces = e.faces_containing(att)
        if not faces:
            raise InternalAssertionFailed("patch", "pairwise cofacial attachments share no face",
                                          {"attachments": att})
        by_face.setdefault(faces[0], []).append(br)
    return [Patch(f, tuple(e.faces[f]), tuple(brs), x is None or x not in e.faces[f])
            for f, brs in sorted(by_face.items())]


def _patch_society(g: Graph, p: Patch) -> tuple[Society, list]:
    """Society on the rim plus the patch's bridges; returns it with the
    local -> (truncation vertex | ("g", id)) labels."""
    labels: list = list(p.rim)
    local = {v: i for i, v in enumerate(p.rim)}
    edges = [(i, (i + 1) % len(p.rim)) for i in range(len(p.rim))]
    for br in p.bridges:
        for c in sorted(br.inner):
            local[("g", c)] = len(labels)
            labels.append(("g", c))
        for c in br.inner:
            for d in g.adj[c]:
                if d in br.inner and c < d:
                    edges.append((local[("g", c)], local[("g", d)]))
        for a, _u, c in br.links:
            if br.inner:
                edges.append((local[a], local[("g", c)]))
        if not br.inner:
            a, b = sorted(br.attachments)
            edges.append((local[a], local[b]))
    return Society(Graph.from_edges(len(labels), edges), tuple(range(len(p.rim)))), labels


def _lift_extended(st: PipelineState, t: Truncation, ext: ExtendedModel) -> list[frozenset[int]]:
    out = []
    for s in ext.to_labels():
        vs: set[int] = set()
        for v in s:
            if isinstance(v, tuple):
                vs.add(v[1])
            else:
                vs |= {st.h1_ids[h] for h in t.branch_sets[v]}
        out.append(frozenset(vs))
    return out


def k6_girth5(g: Graph, budget: int = DEFAULT_BUDGET, strict: bool = True) -> PipelineResult:
    if girth(g) < 5:
        raise HypothesisViolation("girth>=5", f"girth is {girth(g)}")
    if g.m < Fraction(16, 5) * g.n - 8:
        raise HypothesisViolation("size>=16n/5-8", f"{g.m} < {Fraction(16, 5) * g.n - 8}")
    kappa = vertex_connectivity(g, cutoff=6)
    if kappa < 6:
        raise HypothesisViolation("kappa>=6", f"connectivity is {kappa}")
    log = ClaimLog(strict)
    st = _setup(g, GIRTH5, log, 5, "girth5-main", cut_maximal=True)
    dump = {"edges": list(g.edges()), "h0": sorted(st.h0)}
    log.check("girth5-main.C", st.g0.min_degree >= 4, dump, min_degree_g0=st.g0.min_degree)
    table = claim_d_table()
    log.check("girth5-main.D.arith", all(r["below_8"] for r in table), dump,
              max_rhs=str(max(Fraction(r["rhs"]) for r in table)))
    kappa0 = vertex_connectivity(st.g0, cutoff=5)
    log.check("girth5-main.D", kappa0 >= 5, dump, kappa_g0=kappa0)

    g1_vertices = set(range(g.n)) - st.h0
    if g1_vertices == set(st.h1_ids):
        emb = planarity(st.h1)
        log.check("girth5-main.bridgeless-nonplanar", not isinstance(emb, PlaneEmbedding), dump)
        k5 = k5_from_nonplanar(st.h1, budget)
        sets = [frozenset(st.h1_ids[v] for v in s) for s in k5.branch_sets]
        return PipelineResult(_k6(st, sets, "girth5/bridgeless/" + k5.note, log), log, st, "bridgeless")

    t = internally4_truncation(st.h1, 5)
    st.truncation = t
    emb = planarity(t.graph)
    if not isinstance(emb, PlaneEmbedding):
        k5 = k5_from_nonplanar(t.graph, budget)
        log.check("thomas-cor", True, route=k5.note)
        model = _k6(st, _lift_k5(st, t, k5.branch_sets), "girth5/truncation/" + k5.note, log)
        return PipelineResult(model, log, st, "truncation-nonplanar")

    bridges = find_bridges(g, st, t)
    st.bridges = bridges
    x = t.breaker.vertex
    try:
        pts = patches(emb, bridges, x, g)
    except JumpDetected as jump:
        ext = k5_from_jump(emb, jump.path, budget)
        log.check("jump", ext.meets_host(), dump, ends=list(jump.ends))
        model = _k6(st, _lift_extended(st, t, ext), "girth5/jump", log)
        return PipelineResult(model, log, st, "jump")
    st.patches = pts
    for p in pts:
        if not p.clean:
            continue
        soc, labels = _patch_society(g, p)
        c = find_cross(soc)
        if c is not None:
            cross = Cross(tuple(labels[v] for v in c.p1), tuple(labels[v] for v in c.p2))
            ext = k5_from_cross(emb, p.face, cross)
            log.check("addcross", ext.meets_host(), dump, face=list(p.rim))
            model = _k6(st, _lift_extended(st, t, ext), "girth5/cross", log)
            return PipelineResult(model, log, st, "cross")
        if find_disc_drawing(soc) is None:
            sep = find_separation(soc)
            log.check("girth5-main.E", False, dump, face=list(p.rim),
                      separation=None if sep is None else sorted(map(str, sep.separator)))
    log.check("girth5-main.E", _h_prime_planar(g, t, pts), dump)
    _final_dis1(g, st, t, pts, log, dump)
    raise InternalAssertionFailed("dis1", "no certificate: every patch is planar and crossless", dump)


def _h_prime_planar(g: Graph, t: Truncation, pts: list[Patch]) -> bool:
    x = t.breaker.vertex
    labels: dict = {v: v for v in range(t.graph.n)}
    edges = list(t.graph.edges())
    for p in pts:
        for br in p.bridges:
            if x is not None and x in br.attachments:
                continue
            for c in br.inner:
                labels.setdefault(("g", c), len(labels))
            for c in br.inner:
                edges += [(labels[("g", c)], labels[("g", d)]) for d in g.adj[c] if d in br.inner and c < d]
            if br.inner:
                edges += [(a, labels[("g", c)]) for a, _u, c in br.links]
            else:
                edges.append(tuple(sorted(br.attachments)))
    hp = Graph.from_edges(len(labels), edges)
    return isinstance(planarity(hp), PlaneEmbedding)


def _final_dis1(g: Graph, st: PipelineState, t: Truncation, pts, log: ClaimLog, dump) -> None:
    """Reaching this point means no certificate was found; record whether the
    final discharging hypotheses hold and fail the run."""
    verdict = "no-vertex-breaker"
    if t.breaker.vertex is not None:
        body, _ = delete_vertices(t.graph, [t.breaker.vertex])
        e = planarity(body)
        try:
            s = [v for v in e.outer_face if body.degree(v) == 2][:3]
            discharge(e, s)
            verdict = "dis1-hypotheses-met"
        except HypothesisViolation as exc:
            verdict = f"dis1-rejected:{exc.clause}"
    log.check("dis1", False, dump, verdict=verdict)
