"""Named graphs, projective-plane incidence graphs and seeded random
high-girth graphs."""

from __future__ import annotations

import random
from itertools import product

from .graph import Graph, bfs_distances

# ------------------------------------------------------------ small families


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def v8() -> Graph:
    """C8 plus the four long diagonals i -- i+4 (pairwise crossing chords)."""
    return Graph.from_edges(8, [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)])


def line_graph_k33() -> Graph:
    """L(K3,3) is the 3x3 rook's graph: cells adjacent when sharing a row or column."""
    cells = list(product(range(3), repeat=2))
    return Graph.from_edges(9, [
        (i, j) for i in range(9) for j in range(i + 1, 9)
        if cells[i][0] == cells[j][0] or cells[i][1] == cells[j][1]
    ])


def cube() -> Graph:
    return Graph.from_edges(8, [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)])


def octahedron() -> Graph:
    return Graph.from_edges(6, [(i, j) for i in range(6) for j in range(i + 1, 6) if j != i + 3 or i >= 3])


def icosahedron() -> Graph:
    top, bottom = 0, 11
    upper = list(range(1, 6))
    lower = list(range(6, 11))
    edges = [(top, u) for u in upper] + [(bottom, w) for w in lower]
    for i in range(5):
        edges += [(upper[i], upper[(i + 1) % 5]), (lower[i], lower[(i + 1) % 5]),
                  (upper[i], lower[i]), (upper[i], lower[(i + 1) % 5])]
    return Graph.from_edges(12, edges)


def dodecahedron() -> Graph:
    # outer 5-cycle, two middle rings of 5 each, inner 5-cycle
    a = list(range(0, 5))
    b = list(range(5, 10))
    c = list(range(10, 15))
    d = list(range(15, 20))
    edges = []
    for i in range(5):
        edges += [(a[i], a[(i + 1) % 5]), (a[i], b[i]), (b[i], c[i]), (b[i], c[(i - 1) % 5]),
                  (c[i], d[i]), (d[i], d[(i + 1) % 5])]
    return Graph.from_edges(20, edges)


def heawood() -> Graph:
    return pg_incidence(2)


def hoffman_singleton() -> Graph:
    """Robertson's pentagon/pentagram construction (50 vertices, 7-regular, girth 5)."""
    def p(h, j):
        return 5 * h + j

    def q(i, j):
        return 25 + 5 * i + j

    edges = []
    for h in range(5):
        for j in range(5):
            edges.append((p(h, j), p(h, (j + 1) % 5)))
            edges.append((q(h, j), q(h, (j + 2) % 5)))
    for h, i, j in product(range(5), repeat=3):
        edges.append((p(h, j), q(i, (h * i + j) % 5)))
    return Graph.from_edges(50, edges)


def prism(k: int) -> Graph:
    return Graph.from_edges(2 * k, [(i, (i + 1) % k) for i in range(k)]
                            + [(k + i, k + (i + 1) % k) for i in range(k)]
                            + [(i, k + i) for i in range(k)])


def grid(rows: int, cols: int) -> Graph:
    def v(r, c):
        return r * cols + c
    edges = [(v(r, c), v(r, c + 1)) for r in range(rows) for c in range(cols - 1)]
    edges += [(v(r, c), v(r + 1, c)) for r in range(rows - 1) for c in range(cols)]
    return Graph.from_edges(rows * cols, edges)


NAMED = {
    "petersen": petersen,
    "v8": v8,
    "heawood": heawood,
    "dodecahedron": dodecahedron,
    "lk33": line_graph_k33,
    "cube": cube,
    "octahedron": octahedron,
    "icosahedron": icosahedron,
    "hoffman-singleton": hoffman_singleton,
    "k5": lambda: complete(5),
    "k6": lambda: complete(6),
    "k33": lambda: complete_bipartite(3, 3),
    "c6": lambda: cycle(6),
}


def named(name: str) -> Graph:
    try:
        return NAMED[name.lower()]()
    except KeyError:
        raise ValueError(f"unknown named graph {name!r}; known: {sorted(NAMED)}") from None


# ------------------------------------------------------- finite fields, PG(2,q)

# irreducible polynomials for the non-prime fields, low coefficient first
_IRREDUCIBLE = {4: (2, [1, 1, 1]), 8: (2, [1, 1, 0, 1]), 9: (3, [1, 0, 1])}


class _Field:
    """GF(q) for q prime or in {4, 8, 9}; elements are ints 0..q-1."""

    def __init__(self, q: int):
        self.q = q
        if q in _IRREDUCIBLE:
            p, poly = _IRREDUCIBLE[q]
            deg = len(poly) - 1
            self.p, self.deg, self.poly = p, deg, poly
        elif q >= 2 and all(q % d for d in range(2, int(q ** 0.5) + 1)):
            self.p, self.deg, self.poly = q, 1, None
        else:
            raise ValueError(f"GF({q}) not supported")
        self.mul_table = [[self._mul(a, b) for b in range(q)] for a in range(q)]
        self.add_table = [[self._add(a, b) for b in range(q)] for a in range(q)]

    def _digits(self, a):
        return [(a // self.p ** i) % self.p for i in range(self.deg)]

    def _value(self, digits):
        return sum(d * self.p ** i for i, d in enumerate(digits))

    def _add(self, a, b):
        return self._value([(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))])

    def _mul(self, a, b):
        if self.deg == 1:
            return a * b % self.p
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.deg - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % self.p
        for k in range(len(prod) - 1, self.deg - 1, -1):
            c = prod[k]
            if c:
                for i, coef in enumerate(self.poly):
                    prod[k - self.deg + i] = (prod[k - self.deg + i] - c * coef) % self.p
        return self._value(prod[:self.deg])

    def dot(self, u, v):
        s = 0
        for a, b in zip(u, v):
            s = self.add_table[s][self.mul_table[a][b]]
        return s


def _projective_points(q: int) -> list[tuple[int, int, int]]:
    pts = []
    for v in product(range(q), repeat=3):
        first = next((x for x in v if x), None)
        if first == 1:
            pts.append(v)
    return pts


def pg_incidence(q: int) -> Graph:
    """Point-line incidence graph of PG(2,q): 2(q^2+q+1) vertices, (q+1)-regular,
    girth 6. Points are vertices 0..N-1 and lines N..2N-1."""
    field = _Field(q)
    pts = _projective_points(q)
    big_n = len(pts)
    edges = [(i, big_n + j) for i, p in enumerate(pts) for j, line in enumerate(pts) if field.dot(p, line) == 0]
    return Graph.from_edges(2 * big_n, edges)


# ----------------------------------------------------------- random graphs


def random_high_girth(n: int, girth_min: int, seed: int, min_degree: int = 3,
                      extra_edges: int = 0, attempts: int = 200) -> Graph:
    """Random graph with girth >= ``girth_min`` and minimum degree >= ``min_degree``.

    Edges are sampled one at a time between a lowest-degree vertex and a random
    partner far enough away that no short cycle appears; restarts on dead ends.
    ``extra_edges`` further admissible edges are added once the degree target
    is met. Deterministic for a given seed.
    """
    rng = random.Random(seed)
    need = girth_min - 1  # a new edge uv closes a cycle of length dist(u,v)+1
    for _ in range(attempts):
        nb: list[set[int]] = [set() for _ in range(n)]
        g = Graph.from_edges(n, [])
        ok = True
        while True:
            low = min(len(s) for s in nb)
            if low >= min_degree:
                break
            cands = [v for v in range(n) if len(nb[v]) == low]
            v = rng.choice(cands)
            far = _far_vertices(g, v, need)
            if not far:
                ok = False
                break
            lowest = min(len(nb[w]) for w in far)
            pool = [w for w in far if len(nb[w]) <= lowest + 1]
            w = rng.choice(sorted(pool))
            nb[v].add(w)
            nb[w].add(v)
            g = Graph(n, tuple(frozenset(s) for s in nb))
        if not ok:
            continue
        for _ in range(extra_edges):
            v = rng.randrange(n)
            far = _far_vertices(g, v, need)
            if not far:
                continue
            w = rng.choice(sorted(far))
            nb[v].add(w)
            nb[w].add(v)
            g = Graph(n, tuple(frozenset(s) for s in nb))
        return g
    raise RuntimeError(f"no girth-{girth_min} graph with min degree {min_degree} on {n} vertices found")


def random_clustered_high_girth(n: int, girth_min: int, seed: int, parts: int = 2, links: int = 3,
                                min_degree: int = 3) -> Graph:
    """High-girth clusters joined by a few edges, so that small
    separators appear. Clusters sit a little above the cubic Moore bound."""
    rng = random.Random(seed)
    r = (girth_min - 1) // 2
    moore = 1 + 3 * (2 ** r - 1) if girth_min % 2 else 2 * (2 ** r - 1)
    low = moore + 4
    if n < parts * low:
        raise ValueError(f"need at least {parts * low} vertices for {parts} clusters")
    sizes = [low] * parts
    for _ in range(n - parts * low):
        sizes[rng.randrange(parts)] += 1
    edges: list[tuple[int, int]] = []
    offset = 0
    starts = []
    for i, size in enumerate(sizes):
        piece = random_high_girth(size, girth_min, rng.randrange(1 << 30), min_degree)
        edges += [(u + offset, v + offset) for u, v in piece.edges()]
        starts.append(offset)
        offset += size
    g = Graph.from_edges(n, edges)
    for i in range(parts - 1):
        a0, a1 = starts[i], starts[i] + sizes[i]
        b0, b1 = starts[i + 1], starts[i + 1] + sizes[i + 1]
        added = 0
        for _ in range(200):
            if added == links:
                break
            u, v = rng.randrange(a0, a1), rng.randrange(b0, b1)
            if g.has_edge(u, v) or bfs_distances(g, u).get(v, girth_min) < girth_min - 1:
                continue
            g = Graph.from_edges(n, list(g.edges()) + [(u, v)])
            added += 1
    return g


def _far_vertices(g: Graph, v: int, need: int) -> list[int]:
    dist = bfs_distances(g, v)
    return [w for w in range(g.n) if w != v and dist.get(w, need) >= need]


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])
