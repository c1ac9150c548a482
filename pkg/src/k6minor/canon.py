"""Canonical forms and isomorphisms, backed by nauty through pynauty."""

from __future__ import annotations

import pynauty

from .graph import Graph


def _nauty(g: Graph) -> pynauty.Graph:
    return pynauty.Graph(g.n, directed=False, adjacency_dict={v: list(g.nbrs(v)) for v in range(g.n)})


def certificate(g: Graph) -> bytes:
    """Isomorphism-invariant byte string; equal iff the graphs are isomorphic."""
    if g.n == 0:
        return b"n0"
    return g.n.to_bytes(2, "big") + pynauty.certificate(_nauty(g))


def canonical_labeling(g: Graph) -> list[int]:
    """``lab[i]`` is the vertex of ``g`` placed at canonical position ``i``."""
    if g.n == 0:
        return []
    return list(pynauty.canon_label(_nauty(g)))


def canonical_form(g: Graph) -> Graph:
    lab = canonical_labeling(g)
    pos = {v: i for i, v in enumerate(lab)}
    return Graph.from_edges(g.n, ((pos[u], pos[v]) for u, v in g.edges()))


def isomorphism(a: Graph, b: Graph) -> dict[int, int] | None:
    """A vertex bijection a -> b preserving adjacency, or None."""
    if a.n != b.n or a.m != b.m or certificate(a) != certificate(b):
        return None
    la, lb = canonical_labeling(a), canonical_labeling(b)
    phi = {la[i]: lb[i] for i in range(a.n)}
    assert all(b.has_edge(phi[u], phi[v]) for u, v in a.edges())
    return phi


def is_isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and a.m == b.m and certificate(a) == certificate(b)
