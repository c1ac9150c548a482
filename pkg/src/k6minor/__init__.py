"""Certified K6 minors in dense graphs of girth five and six."""

from .graph import Graph, parse_graph, serialize_graph
from .minors import MinorModel, NotFound, Timeout, find_minor, verify_model
from .pipeline import k6_girth5, k6_girth6

__all__ = [
    "Graph", "parse_graph", "serialize_graph",
    "MinorModel", "NotFound", "Timeout", "find_minor", "verify_model",
    "k6_girth5", "k6_girth6",
]
