"""Colorful polytopes of properly edge-colored regular graphs."""

from .colorful import build_poset
from .ecgraph import EdgeColoredGraph, parse_graph, parse_simple_graph
from .errors import ColorpolyError
from .poset import RankedPoset, parse_polytope, validate_polytope

__version__ = "0.1.0"

__all__ = ["EdgeColoredGraph", "RankedPoset", "ColorpolyError", "build_poset",
           "parse_graph", "parse_simple_graph", "parse_polytope", "validate_polytope"]
