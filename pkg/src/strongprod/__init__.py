"""Exact domination and matching laboratory for strong product graphs."""

from .graph import Graph, Graph6Error, canonical_form, canonical_graph, \
    from_graph6, isomorphic, named, to_graph6
from .products import CapacityError, ProductGraph, strong_product
from .verdict import EnumerationStream, PropertyVerdict, TheoremViolation

__all__ = [
    "Graph", "Graph6Error", "canonical_form", "canonical_graph",
    "from_graph6", "isomorphic", "named", "to_graph6",
    "CapacityError", "ProductGraph", "strong_product",
    "EnumerationStream", "PropertyVerdict", "TheoremViolation",
]

__version__ = "1.0.0"
