"""Minimum-degree thresholds, extremal constructions and embedding procedures
for squared paths and squared cycles."""

from .graph import MAX_VERTICES, Graph, common_neighbourhood, from_edge_list, min_degree

__version__ = "0.1.0"

__all__ = ["MAX_VERTICES", "Graph", "common_neighbourhood", "from_edge_list", "min_degree", "__version__"]
