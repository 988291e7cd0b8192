"""Graph algorithms on H-subgraph-free classes: exact solvers, brute-force
oracles, certificate verifiers and hardness-gadget generators."""

from .graphs import Graph, GraphError, parse_graph, serialize_graph

__all__ = ["Graph", "GraphError", "parse_graph", "serialize_graph"]
__version__ = "0.1.0"
