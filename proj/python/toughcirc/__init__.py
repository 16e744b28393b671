"""Exact toughness, connectivity and circumference of small graphs, cycle
surgery, and theorem checks over graph6 corpora."""

from fractions import Fraction
import math

from ._core import (
    Graph,
    GraphError,
    ParseError,
    check,
    circumference,
    complete,
    complete_bipartite,
    connected_graphs,
    cycle_graph,
    encode_graph6,
    heuristic_longest_cycle,
    improve_once,
    is_connected,
    is_hamiltonian,
    is_petersen,
    min_degree,
    parse_graph6,
    path_graph,
    petersen,
    random_gnp,
    verify,
    vertex_connectivity,
)
from ._core import _toughness


def toughness(g):
    """Exact toughness as a Fraction, or math.inf for complete graphs."""
    t = _toughness(g)
    return math.inf if t is None else Fraction(*t)


__all__ = [
    "Graph",
    "GraphError",
    "ParseError",
    "check",
    "circumference",
    "complete",
    "complete_bipartite",
    "connected_graphs",
    "cycle_graph",
    "encode_graph6",
    "heuristic_longest_cycle",
    "improve_once",
    "is_connected",
    "is_hamiltonian",
    "is_petersen",
    "min_degree",
    "parse_graph6",
    "path_graph",
    "petersen",
    "random_gnp",
    "toughness",
    "verify",
    "vertex_connectivity",
]
