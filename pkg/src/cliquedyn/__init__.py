"""Clique graph dynamics, triangular covers and windows onto infinite graphs."""

from .graph import (
    INFINITY,
    Graph,
    GraphError,
    girth,
    induced,
    is_locally_cyclic,
    local_girth,
    local_min_degree,
    neighborhood_graph,
    prune_degree_one,
)
from .iso import CanonicalForm, are_isomorphic, canonical_form
from .cliques import (
    CliqueGraphResult,
    clique_graph,
    dominates,
    domination_retract,
    helly_brute,
    is_clique_helly,
    maximal_cliques,
)
from .dynamics import (
    Budget,
    DynamicsReport,
    helly_double_step,
    iterate,
    triangle_free_double_step,
)
from .covers import (
    CoverReport,
    GraphHom,
    induced_clique_map,
    is_triangular_cover,
    quotient,
    universal_cover_ball,
    verify_hom,
)

from .oracle import GraphOracle, agree_on_trusted, ball, clique_oracle, trusted_iterate
from .families import generate
from .io import parse_edge_list, write_dot, write_edge_list

__version__ = "0.1.0"

__all__ = [
    "agree_on_trusted",
    "are_isomorphic",
    "ball",
    "Budget",
    "canonical_form",
    "CanonicalForm",
    "clique_graph",
    "clique_oracle",
    "CliqueGraphResult",
    "CoverReport",
    "dominates",
    "domination_retract",
    "DynamicsReport",
    "generate",
    "girth",
    "Graph",
    "GraphError",
    "GraphHom",
    "GraphOracle",
    "helly_brute",
    "helly_double_step",
    "induced",
    "induced_clique_map",
    "INFINITY",
    "is_clique_helly",
    "is_locally_cyclic",
    "is_triangular_cover",
    "iterate",
    "local_girth",
    "local_min_degree",
    "maximal_cliques",
    "neighborhood_graph",
    "parse_edge_list",
    "prune_degree_one",
    "quotient",
    "triangle_free_double_step",
    "trusted_iterate",
    "universal_cover_ball",
    "verify_hom",
    "write_dot",
    "write_edge_list",
]
