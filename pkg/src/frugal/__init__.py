"""Frugal graph colouring through auxiliary hypergraphs."""
from .graph import (Graph, common_neighbourhood, complete_bipartite, complete_graph,
                    count_triangles_at, cycle_graph, empty_graph, girth, is_c2t_free,
                    is_kst_free, is_pt_free, max_degree, path_graph, square, star_graph)
from .hypergraph import (Colouring, Hypergraph, delta_star, is_proper, max_codegree,
                         max_ell_degree, rank)
from .reduction import (Certificate, ReductionParams, build_basic, build_cycle_reduction,
                        build_kbt_reduction, certify, find_special_pairs, find_special_sets)
from .solvers import (ColouringFailure, InstanceTooLarge, ResampleTimeout, SolverResult,
                      exact_chromatic, exact_frugal_chromatic, exact_hypergraph_chromatic,
                      greedy_colour, resample_colour, verify_avoiding, verify_frugal)
from .generators import GnpSpec, gnp, grid_graph, pg_incidence, prune, sample_gnp

__version__ = "0.1.0"

__all__ = [
    "Graph", "common_neighbourhood", "complete_bipartite", "complete_graph",
    "count_triangles_at", "cycle_graph", "empty_graph", "girth", "is_c2t_free",
    "is_kst_free", "is_pt_free", "max_degree", "path_graph", "square", "star_graph",
    "Colouring", "Hypergraph", "delta_star", "is_proper", "max_codegree", "max_ell_degree",
    "rank", "Certificate", "ReductionParams", "build_basic", "build_cycle_reduction",
    "build_kbt_reduction", "certify", "find_special_pairs", "find_special_sets",
    "ColouringFailure", "InstanceTooLarge", "ResampleTimeout", "SolverResult",
    "exact_chromatic", "exact_frugal_chromatic", "exact_hypergraph_chromatic",
    "greedy_colour", "resample_colour", "verify_avoiding", "verify_frugal", "GnpSpec",
    "gnp", "grid_graph", "pg_incidence", "prune", "sample_gnp",
]
