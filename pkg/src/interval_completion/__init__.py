"""Exact fixed-parameter solver for interval completion."""

from .errors import InvariantError, NotReduced, ObstructionError
from .graph import Graph, ParseError, connected_components, induced, is_module, parse_graph, serialize_graph
from .interval import IntervalModel, best_cut_point, clique_at, is_interval, recognize, verify_model
from .obstructions import (AsteroidalWitness, AWKind, Frame, Hole, aw_from_at, find_at, find_hole,
                           find_small_obstruction, long_aw_branch_edges, minimal_hole_fills,
                           small_aw_branch_edges)
from .modules import SimplicialModule, expand_shallow_module, is_simplicial_module, st_components
from .shallow import common_base_neighbor, locally_minimal_aw, neighbor_category, shallow_terminals
from .solver import (Completion, SearchState, SearchStats, SolverConfig, check_invariants,
                     minimum_completion, solve, solve_state)
from .oracle import (ExceedsKmax, OracleResult, brute_min_completion, brute_minimal_hole_fills,
                     enumerate_minimum_supergraphs)

__version__ = "0.1.0"
