"""Exact solvers for minimal tile pots in the flexible-tile model of DNA self-assembly."""

from .designs import AssemblyDesign
from .graphs import GraphError, GraphSpec, MultiGraph, from_edge_list, parse_graph_spec, to_dot
from .ilp import IpModel, Limits, SolveResult, Status, solve, solve_all
from .opp import (
    S1Result,
    S2CellResult,
    S2Result,
    build_pcc,
    build_prc,
    find_s2_pot,
    solve_s1,
    solve_s2,
    verify_realizes,
)
from .pots import (
    CohesiveEnd,
    ConstructionMatrix,
    Pot,
    PotError,
    Tile,
    TileDistribution,
    parse_pot,
    parse_tile,
    tile_q_value,
)
from .srp import SrpResult, build_witness, has_smaller_realization, min_realization_order

__version__ = "0.1.0"

__all__ = [
    "AssemblyDesign",
    "CohesiveEnd",
    "ConstructionMatrix",
    "GraphError",
    "GraphSpec",
    "IpModel",
    "Limits",
    "MultiGraph",
    "Pot",
    "PotError",
    "S1Result",
    "S2CellResult",
    "S2Result",
    "SolveResult",
    "SrpResult",
    "Status",
    "Tile",
    "TileDistribution",
    "build_pcc",
    "build_prc",
    "build_witness",
    "find_s2_pot",
    "from_edge_list",
    "has_smaller_realization",
    "min_realization_order",
    "parse_graph_spec",
    "parse_pot",
    "parse_tile",
    "solve",
    "solve_all",
    "solve_s1",
    "solve_s2",
    "tile_q_value",
    "to_dot",
    "verify_realizes",
]
