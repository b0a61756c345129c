"""Deciding and constructing d-cuts: two-sided vertex partitions where no
vertex has more than d neighbours across the divide."""

from .colouring import (
    BLUE,
    RED,
    DCutCertificate,
    VerifyFailure,
    clique_blocks,
    parse_colouring,
    propagate,
    serialize_colouring,
    verify,
)
from .errors import (
    CnfFormatError,
    GraphFormatError,
    PreconditionError,
    PromiseViolationError,
    ReductionError,
    ResourceExceeded,
    SizeLimitError,
)
from .exact import SolveOutcome, SolveStats, solve_bp, solve_naive
from .gadgets import (
    circular_ladder,
    gen_diamond_chain,
    gen_h_gadget,
    gen_random_clawfree,
    gen_regular_noncut,
    gen_spider,
)
from .graph import (
    Graph,
    Spider,
    StructuralReport,
    bfs_layers,
    boundary,
    contains_induced_spider,
    degeneracy_core,
    find_induced_spider,
    find_independent_set,
    has_independent_set,
    induced_subgraph,
    is_connected,
    line_graph,
    parse_graph,
    serialize_graph,
    structural_report,
)
from .sat import (
    NaeFormula,
    ReductionMap,
    assignment_to_colouring,
    colouring_to_assignment,
    is_nae_satisfying,
    parse_cnf,
    reduce,
    serialize_cnf,
    solve_nae01,
)
from .structured import (
    SeedReport,
    WorkCounter,
    build_seed,
    degree_two_cut,
    flood_from_seed,
    solve_claw_free,
    solve_star_free,
)

__version__ = "0.1.0"

__all__ = [
    "BLUE",
    "RED",
    "Graph",
    "Spider",
    "StructuralReport",
    "DCutCertificate",
    "VerifyFailure",
    "NaeFormula",
    "ReductionMap",
    "SeedReport",
    "SolveOutcome",
    "SolveStats",
    "WorkCounter",
    "GraphFormatError",
    "CnfFormatError",
    "PreconditionError",
    "PromiseViolationError",
    "ReductionError",
    "ResourceExceeded",
    "SizeLimitError",
    "parse_graph",
    "serialize_graph",
    "parse_colouring",
    "serialize_colouring",
    "parse_cnf",
    "serialize_cnf",
    "verify",
    "propagate",
    "clique_blocks",
    "solve_naive",
    "solve_bp",
    "solve_nae01",
    "solve_star_free",
    "solve_claw_free",
    "build_seed",
    "flood_from_seed",
    "degree_two_cut",
    "reduce",
    "assignment_to_colouring",
    "colouring_to_assignment",
    "is_nae_satisfying",
    "is_connected",
    "boundary",
    "bfs_layers",
    "degeneracy_core",
    "induced_subgraph",
    "find_independent_set",
    "has_independent_set",
    "find_induced_spider",
    "contains_induced_spider",
    "line_graph",
    "structural_report",
    "gen_regular_noncut",
    "gen_h_gadget",
    "gen_diamond_chain",
    "gen_spider",
    "gen_random_clawfree",
    "circular_ladder",
]
