"""Stable matchings with ties, per-edge blocking thresholds, critical
vertices and edges, free edges, and two-sided matroid constraints.

The solver duplicates each edge into typed parallel copies with strict
preferences, runs deferred acceptance (plain or matroid-kernel), and
projects back; `critmatch.verify` certifies criticality, stability, and
the 3/2 size guarantee exhaustively on small instances.
"""

from .duplication import (
    ExtendedInstance,
    build_general,
    build_simple,
    extend_matroid,
    format_orders,
    ranking_key,
)
from .gale_shapley import project, solve_gs
from .generate import GenParams, generate
from .kernel import solve_kernel
from .matroid import (
    CapacitySpec,
    ExplicitSpec,
    IndependenceOracle,
    LaminarSpec,
    build_oracle,
    contract,
    delete,
    direct_sum,
    fundamental_circuit,
    optimal_base,
    rank,
    truncate,
)
from .model import (
    Edge,
    Instance,
    Matching,
    Side,
    ValidationReport,
    VertexRef,
    criticality_score,
    is_feasible,
    normalize,
    validate,
)
from .reductions import (
    from_delta_max,
    from_delta_min,
    from_free_edges,
    from_weak_stability,
)
from .serialize import (
    instance_from_json,
    instance_to_json,
    matching_from_json,
    matching_to_json,
)
from .solver import SolveResult, solve
from .values import INFINITY, Value
from .verify import (
    CapExceededError,
    Certificate,
    RatioReport,
    certify,
    cgamma_blocks,
    criticality_optimum,
    enumerate_feasible,
    max_cgamma_stable,
    ratio_harness,
)

__all__ = [
    "CapacitySpec",
    "CapExceededError",
    "Certificate",
    "Edge",
    "ExplicitSpec",
    "ExtendedInstance",
    "GenParams",
    "INFINITY",
    "IndependenceOracle",
    "Instance",
    "LaminarSpec",
    "Matching",
    "RatioReport",
    "Side",
    "SolveResult",
    "ValidationReport",
    "Value",
    "VertexRef",
    "build_general",
    "build_oracle",
    "build_simple",
    "certify",
    "cgamma_blocks",
    "contract",
    "criticality_optimum",
    "criticality_score",
    "delete",
    "direct_sum",
    "enumerate_feasible",
    "extend_matroid",
    "format_orders",
    "from_delta_max",
    "from_delta_min",
    "from_free_edges",
    "from_weak_stability",
    "fundamental_circuit",
    "generate",
    "instance_from_json",
    "instance_to_json",
    "is_feasible",
    "matching_from_json",
    "matching_to_json",
    "max_cgamma_stable",
    "normalize",
    "optimal_base",
    "project",
    "rank",
    "ranking_key",
    "ratio_harness",
    "solve",
    "solve_gs",
    "solve_kernel",
    "truncate",
    "validate",
]
