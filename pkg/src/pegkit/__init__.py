"""Exact solvers for the pegging game on graphs."""

from __future__ import annotations

__version__ = "0.1.0"

from .engine import (  # noqa: E402
    BudgetExhausted,
    Move,
    MultiDistribution,
    ReachReport,
    apply_move,
    legal_moves,
    reach,
    reach_all_moves,
    reach_within,
    weight,
    weight_certificate,
)
from .graphs import Graph, GraphError, make_family  # noqa: E402
from .solvers import (  # noqa: E402
    InvariantResult,
    optimal_pebbling_number,
    optimal_peggling_number,
    optimal_pegging_number,
    pebbling_number,
    peggling_number,
    pegging_number,
    two_pebbling_number,
)
from .surd import Surd  # noqa: E402

__all__ = [
    "BudgetExhausted", "Graph", "GraphError", "InvariantResult", "Move", "MultiDistribution",
    "ReachReport", "Surd", "apply_move", "legal_moves", "make_family", "optimal_pebbling_number",
    "optimal_peggling_number", "optimal_pegging_number", "pebbling_number", "peggling_number",
    "pegging_number", "reach", "reach_all_moves", "reach_within", "two_pebbling_number", "weight",
    "weight_certificate",
]
