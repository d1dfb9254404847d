"""Exact cops-and-robbers solving by backward induction."""

from .core import (
    DEFAULT_STATE_BUDGET,
    K_MAX,
    ComponentValue,
    CopNumberReport,
    SolveResult,
    closed_adjacency,
    cop_number,
    is_winning_start,
    solve_k,
    state_budget,
    state_count,
)
from .dismantle import is_dismantlable
from .oracle import CopOracle, RobberOracle, extract_strategies

__all__ = [
    "DEFAULT_STATE_BUDGET",
    "K_MAX",
    "ComponentValue",
    "CopNumberReport",
    "CopOracle",
    "RobberOracle",
    "SolveResult",
    "closed_adjacency",
    "cop_number",
    "extract_strategies",
    "is_dismantlable",
    "is_winning_start",
    "solve_k",
    "state_budget",
    "state_count",
]
