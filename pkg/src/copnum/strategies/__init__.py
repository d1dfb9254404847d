"""Named cop and robber strategies, the game engine and transcripts."""

from __future__ import annotations

from .base import SURRENDER, History, Strategy, central_diagonal, chase_move
from .greedy import GreedyCops, GreedyRobber, greedy_cop_move, greedy_robber_move
from .knights import (
    DEGREE4_PATTERN,
    DiagonalFormationCops,
    FormationCops,
    SquareFormationCops,
    degree4_region,
    degree4_robber,
    four_cycle_region,
    four_cycle_robber,
)
from .oracle import OracleCops, OracleRobber
from .regions import (
    RegionRobber,
    evasion_region,
    guard_threshold,
    octagon_region,
    robust_size,
)
from .royal import RoyalGuardingCops
from .scoring import phi
from .simulate import SUMMARY_FIELDS, Transcript, TurnRecord, simulate, summary_csv

COP_STRATEGIES = ("greedy", "oracle", "square_formation", "diagonal_formation", "royal_guarding")
ROBBER_STRATEGIES = ("greedy", "oracle", "four_cycle", "degree4_subgraph", "octagon", "region")

_FIXED_K = {"square_formation": 4, "diagonal_formation": 3}


def _octagon_robber(side_len: int = 8) -> RegionRobber:
    return RegionRobber(region_name="octagon", builder=lambda g: octagon_region(g.n, side_len))


def _evasion_robber(k: int | None = None) -> RegionRobber:
    return RegionRobber(region_name="region", builder=lambda g: evasion_region(g.dirs, g.n, k)[0])


def make_strategy(name: str, side: str = "cops", k: int | None = None, **params) -> Strategy:
    """Build a strategy by name.

    For cops ``k`` is the number of cops (formations fix it).  For robbers
    ``k`` is the number of opposing cops, used by ``oracle`` and ``region``.
    """
    if side == "cops":
        if name not in COP_STRATEGIES:
            raise ValueError(f"unknown cop strategy {name!r}; choose from {', '.join(COP_STRATEGIES)}")
        fixed = _FIXED_K.get(name)
        if fixed is not None and k is not None and k != fixed:
            raise ValueError(f"{name} uses exactly {fixed} cops, got {k}")
        if k is not None and k < 1:
            raise ValueError("cop count must be positive")
        if name == "greedy":
            return GreedyCops(3 if k is None else k, **params)
        if name == "oracle":
            return OracleCops(1 if k is None else k, **params)
        if name == "square_formation":
            return SquareFormationCops()
        if name == "diagonal_formation":
            return DiagonalFormationCops(**params)
        if k is None:
            raise ValueError("royal_guarding needs the cop count (one per direction)")
        return RoyalGuardingCops(k)
    if side == "robber":
        if name not in ROBBER_STRATEGIES:
            raise ValueError(f"unknown robber strategy {name!r}; choose from {', '.join(ROBBER_STRATEGIES)}")
        if name == "greedy":
            return GreedyRobber()
        if name == "oracle":
            return OracleRobber(1 if k is None else k, **params)
        if name == "four_cycle":
            return four_cycle_robber()
        if name == "degree4_subgraph":
            return degree4_robber()
        if name == "octagon":
            return _octagon_robber(**params)
        return _evasion_robber(k + 1 if k is not None else None)
    raise ValueError(f"side must be 'cops' or 'robber', got {side!r}")


__all__ = [
    "COP_STRATEGIES",
    "DEGREE4_PATTERN",
    "ROBBER_STRATEGIES",
    "SUMMARY_FIELDS",
    "SURRENDER",
    "DiagonalFormationCops",
    "FormationCops",
    "GreedyCops",
    "GreedyRobber",
    "History",
    "OracleCops",
    "OracleRobber",
    "RegionRobber",
    "RoyalGuardingCops",
    "SquareFormationCops",
    "Strategy",
    "Transcript",
    "TurnRecord",
    "central_diagonal",
    "chase_move",
    "degree4_region",
    "degree4_robber",
    "evasion_region",
    "four_cycle_region",
    "four_cycle_robber",
    "greedy_cop_move",
    "greedy_robber_move",
    "guard_threshold",
    "make_strategy",
    "octagon_region",
    "phi",
    "robust_size",
    "simulate",
    "summary_csv",
]
