from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum


class Side(IntEnum):
    COPS = 0
    ROBBER = 1


@dataclass(frozen=True)
class GameState:
    """Sorted cop multiset, robber vertex and side to move."""

    cops: tuple[int, ...]
    robber: int
    side: Side = Side.COPS

    def __post_init__(self):
        object.__setattr__(self, "cops", tuple(sorted(self.cops)))

    @property
    def captured(self) -> bool:
        return self.robber in self.cops

    def key(self) -> tuple[tuple[int, ...], int, int]:
        return self.cops, self.robber, int(self.side)
