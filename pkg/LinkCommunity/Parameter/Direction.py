from __future__ import annotations
from enum import Enum, auto


class Direction(Enum):

    INCLUDE = auto()
    EXCLUDE = auto()

    def opposite(self) -> Direction:
        if self is Direction.INCLUDE:
            return Direction.EXCLUDE
        return Direction.INCLUDE
