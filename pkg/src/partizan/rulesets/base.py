from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from typing import Optional

from ..game import Game, Player, make

Cell = tuple[int, int]


class Variant(enum.Enum):
    STANDARD = "standard"
    DELTA = "delta"


class Direction(enum.Enum):
    UP = (-1, 0)
    DOWN = (1, 0)
    LEFT = (0, -1)
    RIGHT = (0, 1)

    @property
    def delta(self) -> tuple[int, int]:
        return self.value


class MoveKind(enum.Enum):
    SLIDE = "slide"
    REMOVE = "remove"


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    piece: Cell
    direction: Optional[Direction] = None
    distance: int = 0

    @classmethod
    def slide(cls, piece: Cell, direction: Direction, distance: int) -> Move:
        return cls(MoveKind.SLIDE, piece, direction, distance)

    @classmethod
    def remove(cls, piece: Cell) -> Move:
        return cls(MoveKind.REMOVE, piece)

    def path(self) -> list[Cell]:
        """Cells entered by a slide, in order."""
        (r, c), (dr, dc) = self.piece, self.direction.delta
        return [(r + k * dr, c + k * dc) for k in range(1, self.distance + 1)]

    def __str__(self):
        r, c = self.piece
        if self.kind is MoveKind.REMOVE:
            return f"remove ({r},{c})"
        return f"slide ({r},{c}) {self.direction.name.lower()} {self.distance}"


class InvalidPosition(ValueError):
    pass


def generate_moves(pos, player: Player, slides_for_piece) -> list:
    """Shared move generation: slides per piece, plus δ-variant removals.

    ``slides_for_piece(piece, player)`` yields ``(Move, successor)`` pairs.
    """
    moves = []
    for piece in sorted(pos.pieces):
        slides = list(slides_for_piece(piece, player))
        if slides:
            moves.extend(slides)
        elif pos.variant is Variant.DELTA:
            moves.append((Move.remove(piece), pos.without_piece(piece)))
    return moves


_game_cache: dict = {}
_game_lock = threading.Lock()


def to_game(pos) -> Game:
    """Game tree of a position: options are the games of all successors."""
    g = _game_cache.get(pos)
    if g is None:
        g = make(
            [to_game(s) for _, s in pos.moves(Player.LEFT)],
            [to_game(s) for _, s in pos.moves(Player.RIGHT)],
        )
        with _game_lock:
            _game_cache.setdefault(pos, g)
    return g


def clear_position_cache() -> None:
    _game_cache.clear()
