"""Turning Tiles (blue-red and blue-red-green)."""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

from ..game import Player
from .base import Cell, Direction, InvalidPosition, Move, Variant, generate_moves


class Tile(enum.Enum):
    BLUE = "L"
    RED = "R"
    GREEN = "G"
    BLACK = "X"
    NONE = "."


_WALKABLE = {
    (Player.LEFT, False): {Tile.BLUE},
    (Player.RIGHT, False): {Tile.RED},
    (Player.LEFT, True): {Tile.BLUE, Tile.GREEN},
    (Player.RIGHT, True): {Tile.RED, Tile.GREEN},
}

_SWAP = {Tile.BLUE: Tile.RED, Tile.RED: Tile.BLUE}


@dataclass(frozen=True)
class TTPosition:
    tiles: tuple[tuple[Tile, ...], ...]
    pieces: frozenset[Cell]
    allow_green: bool = False
    variant: Variant = Variant.STANDARD

    def __post_init__(self):
        object.__setattr__(self, "tiles", tuple(tuple(row) for row in self.tiles))
        object.__setattr__(self, "pieces", frozenset(self.pieces))
        if not self.tiles or not self.tiles[0]:
            raise InvalidPosition("board must be at least 1x1")
        if any(len(row) != self.width for row in self.tiles):
            raise InvalidPosition("ragged tile grid")
        for r, c in self.pieces:
            if not (0 <= r < self.height and 0 <= c < self.width):
                raise InvalidPosition(f"piece ({r},{c}) is off the board")
            if self.tiles[r][c] is Tile.NONE:
                raise InvalidPosition(f"piece ({r},{c}) is not on a tile")
        if not self.allow_green and any(Tile.GREEN in row for row in self.tiles):
            raise InvalidPosition("green tile in a blue-red board")

    @classmethod
    def from_rows(cls, rows, pieces=(), allow_green=False, variant=Variant.STANDARD) -> TTPosition:
        """Build from strings such as ``["LR", "XL"]``."""
        tiles = tuple(tuple(Tile(ch) for ch in row) for row in rows)
        return cls(tiles, frozenset(pieces), allow_green, variant)

    @property
    def height(self) -> int:
        return len(self.tiles)

    @property
    def width(self) -> int:
        return len(self.tiles[0])

    def tile(self, cell: Cell) -> Tile:
        r, c = cell
        if 0 <= r < self.height and 0 <= c < self.width:
            return self.tiles[r][c]
        return Tile.NONE

    def slides(self, piece: Cell, player: Player):
        walkable = _WALKABLE[player, self.allow_green]
        for direction in Direction:
            dr, dc = direction.delta
            r, c = piece
            path = [piece]
            while True:
                r, c = r + dr, c + dc
                if self.tile((r, c)) not in walkable or (r, c) in self.pieces:
                    break
                path.append((r, c))
                yield Move.slide(piece, direction, len(path) - 1), self._after_slide(path)

    def _after_slide(self, path: list[Cell]) -> TTPosition:
        rows = [list(row) for row in self.tiles]
        for r, c in path[:-1]:
            rows[r][c] = Tile.BLACK
        pieces = (self.pieces - {path[0]}) | {path[-1]}
        return replace(self, tiles=rows, pieces=pieces)

    def without_piece(self, piece: Cell) -> TTPosition:
        return replace(self, pieces=self.pieces - {piece})

    def moves(self, player: Player) -> list[tuple[Move, TTPosition]]:
        return generate_moves(self, player, self.slides)

    def swap_colors(self) -> TTPosition:
        rows = [[_SWAP.get(t, t) for t in row] for row in self.tiles]
        return replace(self, tiles=rows)
