"""Beyond the Door."""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

from ..game import Player
from .base import Cell, Direction, InvalidPosition, Move, Variant, generate_moves


class Side(enum.Enum):
    BLUE = "B"
    RED = "R"
    BLACK = "K"


PAINT = {Player.LEFT: Side.BLUE, Player.RIGHT: Side.RED}
_SWAP = {Side.BLUE: Side.RED, Side.RED: Side.BLUE}

Door = tuple[Side, Side]
CLOSED: Door = (Side.BLACK, Side.BLACK)


@dataclass(frozen=True)
class DoorPosition:
    """Rooms on a grid.

    ``h_doors[r][c]`` separates (r,c) and (r,c+1) and holds (side in the west
    room, side in the east room); ``v_doors[r][c]`` separates (r,c) and
    (r+1,c) and holds (side in the north room, side in the south room).
    """

    width: int
    height: int
    h_doors: tuple[tuple[Door, ...], ...]
    v_doors: tuple[tuple[Door, ...], ...]
    blocked: frozenset[Cell] = frozenset()
    pieces: frozenset[Cell] = frozenset()
    variant: Variant = Variant.STANDARD

    def __post_init__(self):
        object.__setattr__(self, "h_doors", tuple(tuple(tuple(d) for d in row) for row in self.h_doors))
        object.__setattr__(self, "v_doors", tuple(tuple(tuple(d) for d in row) for row in self.v_doors))
        object.__setattr__(self, "blocked", frozenset(self.blocked))
        object.__setattr__(self, "pieces", frozenset(self.pieces))
        if self.width < 1 or self.height < 1:
            raise InvalidPosition("board must be at least 1x1")
        if len(self.h_doors) != self.height or any(len(r) != self.width - 1 for r in self.h_doors):
            raise InvalidPosition("horizontal door grid has the wrong shape")
        if len(self.v_doors) != self.height - 1 or any(len(r) != self.width for r in self.v_doors):
            raise InvalidPosition("vertical door grid has the wrong shape")
        for r, c in self.blocked | self.pieces:
            if not self.on_board((r, c)):
                raise InvalidPosition(f"room ({r},{c}) is off the board")
        if self.blocked & self.pieces:
            raise InvalidPosition("piece in a blocked room")

    @classmethod
    def closed(cls, width: int, height: int, variant: Variant = Variant.STANDARD) -> DoorPosition:
        """All doors black on both sides, every room open, no pieces."""
        return cls(
            width,
            height,
            [[CLOSED] * (width - 1) for _ in range(height)],
            [[CLOSED] * width for _ in range(height - 1)],
            variant=variant,
        )

    def on_board(self, cell: Cell) -> bool:
        r, c = cell
        return 0 <= r < self.height and 0 <= c < self.width

    def side_facing(self, room: Cell, other: Cell) -> Side:
        """Colour of the door between two adjacent rooms, as seen from ``room``."""
        if not (self.on_board(room) and self.on_board(other)):
            return Side.BLACK
        (r, c), (r2, c2) = room, other
        if r == r2:
            door = self.h_doors[r][min(c, c2)]
            return door[0] if c < c2 else door[1]
        door = self.v_doors[min(r, r2)][c]
        return door[0] if r < r2 else door[1]

    def with_door(self, room: Cell, other: Cell, here: Side, there: Side) -> DoorPosition:
        """Copy with the door between two adjacent rooms repainted."""
        h = [list(row) for row in self.h_doors]
        v = [list(row) for row in self.v_doors]
        (a, b) = sorted((room, other))
        pair = (here, there) if a == room else (there, here)
        if a[0] == b[0]:
            h[a[0]][a[1]] = pair
        else:
            v[a[0]][a[1]] = pair
        return replace(self, h_doors=h, v_doors=v)

    def slides(self, piece: Cell, player: Player):
        paint = PAINT[player]
        for direction in Direction:
            dr, dc = direction.delta
            path = [piece]
            while True:
                r, c = path[-1]
                nxt = (r + dr, c + dc)
                if (
                    not self.on_board(nxt)
                    or self.side_facing(path[-1], nxt) is not paint
                    or nxt in self.blocked
                    or nxt in self.pieces
                ):
                    break
                path.append(nxt)
                yield Move.slide(piece, direction, len(path) - 1), replace(
                    self,
                    blocked=self.blocked | set(path[:-1]),
                    pieces=(self.pieces - {piece}) | {nxt},
                )

    def without_piece(self, piece: Cell) -> DoorPosition:
        return replace(self, pieces=self.pieces - {piece})

    def moves(self, player: Player) -> list[tuple[Move, DoorPosition]]:
        return generate_moves(self, player, self.slides)

    def swap_colors(self) -> DoorPosition:
        def sw(grid):
            return [[tuple(_SWAP.get(s, s) for s in door) for door in row] for row in grid]

        return replace(self, h_doors=sw(self.h_doors), v_doors=sw(self.v_doors))

    def room_count(self) -> int:
        return self.width * self.height - len(self.blocked)
