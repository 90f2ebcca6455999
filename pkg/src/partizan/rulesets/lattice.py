"""Go on Lattice."""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

from ..game import Player
from .base import Cell, Direction, InvalidPosition, Move, Variant, generate_moves


class Edge(enum.Enum):
    BLUE = "B"
    RED = "R"
    DOTTED = "D"
    ABSENT = "."


SOLID = {Player.LEFT: Edge.BLUE, Player.RIGHT: Edge.RED}
_SWAP = {Edge.BLUE: Edge.RED, Edge.RED: Edge.BLUE}


@dataclass(frozen=True)
class LatticePosition:
    """``h_edges[r][c]`` joins (r,c)-(r,c+1); ``v_edges[r][c]`` joins (r,c)-(r+1,c)."""

    width: int
    height: int
    h_edges: tuple[tuple[Edge, ...], ...]
    v_edges: tuple[tuple[Edge, ...], ...]
    dead: frozenset[Cell] = frozenset()
    pieces: frozenset[Cell] = frozenset()
    variant: Variant = Variant.STANDARD

    def __post_init__(self):
        object.__setattr__(self, "h_edges", tuple(tuple(row) for row in self.h_edges))
        object.__setattr__(self, "v_edges", tuple(tuple(row) for row in self.v_edges))
        object.__setattr__(self, "dead", frozenset(self.dead))
        object.__setattr__(self, "pieces", frozenset(self.pieces))
        if self.width < 1 or self.height < 1:
            raise InvalidPosition("board must be at least 1x1")
        if len(self.h_edges) != self.height or any(len(r) != self.width - 1 for r in self.h_edges):
            raise InvalidPosition("horizontal edge grid has the wrong shape")
        if len(self.v_edges) != self.height - 1 or any(len(r) != self.width for r in self.v_edges):
            raise InvalidPosition("vertical edge grid has the wrong shape")
        for r, c in self.dead | self.pieces:
            if not self.on_board((r, c)):
                raise InvalidPosition(f"node ({r},{c}) is off the board")
        if self.dead & self.pieces:
            raise InvalidPosition("piece on a dead node")

    def on_board(self, cell: Cell) -> bool:
        r, c = cell
        return 0 <= r < self.height and 0 <= c < self.width

    def edge(self, a: Cell, b: Cell) -> Edge:
        """Edge between two orthogonally adjacent nodes (ABSENT off the board)."""
        (r, c), (r2, c2) = sorted((a, b))
        if not (self.on_board(a) and self.on_board(b)):
            return Edge.ABSENT
        if r == r2:
            return self.h_edges[r][c]
        return self.v_edges[r][c]

    def incident(self, cell: Cell):
        r, c = cell
        for dr, dc in (d.delta for d in Direction):
            other = (r + dr, c + dc)
            if self.on_board(other):
                yield other

    def slides(self, piece: Cell, player: Player):
        color = SOLID[player]
        for direction in Direction:
            dr, dc = direction.delta
            path = [piece]
            while True:
                r, c = path[-1]
                nxt = (r + dr, c + dc)
                if (
                    not self.on_board(nxt)
                    or self.edge(path[-1], nxt) is not color
                    or nxt in self.dead
                    or nxt in self.pieces
                ):
                    break
                path.append(nxt)
                yield Move.slide(piece, direction, len(path) - 1), self._after_slide(path, player)

    def _after_slide(self, path: list[Cell], player: Player) -> LatticePosition:
        h = [list(row) for row in self.h_edges]
        v = [list(row) for row in self.v_edges]
        dest = path[-1]
        recolor = SOLID[player.opponent]
        for other in self.incident(dest):
            if self.edge(dest, other) is Edge.DOTTED:
                (r, c), (r2, _) = sorted((dest, other))
                if r == r2:
                    h[r][c] = recolor
                else:
                    v[r][c] = recolor
        return replace(
            self,
            h_edges=h,
            v_edges=v,
            dead=self.dead | set(path[:-1]),
            pieces=(self.pieces - {path[0]}) | {dest},
        )

    def without_piece(self, piece: Cell) -> LatticePosition:
        return replace(self, pieces=self.pieces - {piece})

    def moves(self, player: Player) -> list[tuple[Move, LatticePosition]]:
        return generate_moves(self, player, self.slides)

    def swap_colors(self) -> LatticePosition:
        def sw(grid):
            return [[_SWAP.get(e, e) for e in row] for row in grid]

        return replace(self, h_edges=sw(self.h_edges), v_edges=sw(self.v_edges))
