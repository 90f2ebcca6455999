from .base import Direction, InvalidPosition, Move, MoveKind, Variant, clear_position_cache, to_game
from .doors import CLOSED, DoorPosition, Side
from .fileformat import (
    RULESETS,
    Position,
    PositionSyntaxError,
    parse_position,
    render_diagram,
    render_position,
    ruleset_tag,
)
from .lattice import Edge, LatticePosition
from .turning_tiles import Tile, TTPosition


def tt_legal_moves(pos: TTPosition, player):
    return pos.moves(player)


def gol_legal_moves(pos: LatticePosition, player):
    return pos.moves(player)


def btd_legal_moves(pos: DoorPosition, player):
    return pos.moves(player)


__all__ = [
    "CLOSED", "RULESETS", "Direction", "DoorPosition", "Edge", "InvalidPosition",
    "LatticePosition", "Move", "MoveKind", "Position", "PositionSyntaxError", "Side",
    "TTPosition", "Tile", "Variant", "btd_legal_moves", "clear_position_cache",
    "gol_legal_moves", "parse_position", "render_diagram", "render_position",
    "ruleset_tag", "to_game", "tt_legal_moves",
]
