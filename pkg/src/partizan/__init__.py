"""Exact partizan game engine and the Turning Tiles / Go on Lattice / Beyond the Door rulesets."""

from .dyadic import DyadicRational
from .game import (
    DOWN,
    ONE,
    STAR,
    UP,
    ZERO,
    Game,
    Outcome,
    Player,
    add,
    atom,
    birthday,
    canonicalize,
    confused,
    delta,
    eq,
    geq,
    gt,
    integer,
    is_dicotic,
    is_infinitesimal,
    is_number,
    leq,
    lt,
    make,
    multiple,
    neg,
    nimber,
    number_value,
    outcome,
    stops,
    sub,
    up_bound,
    up_multiple,
)
from .notation import format_game, parse_game

__all__ = [
    "DOWN", "ONE", "STAR", "UP", "ZERO",
    "DyadicRational", "Game", "Outcome", "Player",
    "add", "atom", "birthday", "canonicalize", "confused", "delta", "eq",
    "format_game", "geq", "gt", "integer", "is_dicotic", "is_infinitesimal",
    "is_number", "leq", "lt", "make", "multiple", "neg", "nimber",
    "number_value", "outcome", "parse_game", "stops", "sub", "up_bound",
    "up_multiple",
]
