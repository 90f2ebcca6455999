"""Staircase paths of value n.v / n.v + *, value verification and small-board realization
for δ-Beyond the Door."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from .game import Game, Outcome, add, canonicalize, is_dicotic, neg, outcome
from .notation import format_game
from .rulesets import CLOSED, DoorPosition, Side, Variant, render_position, to_game


def _staircase(n: int) -> list[tuple[int, int]]:
    return [(k // 2, (k + 1) // 2) for k in range(n + 1)]


def down_path(n: int) -> DoorPosition:
    """(n+1)-room δ-variant staircase where only Left can move, one room per step.

    Consecutive rooms alternate horizontal and vertical doors, so every slide has
    length one.  The value is n.v for odd n and n.v + * for even n.
    """
    if n < 0:
        raise ValueError("path length must be nonnegative")
    rooms = _staircase(n)
    pos = DoorPosition.closed(n - n // 2 + 1, n // 2 + 1, Variant.DELTA)
    for a, b in zip(rooms, rooms[1:]):
        pos = pos.with_door(a, b, Side.BLUE, Side.BLACK)
    cells = {(r, c) for r in range(pos.height) for c in range(pos.width)}
    return DoorPosition(
        pos.width,
        pos.height,
        pos.h_doors,
        pos.v_doors,
        frozenset(cells - set(rooms)),
        frozenset([rooms[0]]),
        Variant.DELTA,
    )


def up_path(n: int) -> DoorPosition:
    return down_path(n).swap_colors()


def verify_value(pos, g: Game) -> bool:
    """True iff the position equals ``g``: the previous player wins ``pos - g``."""
    return outcome(add(to_game(pos), neg(g))) is Outcome.P


@dataclass(frozen=True)
class RealizationResult:
    target: Game
    found: bool
    position: Optional[DoorPosition]
    rooms_used: int
    search_bound: int

    def render(self) -> str:
        out = f"target: {format_game(self.target)}\n"
        out += f"found: {'true' if self.found else 'false'}\n"
        out += f"rooms-used: {self.rooms_used}\n"
        out += f"search-bound: {self.search_bound}\n"
        if self.position is not None:
            out += render_position(self.position)
        return out


# -- enumeration -------------------------------------------------------------

_SIDES = tuple(Side)


def _transform_cell(cell, k, height, width):
    """Apply the k-th dihedral symmetry (k in 0..7) to a cell of an height x width board."""
    r, c = cell
    if k & 4:
        c = width - 1 - c
    for _ in range(k & 3):
        r, c, height, width = c, height - 1 - r, width, height
    return r, c


def _transformed_dims(k, height, width):
    return (width, height) if k & 1 else (height, width)


def _transform(pos: DoorPosition, k: int) -> DoorPosition:
    h, w = _transformed_dims(k, pos.height, pos.width)
    out = DoorPosition.closed(w, h, pos.variant)
    for r in range(pos.height):
        for c in range(pos.width):
            for other in ((r, c + 1), (r + 1, c)):
                if not pos.on_board(other):
                    continue
                here, there = pos.side_facing((r, c), other), pos.side_facing(other, (r, c))
                if (here, there) == CLOSED:
                    continue
                a = _transform_cell((r, c), k, pos.height, pos.width)
                b = _transform_cell(other, k, pos.height, pos.width)
                out = out.with_door(a, b, here, there)
    t = lambda cells: frozenset(_transform_cell(x, k, pos.height, pos.width) for x in cells)  # noqa: E731
    return DoorPosition(w, h, out.h_doors, out.v_doors, t(pos.blocked), t(pos.pieces), pos.variant)


def _orbit(pos: DoorPosition, max_width: int, max_height: int):
    """Symmetric images that fit the bounds, paired with whether colours were swapped."""
    for k in range(8):
        h, w = _transformed_dims(k, pos.height, pos.width)
        if h > max_height or w > max_width:
            continue
        image = _transform(pos, k)
        yield image, False
        yield image.swap_colors(), True


def _raw_positions(rooms: int, max_width: int, max_height: int, max_pieces: int) -> Iterator[DoorPosition]:
    if rooms == 0:
        yield DoorPosition(1, 1, [[]], [], frozenset([(0, 0)]), frozenset(), Variant.DELTA)
        return
    for height in range(1, max_height + 1):
        for width in range(1, max_width + 1):
            cells = [(r, c) for r in range(height) for c in range(width)]
            for alive in itertools.combinations(cells, rooms):
                live = set(alive)
                # translation normal form: the rooms span the whole board
                if {r for r, _ in live} != set(range(height)) or {c for _, c in live} != set(range(width)):
                    continue
                base = DoorPosition.closed(width, height, Variant.DELTA)
                base = DoorPosition(
                    width, height, base.h_doors, base.v_doors, frozenset(set(cells) - live), frozenset(), Variant.DELTA
                )
                doors = [
                    (a, b)
                    for a in alive
                    for b in ((a[0], a[1] + 1), (a[0] + 1, a[1]))
                    if b in live
                ]
                for paint in itertools.product(_SIDES, repeat=2 * len(doors)):
                    painted = base
                    for i, (a, b) in enumerate(doors):
                        painted = painted.with_door(a, b, paint[2 * i], paint[2 * i + 1])
                    for k in range(1, min(max_pieces, rooms) + 1):
                        for pieces in itertools.combinations(alive, k):
                            yield DoorPosition(
                                width,
                                height,
                                painted.h_doors,
                                painted.v_doors,
                                painted.blocked,
                                frozenset(pieces),
                                Variant.DELTA,
                            )


def enumerate_positions(rooms: int, max_width: int, max_height: int, max_pieces: int) -> list[DoorPosition]:
    """One representative per symmetry class with exactly ``rooms`` open rooms, in serialization order.

    Classes are taken under board rotation/reflection (within the bounds) and
    colour swap; the representative has the smallest serialization.
    """
    reps: dict[str, DoorPosition] = {}
    seen: set[str] = set()
    for pos in _raw_positions(rooms, max_width, max_height, max_pieces):
        text = render_position(pos)
        if text in seen:
            continue
        orbit = {render_position(img): img for img, _ in _orbit(pos, max_width, max_height)}
        seen.update(orbit)
        key = min(orbit)
        reps[key] = orbit[key]
    return [reps[k] for k in sorted(reps)]


def realize_search(target: Game, max_width: int, max_height: int, max_pieces: int) -> RealizationResult:
    """First δ-Beyond the Door position (by room count, then serialization) equal to ``target``."""
    if min(max_width, max_height, max_pieces) < 1:
        raise ValueError("search bounds must be positive")
    target = canonicalize(target)
    if not is_dicotic(target):
        raise ValueError(f"target {format_game(target)} is not dicotic")
    negated = neg(target)
    bound = max_width * max_height
    for rooms in range(bound + 1):
        for rep in enumerate_positions(rooms, max_width, max_height, max_pieces):
            value = canonicalize(to_game(rep))
            if value is target:
                candidate = rep
            elif value is negated:
                candidate = rep.swap_colors()
            else:
                continue
            if verify_value(candidate, target):
                return RealizationResult(target, True, candidate, rooms, bound)
    return RealizationResult(target, False, None, 0, bound)
