"""Tree-preserving maps from Turning Tiles to Go on Lattice and Beyond the Door."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .game import Game
from .notation import format_game
from .rulesets import (
    DoorPosition,
    Edge,
    LatticePosition,
    Side,
    Tile,
    TTPosition,
    Variant,
    render_position,
    ruleset_tag,
    to_game,
)


class ReductionError(ValueError):
    pass


_EDGE = {Tile.BLUE: Edge.BLUE, Tile.RED: Edge.RED, Tile.BLACK: Edge.ABSENT}
_SIDE = {Tile.BLUE: Side.BLUE, Tile.RED: Side.RED, Tile.BLACK: Side.BLACK}


def _check_source(pos: TTPosition):
    if pos.allow_green:
        raise ReductionError("the maps are defined for blue-red boards only")
    if pos.variant is not Variant.STANDARD:
        raise ReductionError("the maps are defined for the standard variant only")
    if any(Tile.NONE in row for row in pos.tiles):
        raise ReductionError("the maps need a full rectangular board (no missing tiles)")


def _lattice_edge(pos: TTPosition, a, b) -> Edge:
    ta, tb = pos.tile(a), pos.tile(b)
    occ_a, occ_b = a in pos.pieces, b in pos.pieces
    if occ_a and occ_b:
        # unobservable: neither piece can cross before one endpoint dies
        return _EDGE[ta] if ta is tb else Edge.DOTTED
    if occ_a:
        return _EDGE[tb]
    if occ_b:
        return _EDGE[ta]
    if ta is tb:
        return _EDGE[ta]
    if Tile.BLACK in (ta, tb):
        return Edge.ABSENT
    return Edge.DOTTED


def f_tt_to_gol(pos: TTPosition) -> LatticePosition:
    """Map a blue-red Turning Tiles position to Go on Lattice (nodes mirror tiles)."""
    _check_source(pos)
    h, w = pos.height, pos.width
    h_edges = [[_lattice_edge(pos, (r, c), (r, c + 1)) for c in range(w - 1)] for r in range(h)]
    v_edges = [[_lattice_edge(pos, (r, c), (r + 1, c)) for c in range(w)] for r in range(h - 1)]
    return LatticePosition(w, h, h_edges, v_edges, frozenset(), pos.pieces)


def f_tt_to_btd(pos: TTPosition) -> DoorPosition:
    """Map to Beyond the Door: each door side shows the colour of the tile beyond it."""
    _check_source(pos)
    h, w = pos.height, pos.width
    t = pos.tiles
    h_doors = [[(_SIDE[t[r][c + 1]], _SIDE[t[r][c]]) for c in range(w - 1)] for r in range(h)]
    v_doors = [[(_SIDE[t[r + 1][c]], _SIDE[t[r][c]]) for c in range(w)] for r in range(h - 1)]
    return DoorPosition(w, h, h_doors, v_doors, frozenset(), pos.pieces)


TARGETS = {"gol": f_tt_to_gol, "btd": f_tt_to_btd}


def tree_isomorphic(g: Game, h: Game) -> bool:
    # games are hash-consed, so identical trees are the same object
    return g is h


def mismatch(g: Game, h: Game) -> Optional[tuple[Game, Game]]:
    """A smallest pair of corresponding subtrees where ``g`` and ``h`` differ.

    Descends while the two trees differ in exactly one option on one side.
    """
    if g is h:
        return None
    while True:
        ldiff = (g.left - h.left, h.left - g.left)
        rdiff = (g.right - h.right, h.right - g.right)
        sizes = [len(s) for s in ldiff + rdiff]
        if sizes == [1, 1, 0, 0]:
            g, h = next(iter(ldiff[0])), next(iter(ldiff[1]))
        elif sizes == [0, 0, 1, 1]:
            g, h = next(iter(rdiff[0])), next(iter(rdiff[1]))
        else:
            return g, h


@dataclass(frozen=True)
class ReductionCertificate:
    source: TTPosition
    target: str
    mapped: Union[LatticePosition, DoorPosition]
    isomorphic: bool
    counterexample: Optional[tuple[Game, Game]] = None

    def render(self) -> str:
        def indent(text):
            return "".join("  " + line + "\n" for line in text.splitlines())

        out = "source:\n" + indent(render_position(self.source))
        out += f"target: {ruleset_tag(self.mapped)}\n"
        out += "mapped:\n" + indent(render_position(self.mapped))
        out += f"isomorphic: {'true' if self.isomorphic else 'false'}\n"
        if self.counterexample is not None:
            a, b = self.counterexample
            out += f"counterexample: {format_game(a)} ; {format_game(b)}\n"
        return out


def certify_reduction(pos: TTPosition, target: str) -> ReductionCertificate:
    """Map ``pos`` with f (``"gol"``) or f' (``"btd"``) and compare the game trees."""
    try:
        fn = TARGETS[target]
    except KeyError:
        raise ValueError(f"unknown target {target!r}; expected 'gol' or 'btd'") from None
    mapped = fn(pos)
    g, h = to_game(pos), to_game(mapped)
    iso = tree_isomorphic(g, h)
    return ReductionCertificate(pos, target, mapped, iso, None if iso else mismatch(g, h))
