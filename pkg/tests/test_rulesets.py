import itertools

import pytest

from partizan import DOWN, ONE, STAR, ZERO, Player, delta, eq, is_dicotic, is_infinitesimal, make, neg
from partizan.rulesets import (
    CLOSED,
    Direction,
    DoorPosition,
    Edge,
    InvalidPosition,
    LatticePosition,
    Move,
    MoveKind,
    Side,
    Tile,
    TTPosition,
    Variant,
    btd_legal_moves,
    gol_legal_moves,
    to_game,
    tt_legal_moves,
)
from partizan.reductions import f_tt_to_btd, f_tt_to_gol
from partizan.selftest import tt_corpus

import oracle

LEFT, RIGHT = Player.LEFT, Player.RIGHT


def lattice_path(edges, pieces=(), variant=Variant.STANDARD):
    return LatticePosition(len(edges) + 1, 1, [list(edges)], [], frozenset(), frozenset(pieces), variant)


def corpus():
    """Standard and δ positions of all three rulesets."""
    out = []
    for pos in tt_corpus(lengths=(1, 2, 3)):
        out.append(pos)
        out.append(TTPosition(pos.tiles, pos.pieces, variant=Variant.DELTA))
        for m in (f_tt_to_gol(pos), f_tt_to_btd(pos)):
            out.append(m)
            out.append(type(m)(**{**m.__dict__, "variant": Variant.DELTA}))
    return out


CORPUS = corpus()


# -- Turning Tiles -----------------------------------------------------------


def test_tt_single_slide():
    pos = TTPosition.from_rows(["LL"], [(0, 0)])
    (move, after), = tt_legal_moves(pos, LEFT)
    assert move == Move.slide((0, 0), Direction.RIGHT, 1)
    assert after == TTPosition.from_rows(["XL"], [(0, 1)])
    assert tt_legal_moves(pos, RIGHT) == []
    assert to_game(pos) is ONE


def test_tt_delta_removal():
    pos = TTPosition.from_rows(["LL"], [(0, 0)], variant=Variant.DELTA)
    (move, after), = tt_legal_moves(pos, RIGHT)
    assert move.kind is MoveKind.REMOVE and after.pieces == frozenset()
    assert to_game(pos) is DOWN
    assert to_game(pos) is delta(make([ZERO], []))


def test_tt_stuck_piece_is_zero():
    assert to_game(TTPosition.from_rows(["L"], [(0, 0)])) is ZERO


def test_tt_slides_stop_anywhere_and_flip_departed_tiles():
    pos = TTPosition.from_rows(["RLLL"], [(0, 0)])
    moves = tt_legal_moves(pos, LEFT)
    assert [m.distance for m, _ in moves] == [1, 2, 3]
    assert moves[2][1] == TTPosition.from_rows(["XXXL"], [(0, 3)])
    assert moves[0][1] == TTPosition.from_rows(["XLLL"], [(0, 1)])


def test_tt_occupied_tiles_block():
    pos = TTPosition.from_rows(["LLL"], [(0, 0), (0, 1)])
    assert [(m.piece, m.distance) for m, _ in tt_legal_moves(pos, LEFT)] == [((0, 1), 1)]


def test_tt_green_is_shared():
    pos = TTPosition.from_rows(["LGR"], [(0, 0)], allow_green=True)
    assert len(tt_legal_moves(pos, LEFT)) == 1
    pos = TTPosition.from_rows(["RGR"], [(0, 0)], allow_green=True)
    assert [m.distance for m, _ in tt_legal_moves(pos, RIGHT)] == [1, 2]


def test_tt_piece_on_black_tile_can_leave():
    pos = TTPosition.from_rows(["XL"], [(0, 0)])
    assert to_game(pos) is ONE


def test_tt_invariants_checked():
    with pytest.raises(InvalidPosition):
        TTPosition.from_rows(["L."], [(0, 1)])
    with pytest.raises(InvalidPosition):
        TTPosition.from_rows(["LG"], [])
    with pytest.raises(InvalidPosition):
        TTPosition.from_rows(["LL", "L"], [])
    with pytest.raises(InvalidPosition):
        TTPosition.from_rows(["LL"], [(1, 0)])


def test_tt_values_match_independent_evaluator():
    boards = list(tt_corpus(pieces=(1, 2, 3)))
    boards += list(tt_corpus(lengths=(3,), square=False, pieces=(1,), variant=Variant.DELTA))
    for pos in boards:
        rows = ["".join(t.value for t in row) for row in pos.tiles]
        expected = oracle.tt_tree(rows, pos.pieces, delta=pos.variant is Variant.DELTA)
        assert oracle.from_game(to_game(pos)) == expected


def test_tt_green_values_match_independent_evaluator():
    for colours in itertools.product("LRG", repeat=3):
        pos = TTPosition.from_rows(["".join(colours)], [(0, 1)], allow_green=True)
        expected = oracle.tt_tree(["".join(colours)], [(0, 1)], green=True)
        assert oracle.from_game(to_game(pos)) == expected


# -- Go on Lattice -----------------------------------------------------------


def test_gol_dotted_edge_recoloured_on_arrival():
    pos = lattice_path([Edge.BLUE, Edge.DOTTED], [(0, 0)])
    (move, after), = gol_legal_moves(pos, LEFT)
    assert move == Move.slide((0, 0), Direction.RIGHT, 1)
    assert after.dead == {(0, 0)}
    assert after.h_edges == ((Edge.BLUE, Edge.RED),)
    assert gol_legal_moves(pos, RIGHT) == []


def test_gol_dotted_edge_is_not_traversable():
    pos = lattice_path([Edge.DOTTED], [(0, 0)])
    assert gol_legal_moves(pos, LEFT) == [] and gol_legal_moves(pos, RIGHT) == []


def test_gol_red_edge_gives_minus_one():
    pos = lattice_path([Edge.RED], [(0, 0)])
    assert to_game(pos) is neg(ONE)


def test_gol_dead_nodes_block():
    pos = LatticePosition(3, 1, [[Edge.BLUE, Edge.BLUE]], [], frozenset({(0, 1)}), frozenset({(0, 0)}))
    assert gol_legal_moves(pos, LEFT) == []


def test_gol_vertical_moves():
    pos = LatticePosition(1, 2, [[], []], [[Edge.RED]], frozenset(), frozenset({(1, 0)}))
    (move, _), = gol_legal_moves(pos, RIGHT)
    assert move.direction is Direction.UP


def test_gol_invariants_checked():
    with pytest.raises(InvalidPosition):
        LatticePosition(2, 1, [[Edge.BLUE]], [], frozenset({(0, 0)}), frozenset({(0, 0)}))
    with pytest.raises(InvalidPosition):
        LatticePosition(2, 1, [[]], [], frozenset(), frozenset())


# -- Beyond the Door ---------------------------------------------------------


def two_rooms(door, variant=Variant.STANDARD):
    return DoorPosition(2, 1, [[door]], [], frozenset(), frozenset({(0, 0)}), variant)


def test_btd_door_side_decides():
    pos = two_rooms((Side.BLUE, Side.BLACK))
    (move, after), = btd_legal_moves(pos, LEFT)
    assert after.pieces == {(0, 1)} and after.blocked == {(0, 0)}
    assert btd_legal_moves(pos, RIGHT) == []
    assert to_game(pos) is ONE
    # the far side of the door does not matter for a piece in room 0
    assert to_game(two_rooms((Side.BLACK, Side.BLUE))) is ZERO


def test_btd_single_room_delta_is_star():
    pos = DoorPosition(1, 1, [[]], [], frozenset(), frozenset({(0, 0)}), Variant.DELTA)
    assert [m.kind for m, _ in btd_legal_moves(pos, LEFT)] == [MoveKind.REMOVE]
    assert to_game(pos) is STAR


def test_btd_side_facing():
    pos = DoorPosition.closed(2, 2).with_door((1, 1), (0, 1), Side.RED, Side.BLUE)
    assert pos.side_facing((1, 1), (0, 1)) is Side.RED
    assert pos.side_facing((0, 1), (1, 1)) is Side.BLUE
    assert pos.v_doors[0][1] == (Side.BLUE, Side.RED)
    assert pos.side_facing((0, 0), (0, 1)) is Side.BLACK
    assert pos.h_doors[0][0] == CLOSED


# -- cross-ruleset properties ------------------------------------------------


def test_no_pieces_means_zero():
    assert to_game(TTPosition.from_rows(["LR"], [])) is ZERO
    assert to_game(DoorPosition.closed(3, 2, Variant.DELTA)) is ZERO


def _progress(pos):
    if isinstance(pos, TTPosition):
        gone = sum(t is Tile.BLACK for row in pos.tiles for t in row)
    elif isinstance(pos, LatticePosition):
        gone = len(pos.dead)
    else:
        gone = len(pos.blocked)
    return gone, -len(pos.pieces)


def test_monotone_progress():
    for pos in CORPUS:
        for player in Player:
            for move, after in pos.moves(player):
                if move.kind is MoveKind.REMOVE:
                    assert len(after.pieces) == len(pos.pieces) - 1
                else:
                    assert _progress(after) > _progress(pos) or (
                        isinstance(pos, TTPosition) and pos.tile(move.piece) is Tile.BLACK
                    )


def test_colour_swap_negates_value():
    for pos in CORPUS:
        assert to_game(pos.swap_colors()) is neg(to_game(pos))


def test_remove_offered_iff_no_slide():
    for pos in CORPUS:
        if pos.variant is not Variant.DELTA:
            continue
        for player in Player:
            moves = pos.moves(player)
            for piece in pos.pieces:
                kinds = [m.kind for m, _ in moves if m.piece == piece]
                slides = list(pos.slides(piece, player))
                if slides:
                    assert MoveKind.REMOVE not in kinds
                else:
                    assert kinds == [MoveKind.REMOVE]


def test_delta_variants_are_dicotic_and_infinitesimal():
    for pos in CORPUS:
        if pos.variant is Variant.DELTA:
            g = to_game(pos)
            assert is_dicotic(g) and is_infinitesimal(g)


def test_standard_remove_never_offered():
    for pos in CORPUS:
        if pos.variant is Variant.STANDARD:
            for player in Player:
                assert all(m.kind is MoveKind.SLIDE for m, _ in pos.moves(player))


def test_successor_values_equal_options():
    pos = TTPosition.from_rows(["LLR", "RLR"], [(0, 0), (1, 2)])
    g = to_game(pos)
    assert {to_game(s) for _, s in pos.moves(LEFT)} == set(g.left)
    assert {to_game(s) for _, s in pos.moves(RIGHT)} == set(g.right)
    assert eq(g, g)
