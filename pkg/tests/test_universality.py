import pytest

from partizan import (
    DOWN,
    ONE,
    STAR,
    Player,
    UP,
    ZERO,
    canonicalize,
    eq,
    is_dicotic,
    is_infinitesimal,
    lt,
    neg,
    parse_game,
    up_bound,
    up_multiple,
)
from partizan.rulesets import DoorPosition, Side, Variant, render_position, to_game
from partizan.universality import (
    RealizationResult,
    _orbit,
    _transform,
    down_path,
    enumerate_positions,
    realize_search,
    up_path,
    verify_value,
)


def test_down_path_geometry():
    pos = down_path(4)
    assert (pos.height, pos.width) == (3, 3)
    assert pos.variant is Variant.DELTA
    assert pos.pieces == {(0, 0)}
    open_rooms = {(r, c) for r in range(3) for c in range(3)} - pos.blocked
    assert open_rooms == {(0, 0), (0, 1), (1, 1), (1, 2), (2, 2)}
    assert pos.side_facing((0, 0), (0, 1)) is Side.BLUE
    assert pos.side_facing((0, 1), (0, 0)) is Side.BLACK
    assert pos.side_facing((0, 1), (1, 1)) is Side.BLUE


def test_down_path_moves_one_room_at_a_time():
    pos = down_path(5)
    while pos.pieces:
        slides = [m for m, _ in pos.moves(Player.LEFT) if m.kind.value == "slide"]
        assert all(m.distance == 1 for m in slides) and len(slides) <= 1
        assert all(m.kind.value == "remove" for m, _ in pos.moves(Player.RIGHT))
        if not slides:
            break
        pos = next(after for m, after in pos.moves(Player.LEFT) if m.kind.value == "slide")


@pytest.mark.parametrize("n", range(7))
def test_staircase_path_values(n):
    value = to_game(down_path(n))
    expected = up_multiple(-n, star=(n % 2 == 0))
    assert eq(value, expected)
    assert eq(to_game(up_path(n)), neg(value))


def test_path_examples():
    assert to_game(down_path(0)) is STAR
    assert canonicalize(to_game(down_path(1))) is DOWN
    assert str(to_game(down_path(2))) == "2v*"
    assert str(to_game(up_path(1))) == "^"
    assert str(to_game(up_path(3))) == "3^"
    assert str(to_game(up_path(0))) == "*"


def test_negative_path_rejected():
    with pytest.raises(ValueError):
        down_path(-1)


def test_verify_value():
    assert verify_value(down_path(1), DOWN)
    assert not verify_value(down_path(1), UP)
    single = DoorPosition(1, 1, [[]], [], frozenset(), frozenset({(0, 0)}), Variant.DELTA)
    assert verify_value(single, STAR)
    assert not verify_value(single, ZERO)


def test_symmetries_preserve_value_and_swap_negates():
    for rooms in (2, 3):
        for pos in enumerate_positions(rooms, 2, 2, 2)[::7]:
            g = to_game(pos)
            for k in range(8):
                assert to_game(_transform(pos, k)) is g
            assert to_game(pos.swap_colors()) is neg(g)


def test_transforms_form_the_dihedral_group():
    pos = down_path(3)
    images = {render_position(_transform(pos, k)) for k in range(8)}
    assert len(images) == 8
    assert _transform(_transform(pos, 1), 3) == pos
    assert _transform(_transform(pos, 4), 4) == pos


def test_orbit_respects_bounds():
    wide = DoorPosition.closed(2, 1, Variant.DELTA)
    assert all(img.height == 1 for img, _ in _orbit(wide, 2, 1))
    assert {img.height for img, _ in _orbit(wide, 2, 2)} == {1, 2}


def test_enumeration_is_sorted_and_deduplicated():
    reps = enumerate_positions(2, 2, 2, 1)
    texts = [render_position(p) for p in reps]
    assert texts == sorted(texts) and len(set(texts)) == len(texts)
    # adjacent rooms: 9 paintings x 2 piece rooms under {reflection, colour swap},
    # Burnside gives (18 + 2) / 4 = 5; plus the two diagonal rooms with no door
    assert len(reps) == 6


def test_enumerated_positions_are_dicotic_and_infinitesimal():
    for rooms in range(5):
        for pos in enumerate_positions(rooms, 2, 2, 1):
            g = to_game(pos)
            assert is_dicotic(g) and is_infinitesimal(g)


@pytest.mark.parametrize(
    "target, rooms",
    [(ZERO, 0), (STAR, 1), (UP, 2), (DOWN, 2)],
)
def test_realize_small_targets(target, rooms):
    result = realize_search(target, 2, 2, 1)
    assert result.found
    assert result.rooms_used == rooms
    assert verify_value(result.position, target)
    assert result.search_bound == 4


def test_realize_zero_is_the_empty_position():
    result = realize_search(ZERO, 2, 2, 1)
    assert result.position.pieces == frozenset()


def test_realize_down_matches_a_down_path():
    result = realize_search(DOWN, 2, 2, 1)
    assert eq(to_game(result.position), to_game(down_path(1)))
    assert result.position.room_count() == 2


def test_realize_is_deterministic():
    a = realize_search(parse_game("^*"), 2, 2, 1)
    b = realize_search(parse_game("^*"), 2, 2, 1)
    assert a == b and a.found and a.rooms_used == 4


def test_realize_not_found_records_bound():
    result = realize_search(parse_game("*2"), 1, 2, 1)
    assert not result.found and result.position is None and result.search_bound == 2
    assert result.render() == "target: *2\nfound: false\nrooms-used: 0\nsearch-bound: 2\n"


def test_realize_rejects_non_dicotic_and_bad_bounds():
    with pytest.raises(ValueError):
        realize_search(ONE, 2, 2, 1)
    with pytest.raises(ValueError):
        realize_search(STAR, 0, 2, 1)


def test_realized_positions_sit_between_up_bounds():
    for target in (ZERO, STAR, UP, DOWN):
        result = realize_search(target, 2, 2, 1)
        n = up_bound(target)
        x = to_game(result.position)
        assert lt(up_multiple(-n), x) and lt(x, up_multiple(n))


def test_self_consistency_of_verify_value():
    for rooms in range(4):
        for pos in enumerate_positions(rooms, 2, 2, 2)[::5]:
            assert verify_value(pos, canonicalize(to_game(pos)))


def test_result_render_includes_position():
    result = realize_search(STAR, 1, 1, 1)
    assert isinstance(result, RealizationResult)
    text = result.render()
    assert text.startswith("target: *\nfound: true\nrooms-used: 1\nsearch-bound: 1\nruleset: beyond-the-door\n")
