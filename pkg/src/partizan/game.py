"""Short partizan games as a hash-consed DAG.

Every structurally distinct game tree gets exactly one :class:`Game` object, so
``G is H`` (and ``G == H``) means the two trees are isomorphic.  Value
equality is a different relation and is exposed through :func:`eq`.

Results of the recursive queries (outcome, comparison, canonical form, ...)
are memoized per game identity in unbounded module-level caches.
"""

from __future__ import annotations

import enum
import itertools
import threading
from fractions import Fraction
from typing import Iterable

from .dyadic import DyadicRational, simplest_between


class Player(enum.Enum):
    LEFT = "Left"
    RIGHT = "Right"

    @property
    def opponent(self) -> Player:
        return Player.RIGHT if self is Player.LEFT else Player.LEFT


class Outcome(enum.Enum):
    """Outcome classes, partially ordered with L > P > R and L > N > R."""

    L = "L"
    R = "R"
    N = "N"
    P = "P"

    def __ge__(self, other):
        if not isinstance(other, Outcome):
            return NotImplemented
        return self is other or self is Outcome.L or other is Outcome.R

    def __le__(self, other):
        if not isinstance(other, Outcome):
            return NotImplemented
        return other >= self

    def __gt__(self, other):
        if not isinstance(other, Outcome):
            return NotImplemented
        return self >= other and self is not other

    def __lt__(self, other):
        if not isinstance(other, Outcome):
            return NotImplemented
        return other > self

    def mirror(self) -> Outcome:
        return {Outcome.L: Outcome.R, Outcome.R: Outcome.L}.get(self, self)


class Game:
    """An immutable game ``{left | right}``.  Build with :func:`make`."""

    __slots__ = ("left", "right", "uid")

    left: frozenset
    right: frozenset
    uid: int

    def __new__(cls, *args, **kwargs):
        raise TypeError("use partizan.make() to construct games")

    def __repr__(self):
        from .notation import format_game

        return f"Game({format_game(self)})"

    def __str__(self):
        from .notation import format_game

        return format_game(self)

    def __add__(self, other):
        if not isinstance(other, Game):
            return NotImplemented
        return add(self, other)

    def __neg__(self):
        return neg(self)

    def __sub__(self, other):
        if not isinstance(other, Game):
            return NotImplemented
        return add(self, neg(other))

    def __reduce__(self):
        return (make, (tuple(self.left), tuple(self.right)))


_registry: dict[tuple[frozenset, frozenset], Game] = {}
_registry_lock = threading.Lock()
_uids = itertools.count()


def make(left: Iterable[Game] = (), right: Iterable[Game] = ()) -> Game:
    """Return the unique game with these option sets."""
    key = (frozenset(left), frozenset(right))
    g = _registry.get(key)
    if g is not None:
        return g
    for opt in itertools.chain(*key):
        if not isinstance(opt, Game):
            raise TypeError(f"option {opt!r} is not a Game")
    with _registry_lock:
        g = _registry.get(key)
        if g is None:
            g = object.__new__(Game)
            object.__setattr__(g, "left", key[0])
            object.__setattr__(g, "right", key[1])
            object.__setattr__(g, "uid", next(_uids))
            _registry[key] = g
    return g


def _frozen_setattr(self, name, value):
    raise AttributeError("Game is immutable")


Game.__setattr__ = _frozen_setattr

ZERO = make()
STAR = make([ZERO], [ZERO])
UP = make([ZERO], [STAR])
DOWN = make([STAR], [ZERO])
ONE = make([ZERO], [])


# -- structure ---------------------------------------------------------------

_neg_cache: dict[Game, Game] = {}
_add_cache: dict[tuple[Game, Game], Game] = {}
_birthday_cache: dict[Game, int] = {}
_dicotic_cache: dict[Game, bool] = {}


def neg(g: Game) -> Game:
    r = _neg_cache.get(g)
    if r is None:
        r = make([neg(x) for x in g.right], [neg(x) for x in g.left])
        _neg_cache[g] = r
        _neg_cache[r] = g
    return r


def add(g: Game, h: Game) -> Game:
    """Disjunctive sum, built exactly as the recursive definition (no simplification)."""
    if g is ZERO:
        return h
    if h is ZERO:
        return g
    r = _add_cache.get((g, h))
    if r is None:
        r = make(
            [add(gl, h) for gl in g.left] + [add(g, hl) for hl in h.left],
            [add(gr, h) for gr in g.right] + [add(g, hr) for hr in h.right],
        )
        _add_cache[(g, h)] = r
        _add_cache[(h, g)] = r
    return r


def sub(g: Game, h: Game) -> Game:
    return add(g, neg(h))


def multiple(n: int, g: Game) -> Game:
    """``n`` copies of ``g`` summed (``n <= 0`` gives 0 and ``-n`` copies of ``-g``)."""
    if n < 0:
        return multiple(-n, neg(g))
    total = ZERO
    for _ in range(n):
        total = add(total, g)
    return total


def birthday(g: Game) -> int:
    """Height of the game tree of this form."""
    b = _birthday_cache.get(g)
    if b is None:
        b = 1 + max(map(birthday, itertools.chain(g.left, g.right)), default=-1)
        _birthday_cache[g] = b
    return b


def is_dicotic(g: Game) -> bool:
    d = _dicotic_cache.get(g)
    if d is None:
        if not g.left and not g.right:
            d = True
        elif not g.left or not g.right:
            d = False
        else:
            d = all(map(is_dicotic, itertools.chain(g.left, g.right)))
        _dicotic_cache[g] = d
    return d


def delta(g: Game) -> Game:
    """Replace every empty option set in the form by ``{0}``."""
    return _delta(g, {})


def _delta(g, seen):
    r = seen.get(g)
    if r is None:
        left = [_delta(x, seen) for x in g.left] or [ZERO]
        right = [_delta(x, seen) for x in g.right] or [ZERO]
        r = seen[g] = make(left, right)
    return r


# -- outcomes and order ------------------------------------------------------

_wins_cache: dict[Game, tuple[bool, bool]] = {}
_geq_cache: dict[tuple[Game, Game], bool] = {}


def _first_player_wins(g: Game) -> tuple[bool, bool]:
    """(Left wins moving first, Right wins moving first)."""
    r = _wins_cache.get(g)
    if r is None:
        left_wins = any(not _first_player_wins(gl)[1] for gl in g.left)
        right_wins = any(not _first_player_wins(gr)[0] for gr in g.right)
        r = _wins_cache[g] = (left_wins, right_wins)
    return r


def outcome(g: Game) -> Outcome:
    left_wins, right_wins = _first_player_wins(g)
    if left_wins:
        return Outcome.N if right_wins else Outcome.L
    return Outcome.R if right_wins else Outcome.P


def geq(g: Game, h: Game) -> bool:
    """``g >= h`` as values.

    Uses the recursive criterion: no right option of g is <= h and no left
    option of h is >= g (equivalent to Right losing g - h when moving first).
    """
    if g is h:
        return True
    key = (g, h)
    r = _geq_cache.get(key)
    if r is None:
        r = not any(geq(h, gr) for gr in g.right) and not any(geq(hl, g) for hl in h.left)
        _geq_cache[key] = r
    return r


def leq(g: Game, h: Game) -> bool:
    return geq(h, g)


def eq(g: Game, h: Game) -> bool:
    return geq(g, h) and geq(h, g)


def gt(g: Game, h: Game) -> bool:
    return geq(g, h) and not geq(h, g)


def lt(g: Game, h: Game) -> bool:
    return gt(h, g)


def confused(g: Game, h: Game) -> bool:
    return not geq(g, h) and not geq(h, g)


# -- canonical form ----------------------------------------------------------

_canon_cache: dict[Game, Game] = {}


def _undominated(options: set[Game], better) -> set[Game]:
    # options are canonical and distinct, so better(a, b) and better(b, a) never both hold
    return {x for x in options if not any(y is not x and better(y, x) for y in options)}


def canonicalize(g: Game) -> Game:
    """Simplest form equal to ``g`` (dominated options deleted, reversible ones bypassed)."""
    c = _canon_cache.get(g)
    if c is not None:
        return c
    left = {canonicalize(x) for x in g.left}
    right = {canonicalize(x) for x in g.right}
    while True:
        left = _undominated(left, geq)
        right = _undominated(right, leq)
        current = make(left, right)
        changed = False
        new_left: set[Game] = set()
        for gl in left:
            reverser = next((glr for glr in gl.right if leq(glr, current)), None)
            if reverser is None:
                new_left.add(gl)
            else:
                new_left.update(reverser.left)
                changed = True
        new_right: set[Game] = set()
        for gr in right:
            reverser = next((grl for grl in gr.left if geq(grl, current)), None)
            if reverser is None:
                new_right.add(gr)
            else:
                new_right.update(reverser.right)
                changed = True
        if not changed:
            break
        left, right = new_left, new_right
    _canon_cache[g] = current
    _canon_cache[current] = current
    return current


def is_canonical(g: Game) -> bool:
    return canonicalize(g) is g


# -- numbers, stops, infinitesimals -----------------------------------------

_number_cache: dict[Game, Fraction | None] = {}


def _canonical_number(c: Game) -> Fraction | None:
    if c in _number_cache:
        return _number_cache[c]
    lefts = [_canonical_number(x) for x in c.left]
    rights = [_canonical_number(x) for x in c.right]
    value = None
    if None not in lefts and None not in rights:
        lo = max(lefts, default=None)
        hi = min(rights, default=None)
        if lo is None or hi is None or lo < hi:
            value = simplest_between(lo, hi)
    _number_cache[c] = value
    return value


def number_value(g: Game) -> DyadicRational | None:
    """The number ``g`` equals, or None when ``g`` is not a number."""
    v = _canonical_number(canonicalize(g))
    return None if v is None else DyadicRational.from_fraction(v)


def is_number(g: Game) -> bool:
    return _canonical_number(canonicalize(g)) is not None


_stops_cache: dict[Game, tuple[Fraction, Fraction]] = {}


def _canonical_stops(c: Game) -> tuple[Fraction, Fraction]:
    r = _stops_cache.get(c)
    if r is None:
        v = _canonical_number(c)
        if v is not None:
            r = (v, v)
        else:
            # a canonical non-number has options on both sides
            r = (
                max(_canonical_stops(x)[1] for x in c.left),
                min(_canonical_stops(x)[0] for x in c.right),
            )
        _stops_cache[c] = r
    return r


def stops(g: Game) -> tuple[DyadicRational, DyadicRational]:
    """(Left stop, Right stop)."""
    ls, rs = _canonical_stops(canonicalize(g))
    return DyadicRational.from_fraction(ls), DyadicRational.from_fraction(rs)


def is_infinitesimal(g: Game) -> bool:
    ls, rs = _canonical_stops(canonicalize(g))
    return ls == 0 and rs == 0


# -- named values ------------------------------------------------------------

_atom_cache: dict[tuple[str, int], Game] = {}

ATOM_KINDS = (
    "integer",
    "star",
    "up_multiple",
    "up_star_multiple",
    "down_multiple",
    "down_star_multiple",
)


def integer(n: int) -> Game:
    g = ZERO
    for _ in range(abs(n)):
        g = make([g], [])
    return g if n >= 0 else neg(g)


def nimber(n: int) -> Game:
    """``*n``; ``nimber(1)`` is ``*``."""
    if n < 0:
        raise ValueError("nimber index must be nonnegative")
    heaps: list[Game] = []
    for _ in range(n):
        heaps.append(make(heaps, heaps))
    return make(heaps, heaps)


def atom(kind: str, n: int = 1) -> Game:
    """Named canonical values: integers, ``*``, and ``n.^``, ``n.^ + *`` and their negatives."""
    key = (kind, n)
    g = _atom_cache.get(key)
    if g is not None:
        return g
    if kind == "integer":
        g = integer(n)
    elif kind == "star":
        if n < 1:
            raise ValueError("star index must be positive")
        g = nimber(n)
    elif kind in ("up_multiple", "up_star_multiple", "down_multiple", "down_star_multiple"):
        if n < 1:
            raise ValueError(f"{kind} requires a positive multiple, got {n}")
        if kind.startswith("down"):
            g = neg(atom(kind.replace("down", "up"), n))
        elif kind == "up_star_multiple":
            g = canonicalize(add(atom("up_multiple", n), STAR))
        else:
            g = UP
            for _ in range(n - 1):
                g = canonicalize(add(g, UP))
    else:
        raise ValueError(f"unknown atom kind {kind!r}")
    _atom_cache[key] = g
    return g


def up_multiple(n: int, star: bool = False) -> Game:
    """Canonical ``n.^`` (plus ``*`` when asked); ``n`` may be zero or negative."""
    if n == 0:
        return STAR if star else ZERO
    base = "up" if n > 0 else "down"
    return atom(f"{base}_star_multiple" if star else f"{base}_multiple", abs(n))


def up_bound(g: Game) -> int:
    """Least N with ``N.v < g``, ``N.v + * < g``, ``g < N.^`` and ``g < N.^ + *``."""
    if not is_dicotic(g):
        raise ValueError("up_bound requires a dicotic game")
    limit = birthday(g) + 2
    for n in range(1, limit + 1):
        if (
            lt(g, up_multiple(n))
            and lt(g, up_multiple(n, star=True))
            and gt(g, up_multiple(-n))
            and gt(g, up_multiple(-n, star=True))
        ):
            return n
    raise AssertionError(f"no bound found up to {limit}")  # excluded for dicotic games


def clear_caches() -> None:
    """Drop memo tables (the identity registry is kept)."""
    for cache in (
        _neg_cache,
        _add_cache,
        _birthday_cache,
        _dicotic_cache,
        _wins_cache,
        _geq_cache,
        _canon_cache,
        _number_cache,
        _stops_cache,
    ):
        cache.clear()
