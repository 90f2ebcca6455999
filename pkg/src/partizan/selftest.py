"""Desk-scale property suites behind ``partizan selftest``.

Each suite returns ``(passed, total)``; a suite passes when the two agree.
"""

from __future__ import annotations

import itertools
import random
from typing import Callable

from . import game as G
from .game import DOWN, ONE, STAR, UP, ZERO, Outcome, make
from .reductions import certify_reduction
from .rulesets import TTPosition, Variant, to_game
from .universality import down_path, realize_search, up_path, verify_value


def tt_corpus(pieces=(1, 2), lengths=(1, 2, 3, 4), square=True, variant=Variant.STANDARD):
    """All blue-red 1 x n boards (and 2 x 2) with every colouring and piece placement."""
    shapes = [(1, n) for n in lengths] + ([(2, 2)] if square else [])
    for h, w in shapes:
        cells = [(r, c) for r in range(h) for c in range(w)]
        for colours in itertools.product("LR", repeat=h * w):
            rows = ["".join(colours[r * w:(r + 1) * w]) for r in range(h)]
            for k in pieces:
                for placed in itertools.combinations(cells, k):
                    yield TTPosition.from_rows(rows, placed, variant=variant)


def dicotic_forms(day: int) -> list:
    """Canonical forms of all dicotic games born by ``day``, deduplicated."""
    forms = [ZERO]
    for _ in range(day):
        subsets = [
            s for k in range(1, len(forms) + 1) for s in itertools.combinations(forms, k)
        ]
        found = {ZERO}
        for left in subsets:
            for right in subsets:
                found.add(G.canonicalize(make(left, right)))
        forms = sorted(found, key=lambda g: (G.birthday(g), str(g)))
    return forms


def random_games(count: int, seed: int = 0) -> list:
    """Random small games, closed under negation, plus sums of pairs."""
    rng = random.Random(seed)
    pool = [ZERO, STAR, UP, DOWN, ONE, G.neg(ONE)]
    while len(pool) < count // 3:
        left = rng.sample(pool, rng.randint(0, 3))
        right = rng.sample(pool, rng.randint(0, 3))
        g = G.canonicalize(make(left, right))
        if G.birthday(g) <= 4 and g not in pool:
            pool.append(g)
    corpus = list(pool) + [G.neg(g) for g in pool]
    while len(corpus) < count:
        corpus.append(G.add(rng.choice(pool), rng.choice(pool)))
    return corpus[:count]


def _count(checks) -> tuple[int, int]:
    results = list(checks)
    return sum(results), len(results)


def suite_up_star():
    def checks():
        for n in range(1, 9):
            nu = G.multiple(n, UP)
            prev = G.multiple(n - 1, UP)
            yield G.eq(nu, make([ZERO], [G.add(prev, STAR)]))
            if n > 1:
                yield G.eq(G.add(nu, STAR), make([ZERO], [prev]))
                yield G.gt(nu, STAR)
        yield G.eq(G.add(UP, STAR), make([ZERO, STAR], [ZERO]))
        yield G.confused(UP, STAR)

    return _count(checks())


def suite_dicotic_day3():
    def checks():
        for g in dicotic_forms(3):
            n = max(G.birthday(g) - 1, 0)
            yield G.is_dicotic(g) and G.is_infinitesimal(g)
            yield G.geq(G.up_multiple(n), g) or G.geq(G.up_multiple(n, star=True), g)

    return _count(checks())


def suite_staircase():
    def checks():
        for n in range(7):
            expected = G.up_multiple(-n, star=n % 2 == 0)
            yield G.eq(to_game(down_path(n)), expected)
            yield G.eq(to_game(up_path(n)), G.neg(to_game(down_path(n))))

    return _count(checks())


def suite_reductions():
    return _count(
        certify_reduction(pos, target).isomorphic
        for pos in tt_corpus()
        for target in ("gol", "btd")
    )


def suite_delta_dicotic():
    return _count(
        G.is_dicotic(to_game(pos)) for pos in tt_corpus(variant=Variant.DELTA)
    )


def suite_realization():
    def checks():
        for target in (ZERO, STAR, UP, DOWN):
            result = realize_search(target, 2, 2, 1)
            yield result.found and verify_value(result.position, target)

    return _count(checks())


def suite_algebra():
    corpus = random_games(60, seed=1)
    rng = random.Random(2)

    def checks():
        for g in corpus:
            yield G.outcome(G.sub(g, g)) is Outcome.P
            yield G.outcome(G.neg(g)) is G.outcome(g).mirror()
            yield G.neg(G.neg(g)) is g
            c = G.canonicalize(g)
            yield G.eq(c, g) and G.canonicalize(c) is c
        for _ in range(60):
            a, b, c = rng.sample(corpus, 3)
            yield not (G.geq(a, b) and G.geq(b, c)) or G.geq(a, c)
            yield (G.canonicalize(a) is G.canonicalize(b)) == G.eq(a, b)

    return _count(checks())


SUITES: dict[str, Callable[[], tuple[int, int]]] = {
    "up-star-identities": suite_up_star,
    "dicotic-day3": suite_dicotic_day3,
    "staircase-paths": suite_staircase,
    "reductions": suite_reductions,
    "delta-dicotic": suite_delta_dicotic,
    "realization": suite_realization,
    "engine-algebra": suite_algebra,
}
