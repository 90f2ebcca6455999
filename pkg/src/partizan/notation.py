"""Text form of game values.

Grammar (whitespace-insensitive)::

    expr  := term ('+' term)*
    term  := '-' term | atom
    atom  := INT ['/' INT] ['*' [INT]]      integers, dyadics, optionally plus a nimber
           | [INT] ('^' | 'v') ['*' [INT]]  up/down multiples, optionally plus a nimber
           | '*' [INT]                      star / nimber
           | '{' [expr (',' expr)*] '|' [expr (',' expr)*] '}'

Formatting always works on the canonical form and emits integers, dyadics,
``*``, ``*n``, ``^``, ``v``, ``n^``, ``nv``, ``n^*``, ``nv*``, falling back to
the braced form.
"""

from __future__ import annotations

import re
from fractions import Fraction

from . import game as _g
from .game import Game


class ValueSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at column {pos + 1} in {text!r}")
        self.column = pos + 1


# -- formatting --------------------------------------------------------------

_format_cache: dict[Game, str] = {}


def format_game(g: Game) -> str:
    """Canonical value text of ``g``."""
    return _format_canonical(_g.canonicalize(g))


def _format_canonical(c: Game) -> str:
    s = _format_cache.get(c)
    if s is None:
        s = _format_cache[c] = _name(c) or _braced(c)
    return s


def _name(c: Game) -> str | None:
    v = _g.number_value(c)
    if v is not None:
        return str(v)
    b = _g.birthday(c)
    if c is _g.nimber(b):
        return "*" if b == 1 else f"*{b}"
    n = b - 1
    if n >= 1:
        count = "" if n == 1 else str(n)
        for star in (False, True):
            suffix = "*" if star else ""
            if c is _g.up_multiple(n, star):
                return f"{count}^{suffix}"
            if c is _g.up_multiple(-n, star):
                return f"{count}v{suffix}"
    return None


def _braced(c: Game) -> str:
    left = ",".join(sorted(_format_canonical(x) for x in c.left))
    right = ",".join(sorted(_format_canonical(x) for x in c.right))
    return "{" + left + "|" + right + "}"


# -- parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(\S))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    for m in _TOKEN.finditer(text):
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            ch = m.group(2)
            if ch not in "+-/*^v{}|,":
                raise ValueSyntaxError(f"unexpected character {ch!r}", text, m.start(2))
            tokens.append((ch, ch, m.start(2)))
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def take(self, kind: str | None = None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            self.fail(f"expected {kind!r}, found {tok[1] or 'end of input'!r}")
        self.i += 1
        return tok

    def fail(self, message: str):
        raise ValueSyntaxError(message, self.text, self.tokens[self.i][2])

    def expr(self) -> Game:
        terms = [self.term()]
        while self.peek() == "+":
            self.take()
            terms.append(self.term())
        total = terms.pop()
        while terms:
            total = _g.add(terms.pop(), total)
        return total

    def term(self) -> Game:
        if self.peek() == "-":
            self.take()
            return _g.neg(self.term())
        return self.atom()

    def star_suffix(self) -> Game:
        if self.peek() != "*":
            return _g.ZERO
        self.take()
        if self.peek() == "int":
            return _g.nimber(int(self.take()[1]))
        return _g.STAR

    def atom(self) -> Game:
        kind = self.peek()
        if kind == "{":
            self.take()
            left = self.option_list("|")
            self.take("|")
            right = self.option_list("}")
            self.take("}")
            return _g.make(left, right)
        if kind == "*":
            return self.star_suffix()
        count = None
        if kind == "int":
            count = int(self.take()[1])
            kind = self.peek()
        if kind in ("^", "v"):
            self.take()
            n = 1 if count is None else count
            g = _g.multiple(n, _g.UP if kind == "^" else _g.DOWN)
            return _g.add(g, self.star_suffix())
        if count is None:
            self.fail(f"unexpected {self.tokens[self.i][1] or 'end of input'!r}")
        if kind == "/":
            self.take()
            den = int(self.take("int")[1])
            if den == 0 or den & (den - 1):
                self.fail("denominator must be a power of two")
            g = _dyadic(count, den)
        else:
            g = _g.integer(count)
        return _g.add(g, self.star_suffix())

    def option_list(self, closer: str) -> list[Game]:
        if self.peek() == closer:
            return []
        opts = [self.expr()]
        while self.peek() == ",":
            self.take()
            opts.append(self.expr())
        return opts


def _dyadic(num: int, den: int) -> Game:
    """Canonical game for the number ``num/den`` (den a power of two)."""
    q = Fraction(num, den)
    if q.denominator == 1:
        return _g.integer(q.numerator)
    step = Fraction(1, q.denominator)
    return _g.make([_dyadic_frac(q - step)], [_dyadic_frac(q + step)])


def _dyadic_frac(q) -> Game:
    return _dyadic(q.numerator, q.denominator)


def parse_game(text: str) -> Game:
    """Parse value text into a game form (sums are left unsimplified)."""
    p = _Parser(text)
    g = p.expr()
    if p.peek() != "end":
        p.fail(f"unexpected {p.tokens[p.i][1]!r}")
    return g
