"""Exact dyadic rationals, used for stop values."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import floor


@total_ordering
@dataclass(frozen=True)
class DyadicRational:
    """``numerator / 2**exponent`` in reduced form (exponent 0 or odd numerator)."""

    numerator: int
    exponent: int = 0

    def __post_init__(self):
        if self.exponent < 0:
            raise ValueError("exponent must be nonnegative")
        if self.exponent and self.numerator % 2 == 0:
            raise ValueError("DyadicRational must be given in reduced form")

    @classmethod
    def from_fraction(cls, value) -> DyadicRational:
        q = Fraction(value)
        den = q.denominator
        exponent = den.bit_length() - 1
        if den != 1 << exponent:
            raise ValueError(f"{q} is not dyadic")
        return cls(q.numerator, exponent)

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def __lt__(self, other):
        if not isinstance(other, (DyadicRational, int)):
            return NotImplemented
        return self.to_fraction() < _frac(other)

    def __eq__(self, other):
        if isinstance(other, DyadicRational):
            return self.numerator == other.numerator and self.exponent == other.exponent
        if isinstance(other, int):
            return self.exponent == 0 and self.numerator == other
        return NotImplemented

    def __hash__(self):
        return hash(self.to_fraction())

    def __neg__(self):
        return DyadicRational(-self.numerator, self.exponent)

    def __add__(self, other):
        if not isinstance(other, (DyadicRational, int)):
            return NotImplemented
        return DyadicRational.from_fraction(self.to_fraction() + _frac(other))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (DyadicRational, int)):
            return NotImplemented
        return DyadicRational.from_fraction(self.to_fraction() - _frac(other))

    def is_integer(self) -> bool:
        return self.exponent == 0

    def __str__(self):
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/{1 << self.exponent}"


def _frac(x) -> Fraction:
    return x.to_fraction() if isinstance(x, DyadicRational) else Fraction(x)


def simplest_between(lo: Fraction | None, hi: Fraction | None) -> Fraction:
    """Simplest dyadic strictly between ``lo`` and ``hi`` (None means unbounded)."""
    if lo is not None and hi is not None and lo >= hi:
        raise ValueError(f"empty interval ({lo}, {hi})")
    if (lo is None or lo < 0) and (hi is None or hi > 0):
        return Fraction(0)
    if hi is not None and hi <= 0:
        return -simplest_between(-hi, None if lo is None else -lo)
    # here 0 <= lo
    n = floor(lo) + 1
    if hi is None or n < hi:
        return Fraction(n)
    k = 1
    while True:
        scale = 1 << k
        candidate = Fraction(floor(lo * scale) + 1, scale)
        if candidate < hi:
            return candidate
        k += 1
