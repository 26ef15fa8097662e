"""Closed intervals with exact rational endpoints.

Every operation returns an enclosure of all possible results, so a sign
decision read off an interval is certified. A degenerate interval
(``lo == hi``) carries an exact rational value.
"""

from __future__ import annotations

from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction
from typing import Union

from gmpy2 import mpq

Number = Union[int, Fraction]
_MPQ = type(mpq())
_RATIONAL = (int, Fraction, _MPQ)


def as_fraction(x) -> Fraction:
    """A plain ``Fraction`` from an int, Fraction, mpq or rational string."""
    if isinstance(x, _MPQ):
        return Fraction(int(x.numerator), int(x.denominator))
    return Fraction(x)


class Interval:
    __slots__ = ("lo", "hi")

    def __init__(self, lo: Number, hi: Number | None = None):
        lo = mpq(lo)
        hi = lo if hi is None else mpq(hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        self.lo = lo
        self.hi = hi

    def __reduce__(self):
        return (Interval, (self.lo, self.hi))

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, x: Number) -> bool:
        return self.lo <= x <= self.hi

    def __add__(self, other):
        o = _coerce(other)
        if self.exact and o.exact:
            return _point(self.lo + o.lo)
        return _make(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        o = _coerce(other)
        if self.exact and o.exact:
            return _point(self.lo - o.lo)
        return _make(self.lo - o.hi, self.hi - o.lo)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, _RATIONAL):
            if self.exact:
                return _point(self.lo * other)
            if other >= 0:
                return _make(self.lo * other, self.hi * other)
            return _make(self.hi * other, self.lo * other)
        o = _coerce(other)
        if self.exact and o.exact:
            return _point(self.lo * o.lo)
        p = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return _make(min(p), max(p))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _RATIONAL):
            if other == 0:
                raise ZeroDivisionError("interval division by zero")
            return self * (1 / mpq(other))
        return self * _coerce(other).reciprocal()

    def __rtruediv__(self, other):
        return _coerce(other) * self.reciprocal()

    def reciprocal(self) -> Interval:
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError(f"interval {self} contains zero")
        if self.exact:
            return _point(1 / self.lo)
        return _make(1 / self.hi, 1 / self.lo)

    def square(self) -> Interval:
        if self.exact:
            return _point(self.lo * self.lo)
        if self.lo >= 0:
            return _make(self.lo * self.lo, self.hi * self.hi)
        if self.hi <= 0:
            return _make(self.hi * self.hi, self.lo * self.lo)
        return _make(mpq(0), max(self.lo * self.lo, self.hi * self.hi))

    def positive(self) -> bool:
        return self.lo > 0

    def negative(self) -> bool:
        return self.hi < 0

    def excludes(self, lo: Number, hi: Number) -> bool:
        """True when this interval is disjoint from ``[lo, hi]``."""
        return self.hi < lo or self.lo > hi

    def within(self, lo: Number, hi: Number) -> bool:
        return lo <= self.lo and self.hi <= hi

    def __eq__(self, other):
        if isinstance(other, Interval):
            return self.lo == other.lo and self.hi == other.hi
        if isinstance(other, _RATIONAL):
            return self.exact and self.lo == other
        return NotImplemented

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __float__(self):
        return float(self.mid)

    def __repr__(self):
        if self.exact:
            return f"Interval({self.lo})"
        return f"Interval({self.lo}, {self.hi})"

    def __str__(self):
        if self.exact:
            return str(self.lo)
        return f"[{decimal_str(self.lo)}, {decimal_str(self.hi)}]"


def _make(lo: Fraction, hi: Fraction) -> Interval:
    iv = object.__new__(Interval)
    iv.lo = lo
    iv.hi = hi
    return iv


def _point(x: Fraction) -> Interval:
    return _make(x, x)


def _coerce(x) -> Interval:
    return x if isinstance(x, Interval) else Interval(x)


def hull(*xs: Interval) -> Interval:
    return Interval(min(x.lo for x in xs), max(x.hi for x in xs))


def decimal_str(x: Number, digits: int = 12) -> str:
    """Render a rational with ``digits`` significant digits, round-half-even."""
    x = mpq(x)
    ctx = Context(prec=digits, rounding=ROUND_HALF_EVEN)
    d = ctx.divide(Decimal(int(x.numerator)), Decimal(int(x.denominator)))
    if d == d.to_integral_value():
        return str(d.quantize(Decimal(1)))
    return format(d.normalize(ctx), "f")
