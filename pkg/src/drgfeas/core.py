"""Intersection arrays and the combinatorial parameters derived from them."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "ArrayValidationError",
    "IntersectionArray",
    "ArrayParameters",
    "parse_array",
    "format_array",
    "derive_parameters",
]


class ArrayValidationError(ValueError):
    """Raised for a malformed literal or an array violating a structural invariant.

    ``invariant`` names the violated rule (``syntax``, ``positive``, ``c1``,
    ``c-monotone``, ``b-monotone``, ``a-nonnegative``).
    """

    def __init__(self, invariant: str, message: str):
        super().__init__(message)
        self.invariant = invariant


@dataclass(frozen=True, order=True, init=False)
class IntersectionArray:
    """The array ``{b_0, ..., b_{D-1}; c_1, ..., c_D}``.

    Construction validates; an instance is always a structurally valid array.
    Ordering is lexicographic on ``(D, k, b, c)``.
    """

    D: int
    k: int
    b: tuple[int, ...]
    c: tuple[int, ...]

    def __init__(self, b, c):
        b = tuple(int(x) for x in b)
        c = tuple(int(x) for x in c)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "D", len(b))
        object.__setattr__(self, "k", b[0] if b else 0)
        _validate(b, c)

    def __reduce__(self):
        return (IntersectionArray, (self.b, self.c))

    def bi(self, i: int) -> int:
        """``b_i`` with ``b_D = 0``."""
        return self.b[i] if i < self.D else 0

    def ci(self, i: int) -> int:
        """``c_i`` with ``c_0 = 0``."""
        return self.c[i - 1] if i >= 1 else 0

    def ai(self, i: int) -> int:
        return self.k - self.bi(i) - self.ci(i)

    @property
    def a(self) -> tuple[int, ...]:
        return tuple(self.ai(i) for i in range(self.D + 1))

    def __str__(self) -> str:
        return format_array(self)

    def __repr__(self) -> str:
        return f"IntersectionArray({{{format_array(self)}}})"


def _validate(b: tuple[int, ...], c: tuple[int, ...]) -> None:
    if not b or len(b) != len(c):
        raise ArrayValidationError("syntax", "b and c must be non-empty and of equal length")
    if any(x < 1 for x in b + c):
        raise ArrayValidationError("positive", "all entries must be positive integers")
    if c[0] != 1:
        raise ArrayValidationError("c1", f"c_1 must equal 1, got {c[0]}")
    for i in range(len(c) - 1):
        if c[i] > c[i + 1]:
            raise ArrayValidationError(
                "c-monotone", f"c_{i + 1} = {c[i]} > c_{i + 2} = {c[i + 1]}"
            )
        if b[i] < b[i + 1]:
            raise ArrayValidationError(
                "b-monotone", f"b_{i} = {b[i]} < b_{i + 1} = {b[i + 1]}"
            )
    k, D = b[0], len(b)
    for i in range(1, D + 1):
        bi = b[i] if i < D else 0
        if bi + c[i - 1] > k:
            raise ArrayValidationError(
                "a-nonnegative", f"a_{i} = {k - bi - c[i - 1]} is negative"
            )


_LITERAL = re.compile(r"^\s*\{?\s*([0-9,\s]+);([0-9,\s]+)\}?\s*$")


def parse_array(text: str) -> IntersectionArray:
    """Parse ``"b0,...,b_{D-1};c1,...,c_D"`` (braces and whitespace tolerated)."""
    m = _LITERAL.match(text)
    if not m:
        raise ArrayValidationError("syntax", f"malformed array literal {text!r}")
    try:
        b = [int(x) for x in m.group(1).split(",")]
        c = [int(x) for x in m.group(2).split(",")]
    except ValueError:
        raise ArrayValidationError("syntax", f"malformed array literal {text!r}") from None
    if len(b) != len(c):
        raise ArrayValidationError("syntax", f"halves of {text!r} differ in length")
    return IntersectionArray(b, c)


def format_array(arr: IntersectionArray) -> str:
    return ",".join(map(str, arr.b)) + ";" + ",".join(map(str, arr.c))


@dataclass(frozen=True)
class ArrayParameters:
    k_i: tuple[Fraction, ...]
    a_i: tuple[int, ...]
    n: Fraction
    bipartite: bool

    @property
    def integral(self) -> bool:
        return all(x.denominator == 1 for x in self.k_i)


def derive_parameters(arr: IntersectionArray) -> ArrayParameters:
    """Vertex counts per distance layer via ``c_{i+1} k_{i+1} = b_i k_i``.

    Non-integral ``k_i`` are kept as exact fractions; integrality is a
    feasibility question, not a parse error.
    """
    ks = [Fraction(1)]
    for i in range(arr.D):
        ks.append(ks[-1] * arr.b[i] / arr.c[i])
    a = arr.a
    return ArrayParameters(
        k_i=tuple(ks), a_i=a, n=sum(ks, Fraction(0)), bipartite=not any(a)
    )
