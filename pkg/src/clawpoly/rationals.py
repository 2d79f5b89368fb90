"""Exact rational scalars.

The whole package computes over Python ints and fractions.Fraction; floats
never appear. Values are canonicalized so that integral rationals are plain
ints (cheaper arithmetic, identical hashing/equality semantics).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


def canon(x: Rational) -> Rational:
    """Return x with integral Fractions collapsed to int."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x)
        return x
    if isinstance(x, int):
        return x
    raise TypeError(f"not an exact rational: {x!r}")


def is_integral(x: Rational) -> bool:
    return isinstance(x, int) or x.denominator == 1


def parse_rational(text: str) -> Rational:
    """Parse '7', '-3' or 'p/q' into an exact rational."""
    s = text.strip()
    if "/" in s:
        num, _, den = s.partition("/")
        try:
            return canon(Fraction(int(num), int(den)))
        except ZeroDivisionError:
            raise ValueError(f"zero denominator in {text!r}") from None
    return int(s)


def fmt(x: Rational) -> str:
    """Render a rational the way parse_rational reads it back."""
    x = canon(x)
    if isinstance(x, int):
        return str(x)
    return f"{x.numerator}/{x.denominator}"


def canon_point(coords) -> tuple:
    """Canonicalize a coordinate sequence into a hashable tuple."""
    return tuple(canon(c) for c in coords)
