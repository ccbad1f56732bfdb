"""
Exact rational helpers: "p/q" codec, points, determinants.
"""

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Tuple


RationalPoint = Tuple[Fraction, ...]


def parse_rational(value) -> Fraction:
    """Parse an int, Fraction or "p/q" / "p" string. Floats are rejected."""
    if isinstance(value, bool):
        raise ValueError(f"not a rational number: {value!r}")
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in '.eE'):
            raise ValueError(f"not an exact rational string: {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not a rational number: {value!r}")
    raise ValueError(f"not a rational number: {value!r} (use 'p/q' strings)")


def format_rational(value) -> str:
    x = Fraction(value)
    return f"{x.numerator}/{x.denominator}"


def make_point(coords: Iterable) -> RationalPoint:
    return tuple(parse_rational(c) for c in coords)


def format_point(point: Sequence) -> list:
    return [format_rational(c) for c in point]


def determinant(rows: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a square matrix by Fraction elimination."""
    a = [[Fraction(v) for v in row] for row in rows]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant needs a square matrix")
    det = Fraction(1)
    for col in range(n):
        pivot = next((i for i in range(col, n) if a[i][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        p = a[col][col]
        det *= p
        for i in range(col + 1, n):
            f = a[i][col] / p
            if f:
                for j in range(col, n):
                    a[i][j] -= f * a[col][j]
    return det
