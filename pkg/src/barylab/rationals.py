"""Exact rational scalars and vectors used by every geometric module.

All core quantities are ``fractions.Fraction`` values (always reduced,
positive denominator); vectors are plain tuples of them.  Floats are
deliberately rejected at the boundary so binary rounding can never leak
into an exact computation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction
Vector = tuple[Fraction, ...]


def rational(value: int | str | Fraction) -> Fraction:
    """Coerce ``value`` to an exact Fraction; floats are refused."""
    if isinstance(value, float):
        raise TypeError("refusing float %r: exact paths take int/str/Fraction" % value)
    return Fraction(value)


def vector(values: Iterable[int | str | Fraction]) -> Vector:
    return tuple(rational(v) for v in values)


def zero_vector(dim: int) -> Vector:
    return (Fraction(0),) * dim


def parse_rational(text: str) -> Fraction:
    """Parse 'p/q' or integer text into a Fraction."""
    return Fraction(text.strip())


def parse_vector(text: str) -> Vector:
    """Parse a comma-separated rational list such as '1/2,-3,0/1'."""
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise ValueError("empty vector text")
    return tuple(parse_rational(p) for p in parts)


def format_vector(v: Vector) -> str:
    return ",".join(str(q) for q in v)


def rational_to_pair(q: Fraction) -> list[int]:
    return [q.numerator, q.denominator]


def rational_from_pair(pair: Sequence[int]) -> Fraction:
    if len(pair) != 2:
        raise ValueError("rational pair must be [numerator, denominator]")
    num, den = pair
    if not isinstance(num, int) or not isinstance(den, int):
        raise ValueError("rational pair entries must be integers")
    if den == 0:
        raise ValueError("zero denominator")
    return Fraction(num, den)


def vector_to_pairs(v: Vector) -> list[list[int]]:
    return [rational_to_pair(q) for q in v]


def vector_from_pairs(pairs: Sequence[Sequence[int]]) -> Vector:
    return tuple(rational_from_pair(p) for p in pairs)


def vadd(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vsub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vscale(c: Fraction | int, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def vdot(u: Vector, v: Vector) -> Fraction:
    return sum((a * b for a, b in zip(u, v, strict=True)), Fraction(0))


def vlerp(u: Vector, v: Vector, t: Fraction) -> Vector:
    """Point (1-t)*u + t*v."""
    return tuple(a + t * (b - a) for a, b in zip(u, v, strict=True))


def sqdist(u: Vector, v: Vector) -> Fraction:
    """Exact squared Euclidean distance."""
    return sum(((a - b) ** 2 for a, b in zip(u, v, strict=True)), Fraction(0))


def as_floats(v: Sequence[Fraction]) -> list[float]:
    return [float(q) for q in v]
