"""Finite truncations of the shrinking-interval product box.

The d-dimensional box has k-th coordinate range [-1/k, 1/k].  The target
point (1/2, 1/3, ..., 1/(d+1)) sits strictly inside every finite
truncation, but its straight-line prolongation coefficient is exactly
1/d, so the interior margin vanishes as d grows.  Box structure keeps all
of this exact without LPs; sampling is the only float path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .geometry import Polytope
from .rationals import Vector, rational_to_pair


class CubeInputError(ValueError):
    """Invalid dimension or sample count."""


@dataclass(frozen=True)
class TruncatedCube:
    """Axis-aligned box with k-th bounds -1/k .. 1/k (k = 1..dim)."""

    dim: int

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise CubeInputError("dimension must be >= 1")

    def bound(self, k: int) -> Fraction:
        """Half-width of coordinate k (1-based)."""
        return Fraction(1, k)

    def contains(self, x: Vector) -> bool:
        if len(x) != self.dim:
            return False
        return all(abs(v) <= Fraction(1, k) for k, v in enumerate(x, start=1))

    def to_polytope(self) -> Polytope:
        """Vertex form (2^dim corners); only sensible at small dim."""
        if self.dim > 16:
            raise CubeInputError("vertex form has 2^dim corners; dim too large")
        corners = itertools.product(
            *[(-Fraction(1, k), Fraction(1, k)) for k in range(1, self.dim + 1)]
        )
        return Polytope(vertices=tuple(corners), ambient_dim=self.dim)


def cube(d: int) -> TruncatedCube:
    return TruncatedCube(dim=d)


def target_point(d: int) -> Vector:
    """(1/2, 1/3, ..., 1/(d+1)): strictly inside every coordinate range."""
    if d < 1:
        raise CubeInputError("dimension must be >= 1")
    return tuple(Fraction(1, k + 1) for k in range(1, d + 1))


def box_alpha_max(box: TruncatedCube, a: Vector, x: Vector) -> Fraction | None:
    """sup{alpha >= 0 : a + alpha*(a - x) stays in the box}, by interval
    arithmetic per coordinate; None marks +infinity (x == a)."""
    if len(a) != box.dim or len(x) != box.dim:
        raise CubeInputError("point dimension != box dimension")
    if not box.contains(a):
        raise CubeInputError("a must lie in the box")
    if not box.contains(x):
        raise CubeInputError("x must lie in the box")
    best: Fraction | None = None
    for k in range(1, box.dim + 1):
        g = a[k - 1] - x[k - 1]
        if g == 0:
            continue
        hi = box.bound(k)
        lo = -hi
        limit = (hi - a[k - 1]) / g if g > 0 else (lo - a[k - 1]) / g
        if best is None or limit < best:
            best = limit
    return best


def cube_alpha_max(d: int) -> Fraction:
    """Prolongation coefficient of the target point against the origin;
    equals 1/d, and the box-arithmetic route must agree exactly."""
    box = cube(d)
    a = target_point(d)
    x = (Fraction(0),) * d
    computed = box_alpha_max(box, a, x)
    closed_form = Fraction(1, d)
    if computed != closed_form:
        raise AssertionError("box arithmetic disagrees with closed form")
    return computed


@dataclass(frozen=True)
class CoordinateMeasure:
    """Mixture on [-1/k, 1/k]: atom at 1/k with probability k/(k+1), plus
    the uniform distribution on the interval with probability 1/(k+1).
    Full-interval support with mean exactly 1/(k+1)."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise CubeInputError("coordinate index must be >= 1")

    @property
    def atom(self) -> Fraction:
        return Fraction(1, self.k)

    @property
    def atom_probability(self) -> Fraction:
        return Fraction(self.k, self.k + 1)

    def mean(self) -> Fraction:
        return self.atom_probability * self.atom

    def variance(self) -> Fraction:
        k = self.k
        second_moment = Fraction(1, k * (k + 1)) + Fraction(1, 3 * k * k * (k + 1))
        return second_moment - self.mean() ** 2


def sample_cube_measure(d: int, seed: int, count: int) -> np.ndarray:
    """(count, d) float samples of the product of coordinate mixtures.

    Draw policy (fixed for reproducibility): per coordinate k in order,
    one uniform array decides atom-vs-uniform, a second supplies the
    uniform branch value.
    """
    if d < 1:
        raise CubeInputError("dimension must be >= 1")
    if count < 1:
        raise CubeInputError("count must be >= 1")
    rng = np.random.default_rng(seed)
    out = np.empty((count, d), dtype=float)
    for k in range(1, d + 1):
        take_atom = rng.random(count) < float(Fraction(k, k + 1))
        u = rng.uniform(-1.0 / k, 1.0 / k, count)
        out[:, k - 1] = np.where(take_atom, 1.0 / k, u)
    return out


def cube_report(d: int, seed: int, count: int, sigmas: float = 4.0) -> dict:
    """Summary of one sampling run against the exact per-coordinate means."""
    samples = sample_cube_measure(d, seed, count)
    means = samples.mean(axis=0)
    target = target_point(d)
    target_f = np.array([float(q) for q in target])
    deviations = np.abs(means - target_f)
    tolerances = np.array(
        [
            sigmas * float(CoordinateMeasure(k).variance()) ** 0.5 / count**0.5
            for k in range(1, d + 1)
        ]
    )
    return {
        "d": d,
        "seed": seed,
        "samples": count,
        "alpha_max": rational_to_pair(cube_alpha_max(d)),
        "empirical_mean": [float(v) for v in means],
        "target": [float(q) for q in target],
        "max_abs_deviation": float(deviations.max()),
        "coordinates_outside_tolerance": int((deviations > tolerances).sum()),
    }
