"""Shared fixtures and seeded random-instance generators."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from barylab.geometry import Polytope


def random_polytope(
    rng: random.Random,
    max_dim: int = 5,
    max_vertices: int = 12,
    coord_range: int = 5,
    min_dim: int = 1,
    min_vertices: int = 1,
) -> Polytope:
    """Integer-coordinate polytope with dim <= max_dim, <= max_vertices."""
    dim = rng.randint(min_dim, max_dim)
    nv = rng.randint(min_vertices, max_vertices)
    vertices = set()
    while len(vertices) < nv:
        vertices.add(
            tuple(
                Fraction(rng.randint(-coord_range, coord_range))
                for _ in range(dim)
            )
        )
    return Polytope(vertices=tuple(sorted(vertices)), ambient_dim=dim)


def random_convex_combination(rng: random.Random, poly: Polytope) -> tuple:
    """Random rational point of the polytope (weights may be zero)."""
    weights = [Fraction(rng.randint(0, 8)) for _ in poly.vertices]
    if sum(weights) == 0:
        weights[rng.randrange(len(weights))] = Fraction(1)
    total = sum(weights)
    weights = [w / total for w in weights]
    return tuple(
        sum((w * v[i] for w, v in zip(weights, poly.vertices)), Fraction(0))
        for i in range(poly.ambient_dim)
    )


def random_relint_point(rng: random.Random, poly: Polytope) -> tuple:
    """Random point with strictly positive weight on every vertex: always
    in the relative interior."""
    weights = [Fraction(rng.randint(1, 8)) for _ in poly.vertices]
    total = sum(weights)
    weights = [w / total for w in weights]
    return tuple(
        sum((w * v[i] for w, v in zip(weights, poly.vertices)), Fraction(0))
        for i in range(poly.ambient_dim)
    )


@pytest.fixture
def square() -> Polytope:
    return Polytope.from_vertices([(1, 1), (1, -1), (-1, 1), (-1, -1)])


@pytest.fixture
def triangle() -> Polytope:
    return Polytope.from_vertices([(0, 0), (1, 0), (0, 1)])


@pytest.fixture
def segment01() -> Polytope:
    # Vertex order puts 1 first so the dense enumeration starts at 1.
    return Polytope.from_vertices([(1,), (0,)])
