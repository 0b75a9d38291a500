"""Polytopes in V-representation with exact affine hulls and membership.

The compact convex set under study is always ``conv(vertices)`` for a
finite rational vertex list.  Membership and all downstream decision
procedures reduce to exact LP feasibility; the only floating point in
this module is the covering-radius diagnostic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .lp import LinearProgram, LpStatus, solve_lp
from .rationals import (
    Vector,
    rational_from_pair,
    rational_to_pair,
    vadd,
    vector,
    vscale,
)


class GeometryInputError(ValueError):
    """Dimension mismatches and empty inputs."""


@dataclass(frozen=True)
class AffineSubspace:
    """offset + span(basis); basis vectors are linearly independent."""

    offset: Vector
    basis: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def ambient_dim(self) -> int:
        return len(self.offset)

    def point_at(self, coords: Sequence[Fraction]) -> Vector:
        p = self.offset
        for t, b in zip(coords, self.basis, strict=True):
            if t != 0:
                p = vadd(p, vscale(t, b))
        return p

    def coordinates(self, x: Vector) -> Vector | None:
        """Exact coordinates of x in the basis, or None if x is outside."""
        target = [xi - oi for xi, oi in zip(x, self.offset, strict=True)]
        k = len(self.basis)
        # Solve sum_j t_j basis_j = target by elimination on the d x k system.
        cols = [list(b) for b in self.basis]
        d = len(target)
        coeffs = [[cols[j][i] for j in range(k)] + [target[i]] for i in range(d)]
        piv_cols: list[int] = []
        row = 0
        for col in range(k):
            sel = next((r for r in range(row, d) if coeffs[r][col] != 0), None)
            if sel is None:
                continue
            coeffs[row], coeffs[sel] = coeffs[sel], coeffs[row]
            prow = coeffs[row]
            inv = 1 / prow[col]
            coeffs[row] = prow = [v * inv for v in prow]
            for r in range(d):
                if r != row and coeffs[r][col] != 0:
                    f = coeffs[r][col]
                    coeffs[r] = [a - f * b for a, b in zip(coeffs[r], prow)]
            piv_cols.append(col)
            row += 1
        # Basis vectors are independent, so every column is a pivot column.
        if len(piv_cols) != k:
            raise AssertionError("affine basis not independent")
        for r in range(row, d):
            if coeffs[r][k] != 0:
                return None
        ts = [Fraction(0)] * k
        for r, col in enumerate(piv_cols):
            ts[col] = coeffs[r][k]
        return tuple(ts)

    def contains(self, x: Vector) -> bool:
        return self.coordinates(x) is not None


def affine_hull(points: Sequence[Vector]) -> AffineSubspace:
    """Smallest affine subspace containing the points (exact rank)."""
    if not points:
        raise GeometryInputError("affine_hull of empty point list")
    dims = {len(p) for p in points}
    if len(dims) != 1:
        raise GeometryInputError("points of mixed dimension")
    offset = points[0]
    echelon: list[list[Fraction]] = []
    basis: list[Vector] = []
    for p in points[1:]:
        w = [a - b for a, b in zip(p, offset)]
        for row in echelon:
            lead = next(i for i, v in enumerate(row) if v != 0)
            if w[lead] != 0:
                f = w[lead] / row[lead]
                w = [a - f * b for a, b in zip(w, row)]
        if any(v != 0 for v in w):
            echelon.append(w)
            basis.append(tuple(a - b for a, b in zip(p, offset)))
    return AffineSubspace(offset=offset, basis=tuple(basis))


@dataclass(frozen=True)
class Polytope:
    """conv(vertices) in Q^ambient_dim; immutable and hashable."""

    vertices: tuple[Vector, ...]
    ambient_dim: int

    def __post_init__(self) -> None:
        if not self.vertices:
            raise GeometryInputError("polytope needs at least one vertex")
        for v in self.vertices:
            if len(v) != self.ambient_dim:
                raise GeometryInputError("vertex dimension != ambient_dim")

    @classmethod
    def from_vertices(cls, vertices: Iterable[Iterable[int | str | Fraction]]) -> "Polytope":
        vs = tuple(vector(v) for v in vertices)
        if not vs:
            raise GeometryInputError("polytope needs at least one vertex")
        return cls(vertices=vs, ambient_dim=len(vs[0]))

    @property
    def affine_hull(self) -> AffineSubspace:
        return _affine_hull_of(self.vertices)

    @property
    def dim(self) -> int:
        return self.affine_hull.dim

    def is_single_point(self) -> bool:
        first = self.vertices[0]
        return all(v == first for v in self.vertices)


@lru_cache(maxsize=None)
def _affine_hull_of(vertices: tuple[Vector, ...]) -> AffineSubspace:
    return affine_hull(vertices)


def contains(poly: Polytope, x: Vector) -> bool:
    """Exact membership x in conv(vertices), via LP feasibility."""
    if len(x) != poly.ambient_dim:
        raise GeometryInputError("point dimension != polytope ambient_dim")
    nv = len(poly.vertices)
    zero = Fraction(0)
    one = Fraction(1)
    eq_lhs = [
        tuple(v[i] for v in poly.vertices) for i in range(poly.ambient_dim)
    ]
    eq_lhs.append((one,) * nv)
    eq_rhs = tuple(x) + (one,)
    lp = LinearProgram(
        objective=(zero,) * nv,
        eq_lhs=tuple(eq_lhs),
        eq_rhs=eq_rhs,
    )
    return solve_lp(lp).status is LpStatus.OPTIMAL


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Non-negative integer tuples summing to total, lexicographically
    decreasing."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for rest in _compositions(total - head, parts - 1):
            yield (head, *rest)


def dense_points(poly: Polytope) -> Iterator[Vector]:
    """Deterministic stream of pairwise-distinct dyadic convex combinations
    of the vertices, breadth-first by weight denominator.

    The full stream is dense in the polytope; for a single-point polytope
    it repeats that point forever.
    """
    verts = poly.vertices
    nv = len(verts)
    if poly.is_single_point():
        while True:
            yield verts[0]
    seen: set[Vector] = set()
    level = 0
    while True:
        denom = 1 << level
        for weights in _compositions(denom, nv):
            point = tuple(
                sum((Fraction(w, denom) * v[i] for w, v in zip(weights, verts)), Fraction(0))
                for i in range(poly.ambient_dim)
            )
            if point not in seen:
                seen.add(point)
                yield point
        level += 1


def dense_sequence(poly: Polytope, n: int) -> list[Vector]:
    """First n points of the dense enumeration (prefix-stable)."""
    if n < 1:
        raise GeometryInputError("n must be >= 1")
    return list(itertools.islice(dense_points(poly), n))


def _float_matrix(points: Sequence[Vector]) -> np.ndarray:
    return np.array([[float(q) for q in p] for p in points], dtype=float)


@lru_cache(maxsize=None)
def reference_grid(poly: Polytope, resolution: int) -> tuple[Vector, ...]:
    """Rational grid of the polytope: the bounding box of its affine-hull
    coordinates sampled at ``resolution`` steps per axis, filtered by exact
    membership.  Cached per (polytope, resolution)."""
    if resolution < 1:
        raise GeometryInputError("resolution must be >= 1")
    hull = poly.affine_hull
    k = hull.dim
    if k == 0:
        return (poly.vertices[0],)
    coords = [hull.coordinates(v) for v in poly.vertices]
    lo = [min(c[j] for c in coords) for j in range(k)]
    hi = [max(c[j] for c in coords) for j in range(k)]
    axes = []
    for j in range(k):
        step = (hi[j] - lo[j]) / resolution
        axes.append([lo[j] + i * step for i in range(resolution + 1)])
    grid = []
    for combo in itertools.product(*axes):
        p = hull.point_at(combo)
        if contains(poly, p):
            grid.append(p)
    return tuple(grid)


def covering_radius(
    points: Sequence[Vector],
    poly: Polytope,
    grid_resolution: int,
) -> float:
    """Max distance from any reference-grid point of the polytope to its
    nearest input point (float diagnostic; the grid itself is exact)."""
    if not points:
        raise GeometryInputError("covering_radius of empty point set")
    grid = reference_grid(poly, grid_resolution)
    gmat = _float_matrix(grid)
    pmat = _float_matrix(points)
    worst = 0.0
    for start in range(0, gmat.shape[0], 1024):
        chunk = gmat[start : start + 1024]
        d2 = ((chunk[:, None, :] - pmat[None, :, :]) ** 2).sum(axis=2)
        worst = max(worst, float(np.sqrt(d2.min(axis=1).max())))
    return worst


def polytope_to_json(poly: Polytope) -> dict:
    return {
        "dim": poly.ambient_dim,
        "vertices": [[rational_to_pair(q) for q in v] for v in poly.vertices],
    }


def polytope_from_json(data: dict) -> Polytope:
    try:
        dim = data["dim"]
        raw_vertices = data["vertices"]
    except (TypeError, KeyError) as exc:
        raise GeometryInputError(f"polytope JSON missing field: {exc}") from exc
    if not isinstance(dim, int) or dim < 1:
        raise GeometryInputError("polytope JSON: dim must be a positive int")
    if not raw_vertices:
        raise GeometryInputError("polytope JSON: empty vertex list")
    vertices = []
    for raw in raw_vertices:
        if len(raw) != dim:
            raise GeometryInputError("polytope JSON: vertex width != dim")
        vertices.append(tuple(rational_from_pair(p) for p in raw))
    return Polytope(vertices=tuple(vertices), ambient_dim=dim)
