"""Measures on the probability simplex whose barycenter is a prescribed
distribution.

K is a finite set {0, ..., m-1}, so distributions on K live on the
standard simplex.  Random simplex points are produced by drawing a weight
vector from a dense dyadic measure on the depth-J weight simplex, drawing
J category samples from the target mu, and scatter-adding the weights
onto the sampled categories.  The mean of that pushforward is exactly mu,
and its samples densify in the whole simplex; both facts are checked
exactly at tiny sizes by full enumeration.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .geometry import Polytope, _compositions, dense_sequence
from .rationals import Vector
from .witness import DiscreteMeasure, merge_and_normalize


class SimplexInputError(ValueError):
    """Invalid simplex point, depth, or category count."""


def unit_simplex(m: int) -> Polytope:
    """Standard simplex in R^m: convex hull of the unit basis vectors."""
    if m < 1:
        raise SimplexInputError("m must be >= 1")
    one = Fraction(1)
    zero = Fraction(0)
    verts = tuple(
        tuple(one if j == i else zero for j in range(m)) for i in range(m)
    )
    return Polytope(vertices=verts, ambient_dim=m)


def validate_simplex_point(p: Sequence[Fraction], m: int) -> Vector:
    if len(p) != m:
        raise SimplexInputError("point length != m")
    q = tuple(Fraction(v) for v in p)
    if any(v < 0 for v in q):
        raise SimplexInputError("entries must be non-negative")
    if sum(q) != 1:
        raise SimplexInputError("entries must sum to exactly 1")
    return q


def scatter_weights(weights: Sequence[Fraction], indices: Sequence[int], m: int) -> Vector:
    """The simplex point whose i-th entry is the total weight landing on
    category i; coinciding indices merge."""
    if len(weights) != len(indices):
        raise SimplexInputError("weights/indices length mismatch")
    out = [Fraction(0)] * m
    for w, i in zip(weights, indices):
        if not 0 <= i < m:
            raise SimplexInputError(f"category index {i} out of range")
        out[i] += w
    return tuple(out)


def dyadic_weight_measure(depth: int, atoms: int) -> DiscreteMeasure:
    """Discrete measure on depth-``depth`` weight vectors: atoms are the
    first ``atoms`` dense dyadic points of the weight simplex, masses
    2^-n renormalized."""
    if depth < 1:
        raise SimplexInputError("depth must be >= 1")
    if atoms < 1:
        raise SimplexInputError("atoms must be >= 1")
    points = dense_sequence(unit_simplex(depth), atoms)
    scale = Fraction(1) / (1 - Fraction(1, 2**atoms))
    weights = [Fraction(1, 2**n) * scale for n in range(1, atoms + 1)]
    # depth 1 repeats the single weight vector (1); merging collapses it.
    return merge_and_normalize(points, weights)


def sample_pushforward(
    mu: Sequence[Fraction],
    depth: int,
    lambda_atoms: int,
    seed: int,
    count: int,
) -> np.ndarray:
    """(count, m) float samples: weight vector ~ dyadic weight measure,
    categories i.i.d. ~ mu, scatter-added.  Reproducible per seed."""
    m = len(mu)
    mu_q = validate_simplex_point(mu, m)
    if count < 1:
        raise SimplexInputError("count must be >= 1")
    lam = dyadic_weight_measure(depth, lambda_atoms)
    rng = np.random.default_rng(seed)

    lam_cum = np.cumsum([float(w) for w in lam.weights])
    lam_cum[-1] = 1.0
    a_idx = np.searchsorted(lam_cum, rng.random(count), side="right")

    mu_cum = np.cumsum([float(q) for q in mu_q])
    mu_cum[-1] = 1.0
    cats = np.searchsorted(mu_cum, rng.random((count, depth)), side="right")

    atom_mat = np.array([[float(q) for q in atom] for atom in lam.atoms])
    chosen = atom_mat[a_idx]  # (count, depth)
    out = np.zeros((count, m), dtype=float)
    rows = np.repeat(np.arange(count), depth)
    np.add.at(out, (rows, cats.ravel()), chosen.ravel())
    return out


def pushforward_exact_mean(
    mu: Sequence[Fraction], depth: int, lambda_atoms: int
) -> Vector:
    """Exact mean of the pushforward by enumerating every (weight vector,
    category tuple) outcome; must equal mu."""
    m = len(mu)
    mu_q = validate_simplex_point(mu, m)
    lam = dyadic_weight_measure(depth, lambda_atoms)
    mean = [Fraction(0)] * m
    for a, w_a in zip(lam.atoms, lam.weights):
        for cats in itertools.product(range(m), repeat=depth):
            p = w_a
            for c in cats:
                p *= mu_q[c]
            if p == 0:
                continue
            point = scatter_weights(a, cats, m)
            for i in range(m):
                mean[i] += p * point[i]
    return tuple(mean)


def pushforward_exact_distribution(
    mu: Sequence[Fraction], depth: int, lambda_atoms: int
) -> dict[Vector, Fraction]:
    """Exact law of the pushforward at tiny sizes (sampler cross-check)."""
    m = len(mu)
    mu_q = validate_simplex_point(mu, m)
    lam = dyadic_weight_measure(depth, lambda_atoms)
    law: dict[Vector, Fraction] = {}
    for a, w_a in zip(lam.atoms, lam.weights):
        for cats in itertools.product(range(m), repeat=depth):
            p = w_a
            for c in cats:
                p *= mu_q[c]
            if p == 0:
                continue
            point = scatter_weights(a, cats, m)
            law[point] = law.get(point, Fraction(0)) + p
    return law


def empirical_barycenter(samples: np.ndarray | Iterable[Sequence[float]]) -> np.ndarray:
    arr = np.asarray(
        [[float(v) for v in row] for row in samples]
        if not isinstance(samples, np.ndarray)
        else samples,
        dtype=float,
    )
    if arr.size == 0:
        raise SimplexInputError("empty sample list")
    return arr.mean(axis=0)


def support_full(mu_hat: Sequence[float] | Sequence[Fraction], eps: float = 0.0) -> bool:
    """True iff every entry exceeds eps (eps=0 for exact points: support
    equals the whole category set iff all probabilities are positive)."""
    return all(v > eps for v in mu_hat)


def barycentric_grid(m: int, resolution: int) -> np.ndarray:
    """Float grid of the simplex: all m-part compositions of ``resolution``
    divided by resolution."""
    if m < 1 or resolution < 1:
        raise SimplexInputError("m and resolution must be >= 1")
    rows = [
        [w / resolution for w in combo] for combo in _compositions(resolution, m)
    ]
    return np.array(rows, dtype=float)


def coverage_of_simplex(
    samples: np.ndarray | Iterable[Sequence[float]], resolution: int
) -> float:
    """Covering radius of the samples against the barycentric grid, in l1
    distance."""
    arr = np.asarray(
        [[float(v) for v in row] for row in samples]
        if not isinstance(samples, np.ndarray)
        else samples,
        dtype=float,
    )
    if arr.size == 0:
        raise SimplexInputError("empty sample list")
    grid = barycentric_grid(arr.shape[1], resolution)
    worst = 0.0
    for start in range(0, grid.shape[0], 256):
        chunk = grid[start : start + 256]
        d1 = np.abs(chunk[:, None, :] - arr[None, :, :]).sum(axis=2)
        worst = max(worst, float(d1.min(axis=1).max()))
    return worst


def simplex_report(
    mu: Sequence[Fraction],
    depth: int,
    lambda_atoms: int,
    seed: int,
    count: int,
    grid_resolution: int = 20,
    sigmas: float = 4.0,
) -> dict:
    """Monte Carlo summary for one target distribution."""
    m = len(mu)
    mu_q = validate_simplex_point(mu, m)
    samples = sample_pushforward(mu_q, depth, lambda_atoms, seed, count)
    bary = empirical_barycenter(samples)
    mu_f = np.array([float(q) for q in mu_q])
    std = samples.std(axis=0, ddof=1)
    tol = sigmas * std / count**0.5
    return {
        "m": m,
        "mu": [float(q) for q in mu_q],
        "J": depth,
        "S": count,
        "seed": seed,
        "empirical_barycenter": [float(v) for v in bary],
        "min_coord": float(bary.min()),
        "covering_radius": coverage_of_simplex(samples, grid_resolution),
        "full_support_target": support_full(mu_q),
        "barycenter_within_tolerance": bool((np.abs(bary - mu_f) <= tol).all()),
    }
