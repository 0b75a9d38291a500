"""Discrete probability measures and explicit full-support witnesses.

Given a in the relative interior of a polytope M, ``construct_witness``
builds a finite measure whose barycenter is a with exact rational
equality and whose atoms densify in M as the pair count grows: each dense
point x_n is paired with its partner -alpha_n*x_n + (1+alpha_n)*a so that
every pair alone averages to a, and pair masses 2^-n are renormalized to
sum to one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .characterization import in_relint, _max_prolongation_unchecked, prolonged_point
from .geometry import Polytope, dense_sequence
from .rationals import Vector, vector_from_pairs, vector_to_pairs, rational_from_pair, rational_to_pair


class MeasureInputError(ValueError):
    """Invalid atom/weight data."""


class NoWitnessError(ValueError):
    """No measure with support M has the requested barycenter."""


@dataclass(frozen=True)
class DiscreteMeasure:
    """Finite atom list with strictly positive weights summing to one.

    Atoms are pairwise distinct; build instances through
    ``merge_and_normalize`` when that is not guaranteed by construction.
    """

    atoms: tuple[Vector, ...]
    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.atoms or len(self.atoms) != len(self.weights):
            raise MeasureInputError("atoms/weights must be non-empty and aligned")
        if any(w <= 0 for w in self.weights):
            raise MeasureInputError("weights must be strictly positive")
        if sum(self.weights) != 1:
            raise MeasureInputError("weights must sum to exactly 1")
        if len(set(self.atoms)) != len(self.atoms):
            raise MeasureInputError("atoms must be pairwise distinct")

    @property
    def dim(self) -> int:
        return len(self.atoms[0])


def barycenter(mu: DiscreteMeasure) -> Vector:
    """Exact weighted mean of the atoms."""
    return tuple(
        sum((w * atom[i] for atom, w in zip(mu.atoms, mu.weights)), Fraction(0))
        for i in range(mu.dim)
    )


def merge_and_normalize(
    atoms: Sequence[Vector], weights: Sequence[Fraction]
) -> DiscreteMeasure:
    """Merge duplicate atoms (summing weights) and rescale to total mass 1."""
    if len(atoms) != len(weights):
        raise MeasureInputError("atoms/weights length mismatch")
    merged: dict[Vector, Fraction] = {}
    for atom, w in zip(atoms, weights):
        if w < 0:
            raise MeasureInputError("weights must be non-negative")
        if w == 0:
            continue
        merged[atom] = merged.get(atom, Fraction(0)) + w
    total = sum(merged.values(), Fraction(0))
    if total == 0:
        raise MeasureInputError("total weight is zero")
    return DiscreteMeasure(
        atoms=tuple(merged.keys()),
        weights=tuple(w / total for w in merged.values()),
    )


def construct_witness(poly: Polytope, a: Vector, pairs: int) -> DiscreteMeasure:
    """Measure with barycenter exactly a and atoms from the first ``pairs``
    dense-enumeration points plus their prolongation partners.

    Raises NoWitnessError when a is not in the relative interior of M (no
    fully-supported measure has barycenter a then).
    """
    if pairs < 1:
        raise MeasureInputError("pairs must be >= 1")
    if not in_relint(poly, a):
        raise NoWitnessError("a is not in the relative interior of M")

    xs = dense_sequence(poly, pairs)
    # Pair weights 2^-n renormalized by 1/(1 - 2^-N) so they sum to one.
    scale = Fraction(1) / (1 - Fraction(1, 2**pairs))
    atoms: list[Vector] = []
    weights: list[Fraction] = []
    for n, x in enumerate(xs, start=1):
        w_pair = Fraction(1, 2**n) * scale
        if x == a:
            atoms.append(a)
            weights.append(w_pair)
            continue
        result = _max_prolongation_unchecked(poly, a, x)
        alpha_max = result.alpha_max
        assert alpha_max is not None and alpha_max > 0
        alpha = min(Fraction(1), alpha_max / 2)
        partner = prolonged_point(a, x, alpha)
        atoms.append(x)
        weights.append(w_pair * alpha / (1 + alpha))
        atoms.append(partner)
        weights.append(w_pair / (1 + alpha))
    return merge_and_normalize(atoms, weights)


def sample_atoms(mu: DiscreteMeasure, seed: int, count: int) -> list[Vector]:
    """i.i.d. atom draws with a seeded generator; reproducible per seed."""
    if count < 0:
        raise MeasureInputError("count must be >= 0")
    rng = np.random.default_rng(seed)
    cum = np.cumsum([float(w) for w in mu.weights])
    cum[-1] = 1.0  # guard against float round-off in the last bin
    draws = rng.random(count)
    idx = np.searchsorted(cum, draws, side="right")
    return [mu.atoms[i] for i in idx]


def measure_to_json(mu: DiscreteMeasure) -> dict:
    return {
        "atoms": [vector_to_pairs(atom) for atom in mu.atoms],
        "weights": [rational_to_pair(w) for w in mu.weights],
    }


def measure_from_json(data: dict) -> DiscreteMeasure:
    try:
        atoms = [vector_from_pairs(raw) for raw in data["atoms"]]
        weights = [rational_from_pair(raw) for raw in data["weights"]]
    except (TypeError, KeyError, ValueError) as exc:
        raise MeasureInputError(f"measure JSON malformed: {exc}") from exc
    return DiscreteMeasure(atoms=tuple(atoms), weights=tuple(weights))
