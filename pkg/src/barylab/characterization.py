"""Exact characterization of attainable barycenters on a polytope.

A point x of M is *prolongable through a* when the segment from x through
a can be extended strictly past a without leaving M.  For a polytope, a
is the barycenter of some probability measure with support exactly M iff
every vertex is prolongable, which in turn happens iff a lies in the
relative interior of M; both decisions are made by exact LPs and the
agreement of the two routes is a tested invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Sequence

from .geometry import GeometryInputError, Polytope, contains, dense_sequence
from .lp import LinearProgram, LpStatus, solve_lp
from .rationals import Vector, rational_to_pair, sqdist, vector_to_pairs

if TYPE_CHECKING:
    from .witness import DiscreteMeasure


class PreconditionError(ValueError):
    """A stated precondition (such as membership in M) does not hold."""


@dataclass(frozen=True)
class ProlongationResult:
    """Largest admissible prolongation coefficient for one (a, x) pair.

    ``alpha_max is None`` marks +infinity (only when x == a, where the
    prolonged point is a itself for every coefficient).  ``witness_point``
    is the prolonged point at alpha_max when that is finite and positive.
    """

    alpha_max: Fraction | None
    witness_point: Vector | None = None

    @property
    def unbounded(self) -> bool:
        return self.alpha_max is None

    @property
    def prolongable(self) -> bool:
        return self.alpha_max is None or self.alpha_max > 0


def prolonged_point(a: Vector, x: Vector, alpha: Fraction) -> Vector:
    """The point -alpha*x + (1+alpha)*a, i.e. a + alpha*(a - x)."""
    return tuple(ai + alpha * (ai - xi) for ai, xi in zip(a, x, strict=True))


def _max_prolongation_unchecked(poly: Polytope, a: Vector, x: Vector) -> ProlongationResult:
    if x == a:
        return ProlongationResult(alpha_max=None)
    nv = len(poly.vertices)
    zero = Fraction(0)
    one = Fraction(1)
    # Variables: lambda_1..lambda_nv, alpha.  Maximize alpha subject to
    # sum lambda_i v_i - alpha*(a - x) = a, sum lambda_i = 1.
    direction = tuple(ai - xi for ai, xi in zip(a, x))
    eq_lhs = [
        tuple(v[i] for v in poly.vertices) + (-direction[i],)
        for i in range(poly.ambient_dim)
    ]
    eq_lhs.append((one,) * nv + (zero,))
    lp = LinearProgram(
        objective=(zero,) * nv + (one,),
        eq_lhs=tuple(eq_lhs),
        eq_rhs=tuple(a) + (one,),
    )
    outcome = solve_lp(lp)
    if outcome.status is LpStatus.UNBOUNDED:
        # Unreachable for a compact M with x != a; kept as a safe marker.
        return ProlongationResult(alpha_max=None)
    if outcome.status is LpStatus.INFEASIBLE:
        raise PreconditionError("prolongation LP infeasible: a not in M")
    alpha = outcome.optimum
    assert alpha is not None
    point = prolonged_point(a, x, alpha) if alpha > 0 else None
    return ProlongationResult(alpha_max=alpha, witness_point=point)


def max_prolongation(poly: Polytope, a: Vector, x: Vector) -> ProlongationResult:
    """sup{alpha >= 0 : -alpha*x + (1+alpha)*a in M}, exactly."""
    if not contains(poly, a):
        raise PreconditionError("a must lie in M")
    if not contains(poly, x):
        raise PreconditionError("x must lie in M")
    return _max_prolongation_unchecked(poly, a, x)


def is_prolongable(poly: Polytope, a: Vector, x: Vector) -> bool:
    """True iff some strictly positive prolongation coefficient exists."""
    return max_prolongation(poly, a, x).prolongable


def in_relint(poly: Polytope, a: Vector) -> bool:
    """True iff a lies in the relative interior of conv(vertices).

    Decided by one LP: maximize eps subject to the vertex weights writing
    a with every weight >= eps; verdict is eps* > 0.  Points outside M
    (infeasible LP) give False.
    """
    if len(a) != poly.ambient_dim:
        raise GeometryInputError("point dimension != polytope ambient_dim")
    nv = len(poly.vertices)
    zero = Fraction(0)
    one = Fraction(1)
    # Variables: lambda_1..lambda_nv, eps, s_1..s_nv (lambda_i - eps - s_i = 0).
    width = 2 * nv + 1
    eq_lhs = [
        tuple(v[i] for v in poly.vertices) + (zero,) * (nv + 1)
        for i in range(poly.ambient_dim)
    ]
    eq_lhs.append((one,) * nv + (zero,) * (nv + 1))
    for i in range(nv):
        row = [zero] * width
        row[i] = one
        row[nv] = -one
        row[nv + 1 + i] = -one
        eq_lhs.append(tuple(row))
    objective = [zero] * width
    objective[nv] = one
    lp = LinearProgram(
        objective=tuple(objective),
        eq_lhs=tuple(eq_lhs),
        eq_rhs=tuple(a) + (one,) + (zero,) * nv,
    )
    outcome = solve_lp(lp)
    if outcome.status is not LpStatus.OPTIMAL:
        return False
    assert outcome.optimum is not None
    return outcome.optimum > 0


def vertex_prolongations(
    poly: Polytope, a: Vector, max_workers: int | None = None
) -> list[ProlongationResult]:
    """Prolongation result per vertex (order matches the vertex list).

    ``max_workers`` > 1 evaluates vertices on a thread pool; results are
    identical regardless of the worker count.
    """
    if not contains(poly, a):
        raise PreconditionError("a must lie in M")
    job = lambda v: _max_prolongation_unchecked(poly, a, v)  # noqa: E731
    if max_workers is not None and max_workers > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            return list(pool.map(job, poly.vertices))
    return [job(v) for v in poly.vertices]


def is_attainable_barycenter(poly: Polytope, a: Vector) -> bool:
    """True iff a is the barycenter of some probability measure whose
    support is all of M; for a polytope this holds iff every vertex is
    prolongable through a (the exact vertex test)."""
    if not contains(poly, a):
        raise PreconditionError("a must lie in M")
    return all(
        _max_prolongation_unchecked(poly, a, v).prolongable for v in poly.vertices
    )


def prolongable_fraction_of_dense_prefix(
    poly: Polytope, a: Vector, n: int
) -> float:
    """Diagnostic fallback: the fraction of the first n dense-enumeration
    points that are prolongable.  Approximate by nature (a finite prefix
    can never certify closure); reports flag it as such."""
    if not contains(poly, a):
        raise PreconditionError("a must lie in M")
    pts = dense_sequence(poly, n)
    good = sum(
        1 for p in pts if _max_prolongation_unchecked(poly, a, p).prolongable
    )
    return good / len(pts)


def conditional_barycenter(
    mu: "DiscreteMeasure", center: Vector, radius: Fraction
) -> Vector | None:
    """Mass-weighted mean of the atoms inside the open Euclidean ball, or
    None when the ball carries no atom.  Exact: the ball test compares
    squared distances as rationals."""
    if radius <= 0:
        raise PreconditionError("radius must be positive")
    r2 = radius * radius
    picked = [
        (atom, w)
        for atom, w in zip(mu.atoms, mu.weights)
        if sqdist(atom, center) < r2
    ]
    if not picked:
        return None
    mass = sum((w for _, w in picked), Fraction(0))
    dim = len(picked[0][0])
    return tuple(
        sum((w * atom[i] for atom, w in picked), Fraction(0)) / mass
        for i in range(dim)
    )


@dataclass(frozen=True)
class CharacterizationReport:
    """Per-query record; ``agrees`` asserts the two decision routes match."""

    point: Vector
    relint: bool
    condition_ii: bool
    alpha_max_per_vertex: tuple[Fraction | None, ...]
    agrees: bool


def characterize(
    poly: Polytope, a: Vector, max_workers: int | None = None
) -> CharacterizationReport:
    """Run both decision routes for one query point (must lie in M)."""
    alphas = tuple(
        r.alpha_max for r in vertex_prolongations(poly, a, max_workers=max_workers)
    )
    cond = all(alpha is None or alpha > 0 for alpha in alphas)
    relint_verdict = in_relint(poly, a)
    return CharacterizationReport(
        point=a,
        relint=relint_verdict,
        condition_ii=cond,
        alpha_max_per_vertex=alphas,
        agrees=relint_verdict == cond,
    )


def report_to_json(report: CharacterizationReport) -> dict:
    return {
        "a": vector_to_pairs(report.point),
        "relint": report.relint,
        "condition_ii": report.condition_ii,
        "alpha_max_per_vertex": [
            None if alpha is None else rational_to_pair(alpha)
            for alpha in report.alpha_max_per_vertex
        ],
        "agrees": report.agrees,
    }
