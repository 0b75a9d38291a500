"""Exact rational linear programs in natural form.

A ``LinearProgram`` maximizes ``c . z`` subject to equality rows, optional
``<=`` rows, and per-variable lower bounds (``None`` marks a free
variable).  ``solve_lp`` converts to standard form (slacks for inequality
rows, shifts for finite lower bounds, splitting for free variables), runs
the active simplex kernel, and re-verifies the returned point against
every original constraint with exact arithmetic before reporting it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from ..rationals import Vector, vdot
from . import _kernel


class LpStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


class LpInputError(ValueError):
    """Malformed LP data (dimension mismatches, empty objective)."""


class KernelCertificateError(RuntimeError):
    """Kernel returned a point failing exact feasibility re-verification."""


_STATUS_BY_CODE = {
    _kernel.OPTIMAL: LpStatus.OPTIMAL,
    _kernel.INFEASIBLE: LpStatus.INFEASIBLE,
    _kernel.UNBOUNDED: LpStatus.UNBOUNDED,
}


@dataclass(frozen=True)
class LinearProgram:
    objective: Vector
    eq_lhs: tuple[Vector, ...] = ()
    eq_rhs: Vector = ()
    ub_lhs: tuple[Vector, ...] = ()
    ub_rhs: Vector = ()
    # None entry = free variable; default is 0 for every variable.
    lower_bounds: tuple[Fraction | None, ...] | None = None

    def __post_init__(self) -> None:
        n = len(self.objective)
        if n == 0:
            raise LpInputError("objective must have at least one variable")
        if len(self.eq_lhs) != len(self.eq_rhs):
            raise LpInputError("equality lhs/rhs row count mismatch")
        if len(self.ub_lhs) != len(self.ub_rhs):
            raise LpInputError("inequality lhs/rhs row count mismatch")
        for row in self.eq_lhs + self.ub_lhs:
            if len(row) != n:
                raise LpInputError("constraint row width != variable count")
        if self.lower_bounds is not None and len(self.lower_bounds) != n:
            raise LpInputError("lower_bounds length != variable count")

    @property
    def num_vars(self) -> int:
        return len(self.objective)


@dataclass(frozen=True)
class LpOutcome:
    status: LpStatus
    optimum: Fraction | None = None
    solution: Vector | None = None


def solve_lp(lp: LinearProgram) -> LpOutcome:
    """Solve an exact LP; Optimal outcomes carry an exactly feasible point."""
    n = lp.num_vars
    lbs = lp.lower_bounds if lp.lower_bounds is not None else (Fraction(0),) * n

    # Column map: natural variable j -> one standard column (shifted by its
    # lower bound) or a (plus, minus) pair when free.
    col_of: list[tuple[int, int | None]] = []
    shift: list[Fraction] = []
    ncols = 0
    for lb in lbs:
        if lb is None:
            col_of.append((ncols, ncols + 1))
            shift.append(Fraction(0))
            ncols += 2
        else:
            col_of.append((ncols, None))
            shift.append(lb)
            ncols += 1
    nslack = len(lp.ub_lhs)

    def expand(row: Vector) -> tuple[list[Fraction], Fraction]:
        """Rewrite a natural row over standard columns; returns rhs offset."""
        out = [Fraction(0)] * (ncols + nslack)
        offset = Fraction(0)
        for j, coeff in enumerate(row):
            if coeff == 0:
                continue
            pos, neg = col_of[j]
            out[pos] += coeff
            if neg is not None:
                out[neg] -= coeff
            offset += coeff * shift[j]
        return out, offset

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for row, b in zip(lp.eq_lhs, lp.eq_rhs):
        erow, off = expand(row)
        rows.append(erow)
        rhs.append(b - off)
    for k, (row, b) in enumerate(zip(lp.ub_lhs, lp.ub_rhs)):
        erow, off = expand(row)
        erow[ncols + k] = Fraction(1)
        rows.append(erow)
        rhs.append(b - off)

    c_std, _ = expand(lp.objective)

    code, xstd = _kernel.solve_standard(c_std, rows, rhs)
    status = _STATUS_BY_CODE[code]
    if status is not LpStatus.OPTIMAL:
        return LpOutcome(status=status)

    assert xstd is not None
    z: list[Fraction] = []
    for j in range(n):
        pos, neg = col_of[j]
        val = xstd[pos] + shift[j]
        if neg is not None:
            val -= xstd[neg]
        z.append(val)
    solution = tuple(z)
    _verify_feasible(lp, lbs, solution)
    return LpOutcome(
        status=LpStatus.OPTIMAL,
        optimum=vdot(lp.objective, solution),
        solution=solution,
    )


def _verify_feasible(
    lp: LinearProgram,
    lbs: Sequence[Fraction | None],
    z: Vector,
) -> None:
    for row, b in zip(lp.eq_lhs, lp.eq_rhs):
        if vdot(row, z) != b:
            raise KernelCertificateError("equality row violated")
    for row, b in zip(lp.ub_lhs, lp.ub_rhs):
        if vdot(row, z) > b:
            raise KernelCertificateError("inequality row violated")
    for lb, v in zip(lbs, z):
        if lb is not None and v < lb:
            raise KernelCertificateError("lower bound violated")
