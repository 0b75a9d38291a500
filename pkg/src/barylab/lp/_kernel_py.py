"""Pure-Python two-phase primal simplex over exact rationals.

Standard form: maximize c.x subject to A x = b, x >= 0, every datum a
Fraction.  Bland's smallest-index rule is used for both the entering and
the leaving choice, which rules out cycling and makes the pivot path (and
hence the returned vertex) fully deterministic.  The Cython kernel in
``_kernel_cy`` implements the identical algorithm; both lanes must agree
bit for bit.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

OPTIMAL = 0
INFEASIBLE = 1
UNBOUNDED = 2

_ZERO = Fraction(0)
_ONE = Fraction(1)


def solve_standard(
    c: Sequence[Fraction],
    rows: Sequence[Sequence[Fraction]],
    rhs: Sequence[Fraction],
) -> tuple[int, list[Fraction] | None]:
    """Solve max c.x, A x = b, x >= 0. Returns (status, solution or None)."""
    n = len(c)
    m = len(rows)
    if m == 0:
        if any(cj > 0 for cj in c):
            return UNBOUNDED, None
        return OPTIMAL, [_ZERO] * n

    # Tableau rows carry n structural + m artificial columns + rhs; the rhs
    # is made non-negative up front so the artificial basis is feasible.
    width = n + m + 1
    tab: list[list[Fraction]] = []
    for i in range(m):
        row = list(rows[i])
        b = rhs[i]
        if b < 0:
            row = [-v for v in row]
            b = -b
        row.extend(_ONE if k == i else _ZERO for k in range(m))
        row.append(b)
        tab.append(row)
    basis = list(range(n, n + m))

    # Phase 1: maximize -(sum of artificials).  Reduced costs relative to
    # the artificial basis are column sums; obj[-1] holds -(objective).
    obj = [_ZERO] * width
    for j in range(width):
        s = _ZERO
        for i in range(m):
            s += tab[i][j]
        obj[j] = s
    for j in range(n, n + m):
        obj[j] = _ZERO

    status = _simplex_loop(tab, obj, basis, n + m)
    if status == UNBOUNDED:  # cannot happen: phase-1 objective is bounded
        raise AssertionError("phase-1 unbounded")
    if obj[-1] != 0:
        return INFEASIBLE, None

    # Pivot leftover artificials out of the basis; a row where no
    # structural pivot exists is a redundant constraint and is dropped.
    keep: list[int] = []
    for i in range(m):
        if basis[i] < n:
            keep.append(i)
            continue
        pivot_col = -1
        for j in range(n):
            if tab[i][j] != 0:
                pivot_col = j
                break
        if pivot_col >= 0:
            _pivot(tab, obj, basis, i, pivot_col)
            keep.append(i)
    if len(keep) < m:
        tab = [tab[i] for i in keep]
        basis = [basis[i] for i in keep]
        m = len(keep)

    # Drop artificial columns entirely.
    for i in range(m):
        row = tab[i]
        tab[i] = row[:n] + [row[-1]]

    # Phase 2 reduced costs: obj[j] = c_j - c_B . (column j).
    obj = [_ZERO] * (n + 1)
    for j in range(n):
        s = c[j]
        for i in range(m):
            cb = basis[i]
            if cb < n and c[cb] != 0:
                s -= c[cb] * tab[i][j]
        obj[j] = s
    val = _ZERO
    for i in range(m):
        cb = basis[i]
        if cb < n and c[cb] != 0:
            val += c[cb] * tab[i][-1]
    obj[-1] = -val

    status = _simplex_loop(tab, obj, basis, n)
    if status == UNBOUNDED:
        return UNBOUNDED, None

    solution = [_ZERO] * n
    for i in range(m):
        if basis[i] < n:
            solution[basis[i]] = tab[i][-1]
    return OPTIMAL, solution


def _simplex_loop(
    tab: list[list[Fraction]],
    obj: list[Fraction],
    basis: list[int],
    ncols: int,
) -> int:
    m = len(tab)
    while True:
        enter = -1
        for j in range(ncols):
            if obj[j] > 0:
                enter = j
                break
        if enter < 0:
            return OPTIMAL

        # Ratio test; ties leave the row whose basic variable has the
        # smallest index (second half of Bland's rule).
        leave = -1
        best_num = _ZERO
        best_den = _ONE
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                bi = tab[i][-1]
                if leave < 0:
                    better = True
                else:
                    cmp = bi * best_den - best_num * a
                    better = cmp < 0 or (cmp == 0 and basis[i] < basis[leave])
                if better:
                    leave = i
                    best_num = bi
                    best_den = a
        if leave < 0:
            return UNBOUNDED
        _pivot(tab, obj, basis, leave, enter)


def _pivot(
    tab: list[list[Fraction]],
    obj: list[Fraction],
    basis: list[int],
    r: int,
    jc: int,
) -> None:
    row = tab[r]
    piv = row[jc]
    if piv != 1:
        row = [v / piv for v in row]
        tab[r] = row
    for i, other in enumerate(tab):
        if i == r:
            continue
        f = other[jc]
        if f != 0:
            tab[i] = [o - f * v for o, v in zip(other, row)]
    f = obj[jc]
    if f != 0:
        obj[:] = [o - f * v for o, v in zip(obj, row)]
    basis[r] = jc
