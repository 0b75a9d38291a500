# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled two-phase primal simplex over exact rationals.

Mirrors ``_kernel_py`` pivot for pivot (same Bland entering/leaving rule,
same phase-1 cleanup), so both lanes return identical outcomes.  Tableau
entries are kept as reduced (numerator, denominator) pairs of Python ints
in two flat lists; arithmetic inlines the cross-multiplication and a
single gcd reduction per written entry, skipping Fraction object overhead
entirely inside the hot loops.
"""

from fractions import Fraction
from math import gcd

OPTIMAL = 0
INFEASIBLE = 1
UNBOUNDED = 2


cdef inline void _store(list ln, list ld, Py_ssize_t idx, rn, rd):
    # Keep entries reduced with a positive denominator.
    if rd < 0:
        rn = -rn
        rd = -rd
    if rn == 0:
        ln[idx] = 0
        ld[idx] = 1
        return
    g = gcd(rn, rd)
    if g != 1:
        rn //= g
        rd //= g
    ln[idx] = rn
    ld[idx] = rd


cdef void _pivot(list tn, list td, list on_, list od_, list basis,
                 Py_ssize_t m, Py_ssize_t width, Py_ssize_t r, Py_ssize_t jc):
    cdef Py_ssize_t base = r * width
    cdef Py_ssize_t i, j, rowoff
    pn = tn[base + jc]
    pd = td[base + jc]
    if pn != pd:
        for j in range(width):
            vn = tn[base + j]
            if vn != 0:
                _store(tn, td, base + j, vn * pd, <object>td[base + j] * pn)
    for i in range(m):
        if i == r:
            continue
        rowoff = i * width
        fn = tn[rowoff + jc]
        if fn == 0:
            continue
        fd = td[rowoff + jc]
        for j in range(width):
            vn = tn[base + j]
            if vn == 0:
                continue
            t_n = fn * vn
            t_d = <object>fd * <object>td[base + j]
            o_n = tn[rowoff + j]
            o_d = td[rowoff + j]
            _store(tn, td, rowoff + j, o_n * t_d - t_n * o_d, <object>o_d * t_d)
    fn = on_[jc]
    if fn != 0:
        fd = od_[jc]
        for j in range(width):
            vn = tn[base + j]
            if vn == 0:
                continue
            t_n = fn * vn
            t_d = <object>fd * <object>td[base + j]
            o_n = on_[j]
            o_d = od_[j]
            _store(on_, od_, j, o_n * t_d - t_n * o_d, <object>o_d * t_d)
    basis[r] = jc


cdef int _simplex_loop(list tn, list td, list on_, list od_, list basis,
                       Py_ssize_t m, Py_ssize_t width, Py_ssize_t ncols):
    cdef Py_ssize_t enter, leave, i, j, rowoff
    cdef Py_ssize_t rhs = width - 1
    while True:
        enter = -1
        for j in range(ncols):
            if <object>on_[j] > 0:
                enter = j
                break
        if enter < 0:
            return OPTIMAL

        leave = -1
        best_p = 0
        best_q = 1
        for i in range(m):
            rowoff = i * width
            a_n = tn[rowoff + enter]
            if <object>a_n > 0:
                a_d = td[rowoff + enter]
                p = <object>tn[rowoff + rhs] * a_d
                q = <object>td[rowoff + rhs] * a_n
                if leave < 0:
                    better = True
                else:
                    cmp = p * best_q - best_p * q
                    better = cmp < 0 or (cmp == 0 and basis[i] < basis[leave])
                if better:
                    leave = i
                    best_p = p
                    best_q = q
        if leave < 0:
            return UNBOUNDED
        _pivot(tn, td, on_, od_, basis, m, width, leave, enter)


def solve_standard(c, rows, rhs):
    """Solve max c.x, A x = b, x >= 0. Returns (status, solution or None)."""
    cdef Py_ssize_t n = len(c)
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t i, j, width, rowoff
    if m == 0:
        for q in c:
            if q > 0:
                return UNBOUNDED, None
        zero = Fraction(0)
        return OPTIMAL, [zero] * n

    width = n + m + 1
    cdef list tn = [0] * (m * width)
    cdef list td = [1] * (m * width)
    cdef list basis = [0] * m
    for i in range(m):
        rowoff = i * width
        row = rows[i]
        b = rhs[i]
        neg = b < 0
        for j in range(n):
            q = row[j]
            num = q.numerator
            if num != 0:
                tn[rowoff + j] = -num if neg else num
                td[rowoff + j] = q.denominator
        tn[rowoff + n + i] = 1
        tn[rowoff + width - 1] = -b.numerator if neg else b.numerator
        td[rowoff + width - 1] = b.denominator
        basis[i] = n + i

    # Phase 1 reduced costs: column sums over structural columns and rhs.
    cdef list on_ = [0] * width
    cdef list od_ = [1] * width
    for j in range(width):
        if n <= j < n + m:
            continue
        s_n = 0
        s_d = 1
        for i in range(m):
            v_n = tn[i * width + j]
            if v_n != 0:
                v_d = td[i * width + j]
                s_n = s_n * <object>v_d + v_n * s_d
                s_d = s_d * <object>v_d
        _store(on_, od_, j, s_n, s_d)

    cdef int status = _simplex_loop(tn, td, on_, od_, basis, m, width, n + m)
    if status == UNBOUNDED:
        raise AssertionError("phase-1 unbounded")
    if <object>on_[width - 1] != 0:
        return INFEASIBLE, None

    # Pivot leftover artificials out; drop redundant rows.
    cdef list keep = []
    cdef Py_ssize_t pivot_col
    for i in range(m):
        if <object>basis[i] < n:
            keep.append(i)
            continue
        rowoff = i * width
        pivot_col = -1
        for j in range(n):
            if tn[rowoff + j] != 0:
                pivot_col = j
                break
        if pivot_col >= 0:
            _pivot(tn, td, on_, od_, basis, m, width, i, pivot_col)
            keep.append(i)
    cdef Py_ssize_t new_m = len(keep)
    cdef Py_ssize_t new_width = n + 1
    cdef list tn2 = [0] * (new_m * new_width)
    cdef list td2 = [1] * (new_m * new_width)
    cdef list basis2 = [0] * new_m
    for i in range(new_m):
        rowoff = (<Py_ssize_t>keep[i]) * width
        for j in range(n):
            tn2[i * new_width + j] = tn[rowoff + j]
            td2[i * new_width + j] = td[rowoff + j]
        tn2[i * new_width + n] = tn[rowoff + width - 1]
        td2[i * new_width + n] = td[rowoff + width - 1]
        basis2[i] = basis[keep[i]]
    m = new_m
    width = new_width
    tn = tn2
    td = td2
    basis = basis2

    # Phase 2 reduced costs: obj[j] = c_j - c_B . (column j).
    cdef list cn = [0] * n
    cdef list cd = [1] * n
    for j in range(n):
        q = c[j]
        cn[j] = q.numerator
        cd[j] = q.denominator
    on_ = [0] * width
    od_ = [1] * width
    for j in range(width):
        if j < n:
            s_n = cn[j]
            s_d = cd[j]
        else:
            s_n = 0
            s_d = 1
        for i in range(m):
            cb = basis[i]
            if <object>cb < n and cn[cb] != 0:
                v_n = tn[i * width + j]
                if v_n != 0:
                    t_n = <object>cn[cb] * v_n
                    t_d = <object>cd[cb] * <object>td[i * width + j]
                    s_n = s_n * t_d - t_n * s_d
                    s_d = s_d * t_d
        # rhs slot (j == n) ends up holding -(objective value)
        _store(on_, od_, j, s_n, s_d)

    status = _simplex_loop(tn, td, on_, od_, basis, m, width, n)
    if status == UNBOUNDED:
        return UNBOUNDED, None

    solution = [Fraction(0)] * n
    for i in range(m):
        cb = basis[i]
        if <object>cb < n:
            solution[cb] = Fraction(tn[i * width + n], td[i * width + n])
    return OPTIMAL, solution
