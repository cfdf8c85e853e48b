"""Exact rational linear algebra and strict linear feasibility.

Everything in this module works over ``fractions.Fraction``; there is no
floating point anywhere.  All downstream geometric predicates are sign
conditions on exact quantities, so any rounding would corrupt them.

Vectors are tuples of Fractions, matrices are tuples of row tuples.  The
helper :func:`fmat` / :func:`fvec` normalise arbitrary nested sequences of
ints / Fractions / strings into that shape.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import InputError, InvariantError

Vec = tuple[Fraction, ...]
Mat = tuple[Vec, ...]

F0 = Fraction(0)
F1 = Fraction(1)


def fvec(entries: Iterable) -> Vec:
    return tuple(Fraction(e) for e in entries)


def fmat(rows: Iterable[Iterable]) -> Mat:
    out = tuple(fvec(r) for r in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise InputError("ragged matrix")
    return out


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    if len(a) != len(b):
        raise InputError("dimension mismatch in dot product")
    return sum((x * y for x, y in zip(a, b)), F0)


def vec_add(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def vec_scale(a: Sequence[Fraction], s) -> Vec:
    s = Fraction(s)
    return tuple(x * s for x in a)


def vec_neg(a: Sequence[Fraction]) -> Vec:
    return tuple(-x for x in a)


def is_zero_vec(a: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in a)


def mat_vec(m: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> Vec:
    return tuple(dot(row, v) for row in m)


def rref(rows: Sequence[Sequence[Fraction]], ncols: Optional[int] = None):
    """Reduced row echelon form with the canonical pivot rule.

    The pivot for each column is the first row (top to bottom) with a nonzero
    entry, scanning columns left to right.  This makes the echelon form, and
    hence every basis derived from it, deterministic for a fixed input.

    Returns (rref_rows as list of lists, pivot column list).
    """
    work = [list(map(Fraction, r)) for r in rows]
    if ncols is None:
        ncols = len(work[0]) if work else 0
    nrows = len(work)
    pivots = []
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, nrows):
            if work[i][c] != 0:
                sel = i
                break
        if sel is None:
            continue
        work[r], work[sel] = work[sel], work[r]
        inv = F1 / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(nrows):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return work, pivots


def rank(m: Sequence[Sequence[Fraction]]) -> int:
    """Exact rank over Q."""
    _, pivots = rref(m)
    return len(pivots)


def nullspace_basis(m: Sequence[Sequence[Fraction]], ncols: Optional[int] = None) -> list[Vec]:
    """Canonical basis of the right null space of ``m``.

    Built from the reduced echelon form: one basis vector per free column,
    with a 1 in the free position, so the output is deterministic and the
    basis size equals cols - rank.
    """
    rows = [tuple(map(Fraction, r)) for r in m]
    if ncols is None:
        if not rows:
            raise InputError("column count required for an empty matrix")
        ncols = len(rows[0])
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [F0] * ncols
        v[fc] = F1
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(tuple(v))
    return basis


def solve_linear(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Optional[Vec]:
    """One exact solution of a x = b, or None if inconsistent.

    Free variables are set to zero, which keeps the result canonical.
    """
    rows = [list(map(Fraction, r)) + [Fraction(x)] for r, x in zip(a, b)]
    if len(rows) != len(b):
        raise InputError("dimension mismatch in solve_linear")
    ncols = len(a[0]) if a else 0
    red, pivots = rref(rows, ncols + 1)
    if ncols in pivots:
        return None
    x = [F0] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return tuple(x)


def det(m: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant (fraction-free Bareiss once denominators are cleared)."""
    n = len(m)
    if any(len(r) != n for r in m):
        raise InputError("determinant of a non-square matrix")
    if n == 0:
        return F1
    denom = 1
    for row in m:
        for x in row:
            denom = math.lcm(denom, Fraction(x).denominator)
    work = [[int(Fraction(x) * denom) for x in row] for row in m]
    d = det_int(work)
    return Fraction(d, denom ** n)


def det_int(m: list[list[int]]) -> int:
    """Bareiss fraction-free determinant of an integer matrix."""
    a = [row[:] for row in m]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Exact two-phase simplex (Bland's rule, hence guaranteed termination).
#
# The tableau is kept in integer-pivoting form: stored entries are integers
# whose true rational value is entry/den, with den > 0 equal (up to sign
# normalisation) to the determinant of the current basis.  Every pivot
# divides exactly, all sign tests stay on machine integers, and only the
# final solution extraction builds Fractions.
# ---------------------------------------------------------------------------

def lp_minimize(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction],
                c: Sequence[Fraction]):
    """Minimize c.x subject to a x = b, x >= 0, exactly.

    Returns (status, x, value) with status in {"optimal", "infeasible",
    "unbounded"}; x is a basic optimal solution when status == "optimal".
    """
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    if len(b) != nrows or len(c) != ncols:
        raise InputError("dimension mismatch in lp_minimize")

    tab = []
    rhs = []
    for i in range(nrows):
        row = [Fraction(x) for x in a[i]] + [Fraction(b[i])]
        scale = 1
        for x in row:
            scale = math.lcm(scale, x.denominator)
        ints = [int(x * scale) for x in row]
        if ints[-1] < 0:
            ints = [-x for x in ints]
        tab.append(ints[:-1])
        rhs.append(ints[-1])

    # Phase I: artificial identity basis.
    for i in range(nrows):
        tab[i] = tab[i] + [1 if j == i else 0 for j in range(nrows)]
    basis = list(range(ncols, ncols + nrows))
    total = ncols + nrows
    state = _State(tab, rhs, basis, 1)

    cost1 = [0] * ncols + [1] * nrows
    val = _simplex(state, cost1, total)
    if val is None or val > 0:
        return "infeasible", None, None

    # Drive any remaining artificial variables out of the basis.
    for i in range(nrows):
        if state.basis[i] >= ncols:
            piv = next((j for j in range(ncols) if state.tab[i][j] != 0), None)
            if piv is None:
                continue  # redundant row; artificial stays at value 0
            _int_pivot(state, i, piv)

    # Phase II on the original columns only.
    for i in range(nrows):
        state.tab[i] = state.tab[i][:ncols]
    cscale = 1
    cfrac = [Fraction(x) for x in c]
    for x in cfrac:
        cscale = math.lcm(cscale, x.denominator)
    cost2 = [int(x * cscale) for x in cfrac]
    val = _simplex(state, cost2, ncols)
    if val is None:
        return "unbounded", None, None
    x = [F0] * ncols
    for i, bi in enumerate(state.basis):
        if bi < ncols:
            x[bi] = Fraction(state.rhs[i], state.den)
    return "optimal", tuple(x), val / cscale


class _State:
    __slots__ = ("tab", "rhs", "basis", "den")

    def __init__(self, tab, rhs, basis, den):
        self.tab = tab
        self.rhs = rhs
        self.basis = basis
        self.den = den


def _int_pivot(state, r, c, obj=None):
    """Integer pivot on (r, c); divisions are exact by the determinant
    identity behind fraction-free elimination.  The pivot row itself is kept
    verbatim; the stored denominator becomes the pivot element."""
    tab, rhs, den = state.tab, state.rhs, state.den
    p = tab[r][c]
    row_r = tab[r]
    rhs_r = rhs[r]
    for i in range(len(tab)):
        if i == r:
            continue
        f = tab[i][c]
        if f:
            row_i = tab[i]
            tab[i] = [(x * p - f * y) // den for x, y in zip(row_i, row_r)]
            rhs[i] = (rhs[i] * p - f * rhs_r) // den
        else:
            tab[i] = [(x * p) // den for x in tab[i]]
            rhs[i] = (rhs[i] * p) // den
    if obj is not None:
        f = obj[c]
        if f:
            obj[:] = [(x * p - f * y) // den for x, y in zip(obj, row_r)]
        else:
            obj[:] = [(x * p) // den for x in obj]
    state.basis[r] = c
    state.den = p
    if state.den < 0:
        state.den = -state.den
        for i in range(len(tab)):
            tab[i] = [-x for x in tab[i]]
            rhs[i] = -rhs[i]
        if obj is not None:
            obj[:] = [-x for x in obj]


def _objective(state, cost):
    total = 0
    for i, b in enumerate(state.basis):
        cb = cost[b] if b < len(cost) else 0
        if cb:
            total += cb * state.rhs[i]
    return Fraction(total, state.den)


def _simplex(state, cost, ncols):
    """Bland-rule simplex; returns the optimal objective value as a Fraction,
    or None when unbounded."""
    tab, rhs = state.tab, state.rhs
    nrows = len(tab)
    # reduced-cost row in the shared integer scaling (entry/den)
    obj = [cost[j] * state.den for j in range(ncols)]
    for i, b in enumerate(state.basis):
        cb = cost[b] if b < len(cost) else 0
        if cb:
            obj = [o - cb * t for o, t in zip(obj, tab[i])]
    while True:
        entering = next((j for j in range(ncols) if obj[j] < 0), None)
        if entering is None:
            return _objective(state, cost)
        leaving = None
        best_num = best_den = None
        for i in range(nrows):
            t = tab[i][entering]
            if t > 0:
                if leaving is None:
                    better = True
                else:
                    lhs = rhs[i] * best_den
                    rhs_cmp = best_num * t
                    better = lhs < rhs_cmp or (lhs == rhs_cmp
                                               and state.basis[i] < state.basis[leaving])
                if better:
                    leaving = i
                    best_num, best_den = rhs[i], t
        if leaving is None:
            return None
        _int_pivot(state, leaving, entering, obj)


def nonneg_feasible(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Optional[Vec]:
    """Some x with a x = b and x >= 0, or None.  Phase-I only."""
    ncols = len(a[0]) if a else 0
    status, x, _ = lp_minimize(a, b, [F0] * ncols)
    return x if status == "optimal" else None


def strict_feasible(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Optional[Vec]:
    """Some x with a x = b and every coordinate strictly positive, or None.

    Maximizes the minimum coordinate eps (capped at 1 so the LP stays
    bounded): writing x = s + eps*1 with s >= 0 and eps free, a strictly
    positive solution exists iff the optimum eps is > 0.  The returned x
    verifies by substitution.
    """
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    if ncols < 1:
        raise InputError("strict_feasible needs at least one column")
    if len(b) != nrows:
        raise InputError("dimension mismatch in strict_feasible")
    ones = [sum((Fraction(x) for x in row), F0) for row in a]
    # columns: s (ncols) | eps+ | eps- | cap slack
    ext = []
    for i in range(nrows):
        ext.append([Fraction(x) for x in a[i]] + [ones[i], -ones[i], F0])
    ext.append([F0] * ncols + [F1, -F1, F1])
    rhs = [Fraction(x) for x in b] + [F1]
    cost = [F0] * ncols + [-F1, F1, F0]
    status, x, val = lp_minimize(ext, rhs, cost)
    if status != "optimal":
        return None
    eps = x[ncols] - x[ncols + 1]
    if eps <= 0:
        return None
    sol = tuple(x[j] + eps for j in range(ncols))
    if mat_vec(a, sol) != tuple(Fraction(v) for v in b) or min(sol) <= 0:
        raise InvariantError("strict_feasible produced a non-verifying solution")
    return sol
