"""Tiny exact simplex solver over Fraction.

Solves  max c.x  subject to  A x <= b  with free variables, by splitting
x = u - v and running a two-phase dictionary simplex with Bland's rule.
Problem sizes in this package are tiny (tens of constraints), so the
emphasis is on exactness and simplicity, not speed.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import as_vec, frac

OPTIMAL = "optimal"
UNBOUNDED = "unbounded"
INFEASIBLE = "infeasible"


class _Dictionary:
    # Chvatal-style dictionary: basic[i] = row index var, nonbasic columns.
    # Data: rows[i] = (constant, coeffs over nonbasic vars); objective same.

    def __init__(self, a, b, c):
        self.m = len(a)
        self.n = len(a[0]) if a else len(c)
        self.nonbasic = list(range(self.n))
        self.basic = list(range(self.n, self.n + self.m))
        self.rows = [[b[i]] + [-a[i][j] for j in range(self.n)] for i in range(self.m)]
        self.obj = [Fraction(0)] + [c[j] for j in range(self.n)]

    def pivot(self, row, col):
        # Entering variable: nonbasic[col]; leaving: basic[row].
        piv = self.rows[row][col + 1]
        entering = self.nonbasic[col]
        leaving = self.basic[row]
        new_row = [-x / piv for x in self.rows[row]]
        new_row[col + 1] = Fraction(1) / piv
        for i in range(self.m):
            if i == row:
                continue
            coef = self.rows[i][col + 1]
            if coef:
                r = self.rows[i]
                r[col + 1] = Fraction(0)
                for j in range(self.n + 1):
                    r[j] += coef * new_row[j]
        coef = self.obj[col + 1]
        if coef:
            self.obj[col + 1] = Fraction(0)
            for j in range(self.n + 1):
                self.obj[j] += coef * new_row[j]
        self.rows[row] = new_row
        self.basic[row] = entering
        self.nonbasic[col] = leaving

    def solve(self):
        # Bland's rule: smallest-index entering and leaving variable.
        while True:
            col = None
            best_var = None
            for j in range(self.n):
                if self.obj[j + 1] > 0 and (best_var is None or self.nonbasic[j] < best_var):
                    best_var = self.nonbasic[j]
                    col = j
            if col is None:
                return OPTIMAL
            row = None
            best_ratio = None
            best_leaving = None
            for i in range(self.m):
                coef = self.rows[i][col + 1]
                if coef < 0:
                    ratio = -self.rows[i][0] / coef
                    if (
                        best_ratio is None
                        or ratio < best_ratio
                        or (ratio == best_ratio and self.basic[i] < best_leaving)
                    ):
                        best_ratio = ratio
                        best_leaving = self.basic[i]
                        row = i
            if row is None:
                return UNBOUNDED
            self.pivot(row, col)

    def values(self, nvars):
        out = [Fraction(0)] * (self.n + self.m)
        for i, var in enumerate(self.basic):
            out[var] = self.rows[i][0]
        return out[:nvars]


def _solve_standard(a, b, c):
    """max c.y s.t. a y <= b, y >= 0.  Returns (status, y, value)."""
    m = len(a)
    n = len(a[0]) if a else len(c)
    if all(bi >= 0 for bi in b):
        d = _Dictionary(a, b, c)
        status = d.solve()
        if status == UNBOUNDED:
            return UNBOUNDED, None, None
        y = d.values(n)
        return OPTIMAL, y, d.obj[0]
    # Phase 1: auxiliary variable x0, maximize -x0.
    a_aux = [row + [Fraction(-1)] for row in a]
    c_aux = [Fraction(0)] * n + [Fraction(-1)]
    d = _Dictionary(a_aux, b, c_aux)
    # Make feasible: pivot x0 into the basis against the most negative row.
    worst = min(range(m), key=lambda i: b[i])
    d.pivot(worst, n)
    d.solve()
    if d.obj[0] != 0:
        return INFEASIBLE, None, None
    # Drive x0 out of the basis if it lingers at value zero.
    x0_id = n  # x0 was the (n+1)-th structural variable in the aux problem
    if x0_id in d.basic:
        i = d.basic.index(x0_id)
        col = next((j for j in range(d.n) if d.rows[i][j + 1] != 0), None)
        if col is not None:
            d.pivot(i, col)
        else:
            # Redundant constraint row; drop it with x0.
            del d.rows[i]
            del d.basic[i]
            d.m -= 1
    # Remove x0 column, restore the real objective.
    if x0_id in d.nonbasic:
        col = d.nonbasic.index(x0_id)
        for row in d.rows:
            del row[col + 1]
        del d.obj[col + 1]
        del d.nonbasic[col]
        d.n -= 1
    # Re-index: variable ids > x0_id shift down by one.
    d.nonbasic = [v - 1 if v > x0_id else v for v in d.nonbasic]
    d.basic = [v - 1 if v > x0_id else v for v in d.basic]
    d.obj = [Fraction(0)] * (d.n + 1)
    zero = [Fraction(0)] * (d.n + 1)
    obj = list(zero)
    for j, var in enumerate(d.nonbasic):
        if var < n:
            obj[j + 1] += c[var]
    for i, var in enumerate(d.basic):
        if var < n and c[var]:
            for j in range(d.n + 1):
                obj[j] += c[var] * d.rows[i][j]
    d.obj = obj
    status = d.solve()
    if status == UNBOUNDED:
        return UNBOUNDED, None, None
    y = d.values(n)
    return OPTIMAL, y, d.obj[0]


def lp(objective, a_ub, b_ub, a_eq=(), b_eq=()):
    """max objective.x over { A_ub x <= b_ub, A_eq x = b_eq }, x free.

    Returns (status, x, value) with exact Fractions.
    """
    objective = as_vec(objective)
    nx = len(objective)
    rows = []
    rhs = []
    for row, b in zip(a_ub, b_ub, strict=True):
        rows.append(as_vec(row))
        rhs.append(frac(b))
    for row, b in zip(a_eq, b_eq, strict=True):
        r = as_vec(row)
        bb = frac(b)
        rows.append(r)
        rhs.append(bb)
        rows.append(tuple(-x for x in r))
        rhs.append(-bb)
    # Split free variables: x = u - v.
    a_std = [[*row, *(-x for x in row)] for row in rows]
    c_std = [*objective, *(-x for x in objective)]
    if not a_std:
        if all(x == 0 for x in c_std):
            return OPTIMAL, (Fraction(0),) * nx, Fraction(0)
        return UNBOUNDED, None, None
    status, y, value = _solve_standard(a_std, rhs, c_std)
    if status != OPTIMAL:
        return status, None, None
    x = tuple(y[j] - y[nx + j] for j in range(nx))
    return OPTIMAL, x, value


def feasible_point(a_ub, b_ub, a_eq=(), b_eq=()):
    """Some x with A_ub x <= b_ub and A_eq x = b_eq, or None."""
    ncols = 0
    for row in list(a_ub) + list(a_eq):
        ncols = max(ncols, len(row))
    status, x, _ = lp((Fraction(0),) * ncols, a_ub, b_ub, a_eq, b_eq)
    return x if status == OPTIMAL else None


def maximize(objective, a_ub, b_ub, a_eq=(), b_eq=()):
    return lp(objective, a_ub, b_ub, a_eq, b_eq)


def is_bounded_above(objective, a_ub, b_ub, a_eq=(), b_eq=()):
    status, _, _ = lp(objective, a_ub, b_ub, a_eq, b_eq)
    if status == INFEASIBLE:
        raise ValueError("infeasible system")
    return status == OPTIMAL
