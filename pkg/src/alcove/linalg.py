"""Exact linear algebra over the rationals plus integer normal forms.

Vectors are tuples of Fraction, matrices are tuples of such tuples (row
major).  Everything here is plain Gaussian elimination; the matrices in this
package are tiny (dimension <= 10 or so), so no cleverness is needed, only
exactness.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def frac(x) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings to Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def vec(*entries):
    return tuple(frac(e) for e in entries)


def as_vec(seq):
    return tuple(frac(e) for e in seq)


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v, strict=True))


def smul(c, v):
    c = frac(c)
    return tuple(c * a for a in v)


def vzero(n):
    return (Fraction(0),) * n


def is_zero_vec(v) -> bool:
    return all(a == 0 for a in v)


def dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v, strict=True)), Fraction(0))


def mat(rows):
    return tuple(as_vec(r) for r in rows)


def identity(n):
    return tuple(tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n))


def transpose(m):
    return tuple(zip(*m)) if m else ()


def mat_vec(m, v):
    return tuple(dot(row, v) for row in m)


def mat_mul(a, b):
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def rref(m):
    """Reduced row echelon form.  Returns (rref_rows, pivot_columns)."""
    rows = [list(r) for r in m]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in rows), tuple(pivots)


def rank(m) -> int:
    return len(rref(m)[1])


def solve(a, b):
    """One solution x of a x = b (a: rows x cols), or None if inconsistent."""
    if not a:
        return None if any(x != 0 for x in b) else ()
    ncols = len(a[0])
    aug = tuple(tuple(row) + (bi,) for row, bi in zip(a, b, strict=True))
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, c in zip(red, pivots):
        x[c] = row[-1]
    return tuple(x)


def nullspace(m):
    """Basis of {x : m x = 0} as a tuple of vectors."""
    if not m:
        return ()
    ncols = len(m[0])
    red, pivots = rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, c in zip(red, pivots):
            v[c] = -row[f]
        basis.append(tuple(v))
    return tuple(basis)


def inverse(m):
    n = len(m)
    aug = tuple(tuple(row) + idr for row, idr in zip(m, identity(n)))
    red, pivots = rref(aug)
    if pivots != tuple(range(n)):
        raise ValueError("matrix is singular")
    return tuple(row[n:] for row in red)


def lin_indep_subset(vectors):
    """Indices of a maximal linearly independent subset, greedy in order."""
    picked = []
    current = []
    for i, v in enumerate(vectors):
        trial = current + [list(v)]
        if rank(tuple(map(tuple, trial))) == len(trial):
            picked.append(i)
            current = trial
    return picked


def common_denominator(vectors) -> int:
    d = 1
    for v in vectors:
        for x in v:
            d = lcm(d, frac(x).denominator)
    return d


def scale_to_int(vectors):
    """(d, int_rows) with vectors == int_rows / d."""
    d = common_denominator(vectors)
    rows = tuple(tuple(int(frac(x) * d) for x in v) for v in vectors)
    return d, rows


def primitive_integer_vector(v):
    """Smallest positive multiple of v with coprime integer entries."""
    if is_zero_vec(v):
        raise ValueError("zero vector has no primitive multiple")
    d, (row,) = scale_to_int([v])
    g = 0
    for x in row:
        g = gcd(g, abs(x))
    return tuple(Fraction(x, g) for x in row)


# ---------------------------------------------------------------------------
# Integer normal forms.  Matrices here are sequences of integer rows.
# ---------------------------------------------------------------------------


def hnf(int_rows):
    """Row-style Hermite normal form of an integer matrix.

    Returns the canonical basis of the integer row span: echelon rows with
    positive pivots and the entries above each pivot reduced into
    [0, pivot).  Zero rows are dropped, so the output is a unique canonical
    form of the lattice generated by the input rows, and hnf is idempotent.
    """
    rows = [list(map(int, r)) for r in int_rows if any(r)]
    if not rows:
        return ()
    ncols = len(rows[0])
    out = []
    for col in range(ncols):
        work = [r for r in rows if r[col] != 0]
        if not work:
            continue
        while len(work) > 1:
            work.sort(key=lambda r: abs(r[col]))
            base = work[0]
            for r in work[1:]:
                q = r[col] // base[col]
                if q:
                    for j in range(ncols):
                        r[j] -= q * base[j]
            work = [r for r in work if r[col] != 0]
        piv = work[0]
        rows.remove(piv)
        if piv[col] < 0:
            piv = [-x for x in piv]
        out.append(piv)
        rows = [r for r in rows if any(r)]
    # Reduce the entries above each pivot for uniqueness.  Increasing pivot
    # order: a reduction step only touches columns at or right of its pivot,
    # so later passes clean anything an earlier pass introduced.
    for i in range(len(out)):
        p = next(j for j in range(len(out[i])) if out[i][j] != 0)
        piv = out[i][p]
        for k in range(i):
            q = out[k][p] // piv
            if q:
                for j in range(len(out[k])):
                    out[k][j] -= q * out[i][j]
    return tuple(tuple(r) for r in out)


def snf_invariant_factors(int_rows):
    """Nonzero invariant factors d1 | d2 | ... (Smith normal form diagonal)."""
    a = [list(map(int, r)) for r in int_rows]
    a = [r for r in a if any(r)]
    if not a:
        return []
    m, n = len(a), len(a[0])
    factors = []
    t = 0
    while t < m and t < n:
        loc = next(((i, j) for i in range(t, m) for j in range(t, n) if a[i][j]), None)
        if loc is None:
            break
        i0, j0 = loc
        a[t], a[i0] = a[i0], a[t]
        if j0 != t:
            for r in a:
                r[t], r[j0] = r[j0], r[t]
        while True:
            changed = False
            for i in range(t + 1, m):
                while a[i][t]:
                    q = a[i][t] // a[t][t]
                    if q:
                        for j in range(t, n):
                            a[i][j] -= q * a[t][j]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        changed = True
            for j in range(t + 1, n):
                while a[t][j]:
                    q = a[t][j] // a[t][t]
                    if q:
                        for r in a:
                            r[j] -= q * r[t]
                    if a[t][j]:
                        for r in a:
                            r[t], r[j] = r[j], r[t]
                        changed = True
            if changed:
                continue
            piv = a[t][t]
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % piv),
                None,
            )
            if bad is None:
                break
            bi = bad[0]
            for j in range(t, n):
                a[t][j] += a[bi][j]
        factors.append(abs(a[t][t]))
        t += 1
    return factors


def integer_kernel(int_rows):
    """Canonical basis of {x in Z^n : A x = 0} for an integer matrix A.

    Uses the classical trick: unimodular row reduction of [A^T | I_n];
    the rows whose A^T-part vanished carry a kernel basis in the I-part.
    """
    rows = [list(map(int, r)) for r in int_rows]
    if not rows:
        return ()
    k = len(rows)
    n = len(rows[0])
    aug = []
    for i in range(n):
        left = [rows[j][i] for j in range(k)]
        right = [1 if t == i else 0 for t in range(n)]
        aug.append(left + right)
    reduced = _hermite_rows(aug)
    kernel = [r[k:] for r in reduced if not any(r[:k])]
    return hnf(kernel)


def _hermite_rows(rows):
    """Bring rows into echelon form by unimodular row operations only.

    Unlike hnf() this never drops rows, so the Z-span of the full row set is
    preserved exactly (needed by integer_kernel).
    """
    rows = [list(r) for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    top = 0
    for col in range(ncols):
        idx = [i for i in range(top, nrows) if rows[i][col] != 0]
        if not idx:
            continue
        while len(idx) > 1:
            idx.sort(key=lambda i: abs(rows[i][col]))
            base = rows[idx[0]]
            for i in idx[1:]:
                q = rows[i][col] // base[col]
                if q:
                    for j in range(ncols):
                        rows[i][j] -= q * base[j]
            idx = [i for i in idx if rows[i][col] != 0]
        i = idx[0]
        rows[top], rows[i] = rows[i], rows[top]
        top += 1
        if top == nrows:
            break
    return rows


def saturation(int_rows):
    """Canonical basis of (Q-row-span of A) intersected with Z^n."""
    rows = [tuple(map(int, r)) for r in int_rows if any(r)]
    if not rows:
        return ()
    n = len(rows[0])
    rational = tuple(tuple(Fraction(x) for x in r) for r in rows)
    perp = nullspace(rational)
    if not perp:
        return hnf([[1 if j == i else 0 for j in range(n)] for i in range(n)])
    _, perp_int = scale_to_int(perp)
    return integer_kernel(perp_int)
