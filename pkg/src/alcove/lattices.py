"""Inner products, integer lattices of rational vectors, and their quotients.

A Lattice is the Z-span of finitely many vectors in Q^n, stored in a unique
canonical form: an integer matrix in Hermite normal form together with one
common denominator (reduced so that gcd(matrix content, denominator) = 1).
Two lattices are equal iff their canonical forms are syntactically equal,
which downstream code relies on for monoid equality tests.

Duals are always taken inside the span of the lattice, with respect to an
explicit inner product: a lattice of rank r < n is dual to another lattice
of rank r living in the same r-dimensional subspace.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from . import linalg
from .linalg import as_vec, dot, frac, is_zero_vec, mat_vec


class NotSublattice(ValueError):
    """Raised by quotient() when containment of the two lattices fails."""


class InnerProduct:
    """Positive definite symmetric bilinear form given by a Gram matrix."""

    def __init__(self, gram):
        g = tuple(as_vec(row) for row in gram)
        n = len(g)
        if any(len(row) != n for row in g):
            raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
        # Positive definiteness via leading principal minors.
        for k in range(1, n + 1):
            minor = tuple(row[:k] for row in g[:k])
            if _det(minor) <= 0:
                raise ValueError("Gram matrix is not positive definite")
        self.gram = g
        self.dim = n
        self._inv = None
        self._gradient_cache = {}
        self._coroot_cache = {}

    @classmethod
    def standard(cls, n):
        return cls(linalg.identity(n))

    @classmethod
    def blocks(cls, parts):
        """Block diagonal inner product from a list of InnerProducts."""
        n = sum(p.dim for p in parts)
        rows = []
        off = 0
        for p in parts:
            for r in p.gram:
                rows.append((Fraction(0),) * off + tuple(r) + (Fraction(0),) * (n - off - p.dim))
            off += p.dim
        return cls(rows)

    def scaled(self, c):
        c = frac(c)
        if c <= 0:
            raise ValueError("scale factor must be positive")
        return InnerProduct(tuple(tuple(c * x for x in row) for row in self.gram))

    def pairing(self, u, v) -> Fraction:
        return dot(mat_vec(self.gram, as_vec(v)), as_vec(u))

    def norm2(self, v) -> Fraction:
        return self.pairing(v, v)

    def gram_inverse(self):
        if self._inv is None:
            self._inv = linalg.inverse(self.gram)
        return self._inv

    def __eq__(self, other):
        return isinstance(other, InnerProduct) and self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def __repr__(self):
        return f"InnerProduct({self.gram!r})"


def _det(m) -> Fraction:
    n = len(m)
    rows = [list(r) for r in m]
    result = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            result = -result
        result *= rows[c][c]
        inv = 1 / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return result


class Lattice:
    """Z-span of rational vectors in Q^ambient_dim, in canonical form."""

    __slots__ = ("ambient_dim", "den", "int_rows")

    def __init__(self, ambient_dim, generators=()):
        self.ambient_dim = int(ambient_dim)
        gens = [as_vec(g) for g in generators]
        for g in gens:
            if len(g) != self.ambient_dim:
                raise ValueError("generator has wrong length")
        gens = [g for g in gens if not is_zero_vec(g)]
        den, int_rows = linalg.scale_to_int(gens)
        h = linalg.hnf(int_rows)
        # Normalize the common denominator against the matrix content.
        content = 0
        for row in h:
            for x in row:
                content = gcd(content, abs(x))
        if h:
            g = gcd(content, den)
            if g > 1:
                h = tuple(tuple(x // g for x in row) for row in h)
                den //= g
        else:
            den = 1
        self.den = den
        self.int_rows = h

    @classmethod
    def zero(cls, ambient_dim):
        return cls(ambient_dim, ())

    @classmethod
    def standard(cls, n):
        return cls(n, linalg.identity(n))

    @property
    def rank(self) -> int:
        return len(self.int_rows)

    def basis(self):
        """Canonical basis vectors (rows of HNF divided by the denominator)."""
        d = Fraction(1, self.den)
        return tuple(tuple(d * x for x in row) for row in self.int_rows)

    def __eq__(self, other):
        return (
            isinstance(other, Lattice)
            and self.ambient_dim == other.ambient_dim
            and self.den == other.den
            and self.int_rows == other.int_rows
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.den, self.int_rows))

    def __repr__(self):
        return f"Lattice(dim={self.ambient_dim}, den={self.den}, rows={self.int_rows})"

    def contains(self, v) -> bool:
        v = as_vec(v)
        if is_zero_vec(v):
            return True
        b = self.basis()
        if not b:
            return False
        coords = linalg.solve(linalg.transpose(b), v)
        if coords is None:
            return False
        return all(c.denominator == 1 for c in coords)

    def contains_lattice(self, other) -> bool:
        return all(self.contains(b) for b in other.basis())

    def coords_of(self, v):
        """Integer coordinates of v in the canonical basis, or None."""
        v = as_vec(v)
        b = self.basis()
        if not b:
            return () if is_zero_vec(v) else None
        coords = linalg.solve(linalg.transpose(b), v)
        if coords is None or any(c.denominator != 1 for c in coords):
            return None
        return tuple(int(c) for c in coords)

    def sum(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimensions differ")
        return Lattice(self.ambient_dim, self.basis() + other.basis())

    def intersect(self, other):
        """Intersection of two lattices (inside Q^n)."""
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimensions differ")
        b1, b2 = self.basis(), other.basis()
        if not b1 or not b2:
            return Lattice.zero(self.ambient_dim)
        # x = c . b1 = d . b2  <=>  (c, -d) in the kernel of [b1; b2]^T.
        stacked = tuple(b1) + tuple(b2)
        cols = linalg.transpose(stacked)
        _, int_cols = linalg.scale_to_int(cols)
        kern = linalg.integer_kernel(int_cols)
        gens = []
        for k in kern:
            c = k[: len(b1)]
            gens.append(_combo(c, b1))
        return Lattice(self.ambient_dim, gens)

    def scaled(self, c):
        c = frac(c)
        return Lattice(self.ambient_dim, [tuple(c * x for x in b) for b in self.basis()])

    def intersect_subspace(self, subspace_basis):
        """Sublattice of vectors lying in the span of the given vectors."""
        b = self.basis()
        if not b:
            return self
        span = tuple(as_vec(v) for v in subspace_basis)
        if not span:
            return Lattice.zero(self.ambient_dim)
        # v = c . b in span  <=>  c orthogonal to the span's complement
        # equations; set up M c = 0 with rational M and take integer kernel.
        perp_eqs = linalg.nullspace(span)
        if not perp_eqs:
            return self
        m = tuple(tuple(dot(eq, bv) for bv in b) for eq in perp_eqs)
        _, m_int = linalg.scale_to_int(m)
        kern = linalg.integer_kernel(m_int)
        return Lattice(self.ambient_dim, [_combo(k, b) for k in kern])

    def saturation(self):
        """Lattice of all integer-coordinate points of the rational span.

        'Integer' is relative to this lattice's span: the result is
        span_Q(L) together with every rational point whose multiple lies in
        L, i.e. the saturation of L in the sense that L has finite index.
        """
        b = self.basis()
        if not b:
            return self
        sat_rows = linalg.saturation(self.int_rows)
        d = Fraction(1, self.den)
        return Lattice(self.ambient_dim, [tuple(d * x for x in r) for r in sat_rows])


def _combo(coeffs, vectors):
    n = len(vectors[0])
    out = [Fraction(0)] * n
    for c, v in zip(coeffs, vectors, strict=True):
        c = frac(c)
        if c:
            for j in range(n):
                out[j] += c * v[j]
    return tuple(out)


def dual_lattice(lattice: Lattice, ip: InnerProduct) -> Lattice:
    """Dual of a lattice inside its own span, w.r.t. the inner product.

    For a basis B with Gram matrix G = (<b_i, b_j>), the dual is spanned by
    G^{-1} B; pairings of dual basis against B form the identity, so
    <dual, lattice> is integral and dual(dual(L)) = L.
    """
    b = lattice.basis()
    if not b:
        return lattice
    g = tuple(tuple(ip.pairing(u, v) for v in b) for u in b)
    ginv = linalg.inverse(g)
    dual_basis = tuple(_combo(row, b) for row in ginv)
    return Lattice(lattice.ambient_dim, dual_basis)


class AbelianGroupPresentation:
    """Finitely generated abelian group as a divisor chain d1 | d2 | ...

    A zero entry encodes a free Z factor; factors equal to 1 are dropped.
    """

    __slots__ = ("invariant_factors",)

    def __init__(self, factors):
        fin = sorted(int(f) for f in factors if f not in (0, 1))
        free = sum(1 for f in factors if f == 0)
        for a, b in zip(fin, fin[1:]):
            if b % a != 0:
                raise ValueError("invariant factors must form a divisor chain")
        self.invariant_factors = tuple(fin) + (0,) * free

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    @property
    def is_finite(self) -> bool:
        return 0 not in self.invariant_factors

    def order(self):
        """Group order, or None when infinite."""
        if not self.is_finite:
            return None
        n = 1
        for f in self.invariant_factors:
            n *= f
        return n

    def __eq__(self, other):
        return (
            isinstance(other, AbelianGroupPresentation)
            and self.invariant_factors == other.invariant_factors
        )

    def __hash__(self):
        return hash(self.invariant_factors)

    def __repr__(self):
        if self.is_trivial:
            return "AbelianGroup(0)"
        parts = [f"Z/{f}" if f else "Z" for f in self.invariant_factors]
        return "AbelianGroup(" + " + ".join(parts) + ")"


def quotient(l_small: Lattice, l_big: Lattice) -> AbelianGroupPresentation:
    """The quotient l_big / l_small as an abelian group presentation.

    Raises NotSublattice when l_small is not contained in l_big.  The free
    rank of the quotient is rank(l_big) - rank(l_small).
    """
    if not l_big.contains_lattice(l_small):
        raise NotSublattice("first lattice is not contained in the second")
    big = l_big.basis()
    coords = []
    for v in l_small.basis():
        c = l_big.coords_of(v)
        coords.append(c)
    if coords:
        factors = linalg.snf_invariant_factors(coords)
    else:
        factors = []
    free = l_big.rank - l_small.rank
    return AbelianGroupPresentation(list(factors) + [0] * free)


def orthogonal_project(v, subspace, ip: InnerProduct):
    """Orthogonal projection of v onto the span of `subspace` w.r.t. ip.

    Dependent generators are reduced to a basis first; an empty span
    projects everything to zero.
    """
    v = as_vec(v)
    vectors = [as_vec(u) for u in subspace]
    vectors = [u for u in vectors if not is_zero_vec(u)]
    if not vectors:
        return linalg.vzero(len(v))
    idx = linalg.lin_indep_subset(vectors)
    basis = [vectors[i] for i in idx]
    g = tuple(tuple(ip.pairing(a, b) for b in basis) for a in basis)
    rhs = tuple(ip.pairing(v, b) for b in basis)
    coeffs = linalg.solve(g, rhs)
    return _combo(coeffs, basis)


def orthogonal_complement_basis(subspace, ip: InnerProduct, ambient_dim):
    """Basis of the ip-orthogonal complement of span(subspace) in Q^n."""
    vectors = [as_vec(u) for u in subspace if not is_zero_vec(as_vec(u))]
    if not vectors:
        return linalg.identity(ambient_dim)
    rows = tuple(mat_vec(ip.gram, u) for u in vectors)
    return linalg.nullspace(rows)
