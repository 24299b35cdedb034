"""Finite and (twisted) affine root systems with alcoves.

Realizations are fixed once per family, in epsilon coordinates:

* A_r lives in the sum-zero hyperplane of Q^{r+1}, alpha_i = x_i - x_{i+1};
* B_r, C_r, D_r live in Q^r with the usual last roots x_r, 2 x_r,
  x_{r-1} + x_r;
* G_2 lives in the sum-zero hyperplane of Q^3 with simple roots
  (long, short) = (-2x_1 + x_2 + x_3, x_1 - x_2), so the affine labels
  come out as (1, 2, 3);
* F_4 and E_6/7/8 use the standard Q^4 / Q^8 realizations.

Affine systems append alpha_0 = 1/r - <theta, .> as the FIRST simple root
(level-1 normalization).  Twisted systems are rebuilt in intrinsic
coordinates of the fixed subspace of the diagram automorphism; the
coordinate basis per family is documented in build_affine_twisted.  The
inner product is explicit and may be scaled per simple factor; functionals
are metric-free coefficient forms, so alcoves do not move under rescaling,
while gradients, coroots and weight lattices do.

Only the simple roots, the finite set of gradient roots, labels and
vertex-local subsystems are ever materialized; the affine root set itself
is infinite and never stored.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .functionals import AffineFunctional, reflect_functional
from .lattices import InnerProduct, Lattice, dual_lattice
from .linalg import as_vec, dot, frac, is_zero_vec
from .polytopes import Chart, Polytope

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")


class InvalidCartanType(ValueError):
    pass


@dataclass(frozen=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        f, r = self.family, self.rank
        if f not in FAMILIES:
            raise InvalidCartanType(f"unknown family {f!r}")
        ok = (
            (f == "A" and r >= 1)
            or (f in ("B", "C") and r >= 2)
            or (f == "D" and r >= 3)
            or (f == "E" and r in (6, 7, 8))
            or (f == "F" and r == 4)
            or (f == "G" and r == 2)
        )
        if not ok:
            raise InvalidCartanType(f"invalid rank {r} for family {f}")

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class TwistSpec:
    """Diagram automorphism data: order r and a permutation of simple roots."""

    order: int
    permutation: tuple

    def __post_init__(self):
        if self.order not in (1, 2, 3):
            raise InvalidCartanType("twist order must be 1, 2 or 3")
        p = self.permutation
        if sorted(p) != list(range(len(p))):
            raise InvalidCartanType("twist permutation is not a permutation")
        q = list(range(len(p)))
        for _ in range(self.order):
            q = [p[i] for i in q]
        if q != list(range(len(p))):
            raise InvalidCartanType("permutation order does not divide the twist order")


def standard_twist(t: CartanType, order: int) -> TwistSpec:
    """The standard diagram automorphism of the given order."""
    r = t.rank
    if order == 1:
        return TwistSpec(1, tuple(range(r)))
    if order == 2:
        if t.family == "A" and r >= 2:
            return TwistSpec(2, tuple(r - 1 - i for i in range(r)))
        if t.family == "D" and r >= 3:
            p = list(range(r))
            p[r - 2], p[r - 1] = p[r - 1], p[r - 2]
            return TwistSpec(2, tuple(p))
        if t.family == "E" and r == 6:
            return TwistSpec(2, (5, 1, 4, 3, 2, 0))
    if order == 3 and t.family == "D" and r == 4:
        return TwistSpec(3, (2, 1, 3, 0))
    raise InvalidCartanType(f"no standard order-{order} automorphism of {t}")


def _simple_root_coeffs(t: CartanType):
    """(ambient_dim, list of coefficient tuples) of the fixed realization."""
    f, r = t.family, t.rank

    def e(i, n, c=1):
        return tuple(Fraction(c if j == i else 0) for j in range(n))

    def pair(i, j, n, ci=1, cj=-1):
        v = [Fraction(0)] * n
        v[i] = Fraction(ci)
        v[j] = Fraction(cj)
        return tuple(v)

    if f == "A":
        n = r + 1
        return n, [pair(i, i + 1, n) for i in range(r)]
    if f in ("B", "C", "D"):
        n = r
        roots = [pair(i, i + 1, n) for i in range(r - 1)]
        if f == "B":
            roots.append(e(r - 1, n))
        elif f == "C":
            roots.append(e(r - 1, n, 2))
        else:
            roots.append(pair(r - 2, r - 1, n, 1, 1))
        return n, roots
    if f == "G":
        return 3, [
            (Fraction(-2), Fraction(1), Fraction(1)),
            (Fraction(1), Fraction(-1), Fraction(0)),
        ]
    if f == "F":
        n = 4
        half = Fraction(1, 2)
        return n, [
            pair(1, 2, n),
            pair(2, 3, n),
            e(3, n),
            (half, -half, -half, -half),
        ]
    # E family, Bourbaki realization in Q^8.
    n = 8
    half = Fraction(1, 2)
    a1 = (half, -half, -half, -half, -half, -half, -half, half)
    a2 = (Fraction(1), Fraction(1)) + (Fraction(0),) * 6
    rest = [pair(k - 2, k - 3, n) for k in range(3, 9)]  # alpha_k = e_{k-1} - e_{k-2}
    roots = [a1, a2] + rest
    return n, roots[:r]


# ---------------------------------------------------------------------------


class AffineRootSystem:
    """A root system given by its simple affine functionals.

    Covers finite systems, irreducible affine systems, and orthogonal
    products of both (including an empty system).  The carrier is the
    affine subspace the system lives on; for built systems it is the span
    of the gradients through the origin.
    """

    def __init__(self, ambient_dim, ip, simple_roots, carrier=None, meta=None, check=True):
        self.ambient_dim = ambient_dim
        self.ip = ip
        self.simple_roots = tuple(simple_roots)
        if carrier is None:
            if self.simple_roots:
                grads = [f.gradient(ip) for f in self.simple_roots]
                idx = linalg.lin_indep_subset(grads)
                dirs = [grads[i] for i in idx]
            else:
                dirs = linalg.identity(ambient_dim)
            carrier = Chart((Fraction(0),) * ambient_dim, dirs)
        self.carrier = carrier
        self.meta = dict(meta or {})
        self._alcove = None
        self._gradient_roots = None
        self._labels = None
        self._type = None
        if check:
            self._check_axioms()

    def _check_axioms(self):
        ip = self.ip
        n = len(self.simple_roots)
        for f in self.simple_roots:
            if f.is_constant():
                raise ValueError("constant functional cannot be a root")
        for i in range(n):
            for j in range(n):
                c = self.simple_roots[i].cartan_with(self.simple_roots[j], ip)
                if c.denominator != 1:
                    raise ValueError("non-integral Cartan pairing")
                if i != j and c > 0:
                    raise ValueError("positive Cartan pairing between distinct simples")
                if i == j and c != 2:
                    raise ValueError("self-pairing of a root must be 2")

    # -- structure ----------------------------------------------------------

    def cartan_matrix(self):
        ip = self.ip
        return tuple(
            tuple(int(a.cartan_with(b, ip)) for b in self.simple_roots)
            for a in self.simple_roots
        )

    def components(self):
        """Index sets of the irreducible components (by Cartan adjacency)."""
        n = len(self.simple_roots)
        c = self.cartan_matrix()
        seen = [False] * n
        comps = []
        for start in range(n):
            if seen[start]:
                continue
            stack = [start]
            comp = []
            seen[start] = True
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in range(n):
                    if not seen[j] and c[i][j] != 0:
                        seen[j] = True
                        stack.append(j)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def component_is_affine(self, comp) -> bool:
        grads = tuple(self.simple_roots[i].gradient(self.ip) for i in comp)
        return linalg.rank(grads) < len(comp)

    @property
    def is_affine(self) -> bool:
        """True when at least one component is an infinite affine system."""
        return any(self.component_is_affine(c) for c in self.components())

    @property
    def is_finite_type(self) -> bool:
        return not self.is_affine

    def labels(self):
        """Kac labels a_i (aligned with simple roots) for irreducible affine
        systems; [] for finite systems; a per-component list of lists for
        reducible systems."""
        comps = self.components()
        if len(comps) == 1 and self.component_is_affine(comps[0]):
            return list(self._component_labels(comps[0]))
        if not self.is_affine:
            return []
        return [
            list(self._component_labels(c)) if self.component_is_affine(c) else []
            for c in comps
        ]

    def _component_labels(self, comp):
        if self._labels is None:
            self._labels = {}
        if comp in self._labels:
            return self._labels[comp]
        grads = tuple(self.simple_roots[i].gradient(self.ip) for i in comp)
        kern = linalg.nullspace(linalg.transpose(grads))
        if len(kern) != 1:
            raise ValueError("component does not have a one-dimensional label relation")
        lab = linalg.primitive_integer_vector(kern[0])
        if all(x < 0 for x in lab):
            lab = tuple(-x for x in lab)
        if not all(x > 0 for x in lab):
            raise ValueError("labels are not all positive")
        labels = tuple(int(x) for x in lab)
        self._labels[comp] = labels
        return labels

    def gradient_roots(self):
        """All gradient vectors of roots (finite, possibly non-reduced)."""
        if self._gradient_roots is None:
            if "gradient_roots" in self.meta:
                self._gradient_roots = tuple(self.meta["gradient_roots"])
            else:
                grads = [f.gradient(self.ip) for f in self.simple_roots]
                self._gradient_roots = close_under_reflections(grads, self.ip)
        return self._gradient_roots

    def alcove(self) -> Polytope:
        if self._alcove is None:
            base = self.carrier.base
            eqs = []
            if self.carrier.dim < self.ambient_dim:
                perp = (
                    linalg.nullspace(self.carrier.directions)
                    if self.carrier.directions
                    else linalg.identity(self.ambient_dim)
                )
                for p in perp:
                    eqs.append(AffineFunctional(-dot(p, base), p))
            self._alcove = Polytope.from_constraints(
                self.ambient_dim, eqs, list(self.simple_roots)
            )
        return self._alcove

    def type_string(self) -> str:
        if self._type is None:
            from .cartan_classify import classify_system

            self._type = classify_system(self)
        return self._type

    def root_lattice(self) -> Lattice:
        return Lattice(self.ambient_dim, self.gradient_roots())

    def coroot_lattice(self) -> Lattice:
        ip = self.ip
        coroots = []
        for g in self.gradient_roots():
            n2 = ip.pairing(g, g)
            coroots.append(tuple(Fraction(2) / n2 * x for x in g))
        return Lattice(self.ambient_dim, coroots)

    def weight_lattice(self) -> Lattice:
        """Dual of the coroot lattice inside the gradient span (Lambda_tau)."""
        return dual_lattice(self.coroot_lattice(), self.ip)

    def __repr__(self):
        return f"<AffineRootSystem {self.type_string()} dim={self.ambient_dim}>"


def close_under_reflections(gradients, ip: InnerProduct, cap=5000):
    """Reflection closure of a finite set of gradient vectors."""
    work = []
    for g in gradients:
        g = as_vec(g)
        if is_zero_vec(g):
            raise ValueError("zero gradient")
        if g not in work:
            work.append(g)
        ng = tuple(-x for x in g)
        if ng not in work:
            work.append(ng)
    gens = list(work)
    frontier = list(work)
    seen = set(work)
    while frontier:
        if len(seen) > cap:
            raise ValueError("reflection closure does not look finite")
        nxt = []
        for v in frontier:
            for s in gens:
                n2 = ip.pairing(s, s)
                c = Fraction(2) * ip.pairing(v, s) / n2
                w = tuple(a - c * b for a, b in zip(v, s))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return tuple(sorted(seen))


def _functional_closure(funcs, ip: InnerProduct, cap=5000):
    """Reflection closure of a set of affine functionals (finite subsystems)."""
    seen = set()
    for f in funcs:
        seen.add(f)
        seen.add(-f)
    gens = list(seen)
    frontier = list(seen)
    while frontier:
        if len(seen) > cap:
            raise ValueError("closure does not look finite")
        nxt = []
        for f in frontier:
            for s in gens:
                g = reflect_functional(s, f, ip)
                if g not in seen:
                    seen.add(g)
                    nxt.append(g)
        frontier = nxt
    return tuple(sorted(seen, key=lambda f: (f.coeffs, f.const)))


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------


def build_finite(t: CartanType, scale=1) -> AffineRootSystem:
    n, coeffs = _simple_root_coeffs(t)
    ip = InnerProduct.standard(n).scaled(scale)
    simples = [AffineFunctional(0, c) for c in coeffs]
    meta = {"factors": [(t.family, t.rank, frac(scale), 0)]}
    return AffineRootSystem(n, ip, simples, meta=meta)


def _dominant_roots(root_vectors, simple_vectors, ip):
    out = []
    for v in root_vectors:
        ok = True
        for s in simple_vectors:
            n2 = ip.pairing(s, s)
            if Fraction(2) * ip.pairing(v, s) / n2 < 0:
                ok = False
                break
        if ok:
            out.append(v)
    return out


def highest_root(t: CartanType):
    """Gradient vector of the highest root in the fixed realization."""
    n, coeffs = _simple_root_coeffs(t)
    ip = InnerProduct.standard(n)
    roots = close_under_reflections(coeffs, ip)
    dom = _dominant_roots(roots, coeffs, ip)
    return max(dom, key=lambda v: (ip.pairing(v, v), v))


def build_affine_untwisted(t: CartanType, scale=1) -> AffineRootSystem:
    n, coeffs = _simple_root_coeffs(t)
    ip = InnerProduct.standard(n).scaled(scale)
    theta = highest_root(t)
    alpha0 = AffineFunctional(1, tuple(-x for x in theta))
    simples = [alpha0] + [AffineFunctional(0, c) for c in coeffs]
    meta = {"factors": [(t.family, t.rank, frac(scale), 1)]}
    sys = AffineRootSystem(n, ip, simples, meta=meta)
    sys._gradient_roots = close_under_reflections(coeffs, InnerProduct.standard(n))
    return sys


def build_affine_twisted(t: CartanType, twist: TwistSpec, scale=1) -> AffineRootSystem:
    """Twisted affine system on the fixed subspace of a diagram automorphism.

    The result is expressed in intrinsic coordinates y_1..y_m of the fixed
    subspace; the coordinate basis is, per family:

    * A_{2n} flip:   y_i <-> e_i - e_{2n+2-i}  (Gram = 2 I);
    * A_{2n-1} flip: y_i <-> e_i - e_{2n+1-i}  (Gram = 2 I);
    * D_r flip:      y_i <-> e_i               (Gram = I);
    * D_4 triality and E_6 flip: y_i <-> projections of orbit-leading
      simple roots (Gram computed).
    """
    if twist.order == 1:
        return build_affine_untwisted(t, scale)
    n, coeffs = _simple_root_coeffs(t)
    r = t.rank
    perm = twist.permutation
    if len(perm) != r:
        raise InvalidCartanType("permutation length does not match rank")
    ip0 = InnerProduct.standard(n)
    # Validate: the permutation must preserve the Cartan matrix.
    def cart(i, j):
        s = coeffs[j]
        return Fraction(2) * dot(coeffs[i], s) / dot(s, s)

    for i in range(r):
        for j in range(r):
            if cart(i, j) != cart(perm[i], perm[j]):
                raise InvalidCartanType("permutation is not a diagram automorphism")
    if perm == tuple(range(r)):
        raise InvalidCartanType("twist permutation is trivial")

    span = tuple(coeffs)  # gradient = coefficient vector (standard ip)
    span_t = linalg.transpose(span)

    def sigma(v):
        c = linalg.solve(span_t, as_vec(v))
        if c is None:
            raise ValueError("vector outside the root span")
        out = (Fraction(0),) * n
        for ci, i in zip(c, range(r)):
            if ci:
                out = tuple(a + ci * b for a, b in zip(out, coeffs[perm[i]]))
        return out

    def pr(v):
        acc = as_vec(v)
        w = as_vec(v)
        for _ in range(twist.order - 1):
            w = sigma(w)
            acc = tuple(a + b for a, b in zip(acc, w))
        return tuple(a / twist.order for a in acc)

    # Intrinsic basis of the fixed subspace.
    def eo(i, c=1):
        return tuple(Fraction(c if j == i else 0) for j in range(n))

    if t.family == "A":
        m = (r + 1) // 2
        basis = [
            tuple(a - b for a, b in zip(eo(i), eo(r - i)))
            for i in range(m)
        ]
    elif t.family == "D" and twist.order == 2:
        m = r - 1
        basis = [eo(i) for i in range(m)]
    else:
        orbits = []
        seen = set()
        for i in range(r):
            if i in seen:
                continue
            orb = {i}
            j = perm[i]
            while j != i:
                orb.add(j)
                j = perm[j]
            seen |= orb
            orbits.append(min(orb))
        basis = [pr(coeffs[i]) for i in orbits]
        m = len(basis)
    for b in basis:
        if sigma(b) != tuple(b):
            raise AssertionError("intrinsic basis vector is not fixed by the twist")
    if linalg.rank(tuple(basis)) != m:
        raise AssertionError("intrinsic basis is dependent")

    gram = tuple(tuple(dot(u, v) for v in basis) for u in basis)
    ip = InnerProduct(gram).scaled(scale)

    all_roots = close_under_reflections(coeffs, ip0)
    restricted = []
    for v in all_roots:
        c = tuple(dot(v, b) for b in basis)  # functional of v on the fixed space
        if is_zero_vec(c):
            raise AssertionError("root restricts to zero on the fixed space")
        if c not in restricted:
            restricted.append(c)
    simple_restricted = []
    for v in coeffs:
        c = tuple(dot(v, b) for b in basis)
        if c not in simple_restricted:
            simple_restricted.append(c)

    ip_plain = InnerProduct(gram)
    grads = {c: linalg.mat_vec(ip_plain.gram_inverse(), c) for c in restricted}
    simple_grads = [grads[c] for c in simple_restricted]
    dom = _dominant_roots([grads[c] for c in restricted], simple_grads, ip_plain)
    a2n_case = t.family == "A" and r % 2 == 0
    if a2n_case:
        theta_g = max(dom, key=lambda v: (ip_plain.pairing(v, v), v))
    else:
        theta_g = min(dom, key=lambda v: (ip_plain.pairing(v, v), v))
    theta_c = next(c for c in restricted if grads[c] == tuple(theta_g))
    alpha0 = AffineFunctional(Fraction(1, twist.order), tuple(-x for x in theta_c))
    simples = [alpha0] + [AffineFunctional(0, c) for c in simple_restricted]
    meta = {
        "factors": [(t.family, t.rank, frac(scale), twist.order)],
        "twist_permutation": perm,
    }
    sys = AffineRootSystem(m, ip, simples, meta=meta)
    sys._gradient_roots = tuple(sorted(
        linalg.mat_vec(ip.gram_inverse(), c) for c in restricted
    ))
    return sys


def build_factor(family, rank, scale=1, twist_order=1) -> AffineRootSystem:
    """One simple factor: finite (twist_order=0) or affine with a twist."""
    t = CartanType(family, rank)
    if twist_order == 0:
        return build_finite(t, scale)
    if twist_order == 1:
        return build_affine_untwisted(t, scale)
    return build_affine_twisted(t, standard_twist(t, twist_order), scale)


def product_system(factors) -> AffineRootSystem:
    """Orthogonal product; block-diagonal inner product, coordinates stacked."""
    if len(factors) == 1:
        return factors[0]
    total = sum(s.ambient_dim for s in factors)
    ip = InnerProduct.blocks([s.ip for s in factors])
    simples = []
    grads = []
    carrier_dirs = []
    meta_factors = []
    off = 0
    for s in factors:
        pad = lambda v, o=off: (Fraction(0),) * o + tuple(v) + (Fraction(0),) * (
            total - o - len(v)
        )
        for f in s.simple_roots:
            simples.append(AffineFunctional(f.const, pad(f.coeffs)))
        for g in s.gradient_roots():
            grads.append(pad(g))
        for d in s.carrier.directions:
            carrier_dirs.append(pad(d))
        meta_factors.extend(s.meta.get("factors", []))
        off += s.ambient_dim
    carrier = Chart((Fraction(0),) * total, carrier_dirs)
    sys = AffineRootSystem(total, ip, simples, carrier=carrier, meta={"factors": meta_factors})
    sys._gradient_roots = tuple(sorted(grads))
    return sys


def fold_cyclic(base: AffineRootSystem, m) -> AffineRootSystem:
    """Diagonal system of the m-fold cyclic product of the base factor.

    Roots become x |-> (1/m) alpha(m x) (coefficients unchanged, constants
    divided by m) and the inner product is scaled by m.
    """
    m = int(m)
    if m < 1:
        raise ValueError("cyclic factor must be >= 1")
    if m == 1:
        return base
    ip = base.ip.scaled(m)
    simples = [AffineFunctional(f.const / m, f.coeffs) for f in base.simple_roots]
    meta = dict(base.meta)
    meta["cyclic_m"] = m * meta.get("cyclic_m", 1)
    sys = AffineRootSystem(base.ambient_dim, ip, simples, carrier=base.carrier, meta=meta)
    inv_m = Fraction(1, m)
    sys._gradient_roots = tuple(sorted(
        tuple(inv_m * x for x in g) for g in base.gradient_roots()
    ))
    return sys


# ---------------------------------------------------------------------------
# vertex-local subsystems
# ---------------------------------------------------------------------------


class FiniteSubsystem:
    """Roots of an affine system vanishing at a point of the alcove."""

    __slots__ = ("base_point", "roots", "simple_roots", "simple_indices", "ip")

    def __init__(self, base_point, roots, simple_roots, simple_indices, ip):
        self.base_point = as_vec(base_point)
        self.roots = tuple(roots)
        self.simple_roots = tuple(simple_roots)
        self.simple_indices = tuple(simple_indices)
        self.ip = ip

    @property
    def rank(self):
        grads = [f.gradient(self.ip) for f in self.simple_roots]
        return linalg.rank(tuple(grads)) if grads else 0

    def components(self):
        n = len(self.simple_roots)
        adj = [
            [self.simple_roots[i].cartan_with(self.simple_roots[j], self.ip) != 0 for j in range(n)]
            for i in range(n)
        ]
        seen = [False] * n
        comps = []
        for s in range(n):
            if seen[s]:
                continue
            stack, comp = [s], []
            seen[s] = True
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in range(n):
                    if not seen[j] and adj[i][j]:
                        seen[j] = True
                        stack.append(j)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def type_string(self):
        from .cartan_classify import classify_finite_functionals

        return classify_finite_functionals(self.simple_roots, self.ip)

    def __repr__(self):
        return f"<FiniteSubsystem {self.type_string()} at {self.base_point}>"


def local_subsystem(sys: AffineRootSystem, x) -> FiniteSubsystem:
    """Phi_x: the roots vanishing at an alcove point, with simple system.

    The simple roots are the alcove walls through x; the full root set is
    their reflection closure.  Points outside the alcove are rejected.
    """
    x = as_vec(x)
    if sys.carrier.to_chart(x) is None:
        raise ValueError("point is outside the carrier subspace")
    vals = [f(x) for f in sys.simple_roots]
    if any(v < 0 for v in vals):
        raise ValueError("point is outside the alcove")
    idx = [i for i, v in enumerate(vals) if v == 0]
    simples = [sys.simple_roots[i] for i in idx]
    roots = _functional_closure(simples, sys.ip) if simples else ()
    return FiniteSubsystem(x, roots, simples, idx, sys.ip)


def is_weight_lattice(lat: Lattice, sys: AffineRootSystem) -> bool:
    """Phi_bar subset Lambda and Phi_bar^vee subset Lambda^vee."""
    ip = sys.ip
    for g in sys.gradient_roots():
        if not lat.contains(g):
            return False
    basis = lat.basis()
    for g in sys.gradient_roots():
        n2 = ip.pairing(g, g)
        coroot = tuple(Fraction(2) / n2 * x for x in g)
        for b in basis:
            if ip.pairing(b, coroot).denominator != 1:
                return False
    return True


def centralizer_root_datum(sys: AffineRootSystem, lat: Lattice, x):
    """Root datum of the twisted centralizer at an alcove point.

    Returns (Phi_x with the positive system given by the alcove's tangent
    cone at x, Lambda); requires Lambda to be a weight lattice for sys.
    """
    if not is_weight_lattice(lat, sys):
        raise ValueError("lattice is not a weight lattice for the system")
    return local_subsystem(sys, x), lat


def fundamental_weights(sys: AffineRootSystem):
    """Fundamental coweight-dual vectors of a finite system, inside the span.

    omega_i pairs to delta_ij against the simple coroots and lies in the
    gradient span.
    """
    if sys.is_affine:
        raise ValueError("fundamental weights of an affine system")
    ip = sys.ip
    simples = sys.simple_roots
    grads = [f.gradient(ip) for f in simples]
    span = grads
    k = len(simples)
    out = []
    for i in range(k):
        # omega = sum c_j grads_j with <omega, coroot_l> = delta_il
        m = tuple(
            tuple(ip.pairing(grads[j], simples[l].coroot(ip)) for j in range(k))
            for l in range(k)
        )
        rhs = tuple(Fraction(1 if l == i else 0) for l in range(k))
        c = linalg.solve(m, rhs)
        if c is None:
            raise ValueError("degenerate simple system")
        acc = (Fraction(0),) * sys.ambient_dim
        for cj, gj in zip(c, grads):
            acc = tuple(a + cj * b for a, b in zip(acc, gj))
        out.append(acc)
    return tuple(out)
