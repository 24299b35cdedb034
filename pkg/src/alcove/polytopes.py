"""Exact convex geometry: polytopes in affine subspaces, tangent cones.

A Polytope is stored both ways at once: equalities cutting out its affine
span, irredundant inequalities (facets within the span), and the vertex
list.  Conversions run in chart coordinates of the span: points are
x = base + sum u_i b_i with directions b_i a basis of the translation
space.  Everything is exact; vertex order is lexicographic so that all
outputs are deterministic.

Alcoves of finite reflection groups are unbounded; such H-polyhedra are
supported (with their genuine vertex set, possibly empty), but momentum
polytopes downstream are required to be bounded.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from . import linalg, lp
from .functionals import AffineFunctional
from .linalg import as_vec, dot, is_zero_vec, smul, vadd, vsub


class EmptyPolytopeError(ValueError):
    pass


class Chart:
    """Affine chart of a subspace: x = base + u . directions."""

    __slots__ = ("base", "directions")

    def __init__(self, base, directions):
        self.base = as_vec(base)
        self.directions = tuple(as_vec(d) for d in directions)

    @property
    def dim(self):
        return len(self.directions)

    @property
    def ambient_dim(self):
        return len(self.base)

    def to_ambient(self, u):
        x = self.base
        for ui, d in zip(u, self.directions, strict=True):
            if ui:
                x = vadd(x, smul(ui, d))
        return x

    def to_chart(self, x):
        """Chart coordinates of an ambient point of the subspace, or None."""
        diff = vsub(as_vec(x), self.base)
        if not self.directions:
            return () if is_zero_vec(diff) else None
        sol = linalg.solve(linalg.transpose(self.directions), diff)
        return sol

    def pull_back(self, f: AffineFunctional):
        """The functional u |-> f(base + u . directions) on the chart."""
        const = f(self.base)
        coeffs = tuple(dot(f.coeffs, d) for d in self.directions)
        return AffineFunctional(const, coeffs)


def _canonical_functional(f: AffineFunctional) -> AffineFunctional:
    """Scale to primitive integer data with deterministic sign (>= 0 side kept)."""
    entries = (f.const,) + f.coeffs
    den = linalg.common_denominator([entries])
    ints = [int(x * den) for x in entries]
    from math import gcd

    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return AffineFunctional(Fraction(ints[0], g), [Fraction(x, g) for x in ints[1:]])


class Polytope:
    """Convex polyhedron with explicit span, facets and vertices."""

    __slots__ = ("ambient_dim", "equalities", "inequalities", "vertices", "bounded", "_chart")

    def __init__(self, ambient_dim, equalities, inequalities, vertices, bounded, chart):
        self.ambient_dim = ambient_dim
        self.equalities = tuple(sorted(equalities, key=lambda f: (f.coeffs, f.const)))
        self.inequalities = tuple(sorted(inequalities, key=lambda f: (f.coeffs, f.const)))
        self.vertices = tuple(sorted(vertices))
        self.bounded = bounded
        self._chart = chart

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_vertices(cls, points):
        """Convex hull; the H-representation is minimal within the span."""
        pts = [as_vec(p) for p in points]
        if not pts:
            raise EmptyPolytopeError("hull of no points")
        n = len(pts[0])
        base = pts[0]
        diffs = [vsub(p, base) for p in pts[1:]]
        idx = linalg.lin_indep_subset(diffs)
        chart = Chart(base, [diffs[i] for i in idx])
        d = chart.dim
        coords = [chart.to_chart(p) for p in pts]
        if any(c is None for c in coords):
            raise ValueError("points do not lie in their own affine span?")
        facets = _facets_from_points(coords, d)
        verts = [pts[i] for i in _extreme_point_indices(coords)]
        eqs = _span_equalities(chart, n)
        ineqs = tuple(_push_forward(chart, f) for f in facets)
        return cls(n, eqs, ineqs, verts, True, chart)

    @classmethod
    def from_constraints(cls, ambient_dim, equalities, inequalities):
        """Polyhedron { x : eq(x) = 0, ineq(x) >= 0 }.

        Raises EmptyPolytopeError when the set is empty.  The affine span is
        recomputed: inequalities that hold with equality on the whole set
        are promoted to equalities.
        """
        eqs = [f for f in equalities]
        ineqs = [f for f in inequalities]
        # Find the affine span: start from the equality solution space and
        # promote implicit equalities.
        while True:
            chart = _chart_from_equalities(ambient_dim, eqs)
            pulled = [(chart.pull_back(f), f) for f in ineqs]
            for pf, f in pulled:
                if is_zero_vec(pf.coeffs) and pf.const < 0:
                    raise EmptyPolytopeError("inconsistent constraints")
            live = [(pf, f) for pf, f in pulled if not is_zero_vec(pf.coeffs)]
            if _strictly_feasible([pf for pf, _ in live], chart.dim) is None:
                promoted = False
                for pf, f in live:
                    if _forced_equality(pf, [q for q, _ in live]):
                        eqs.append(f)
                        ineqs = [g for g in ineqs if g is not f]
                        promoted = True
                        break
                if promoted:
                    continue
                if lp.feasible_point(
                    [tuple(-c for c in pf.coeffs) for pf, _ in live],
                    [pf.const for pf, _ in live],
                ) is None:
                    raise EmptyPolytopeError("inconsistent constraints")
            break
        live_pf = [pf for pf, _ in live]
        keep = _irredundant(live_pf)
        final = [live[i] for i in keep]
        verts_chart, bounded = _vertices_of_hrep([pf for pf, _ in final], chart.dim)
        verts = [chart.to_ambient(u) for u in verts_chart]
        eq_canon = _span_equalities(chart, ambient_dim)
        ineq_canon = tuple(_push_forward(chart, pf) for pf, _ in final)
        return cls(ambient_dim, eq_canon, ineq_canon, verts, bounded, chart)

    # -- basic queries ------------------------------------------------------

    @property
    def dim(self):
        return self._chart.dim

    def chart(self) -> Chart:
        return self._chart

    def affine_span(self):
        """(base point, basis of the translation space)."""
        return self._chart.base, self._chart.directions

    def contains(self, x) -> bool:
        u = self._chart.to_chart(x)
        if u is None:
            return False
        x = as_vec(x)
        return all(f(x) >= 0 for f in self.inequalities)

    def contains_polytope(self, other: "Polytope") -> bool:
        if not other.bounded:
            raise ValueError("containment test expects a bounded polytope")
        return all(self.contains(v) for v in other.vertices)

    def interior_point(self):
        """Some relative-interior point (vertex average for bounded P)."""
        if self.bounded:
            n = len(self.vertices)
            acc = (Fraction(0),) * self.ambient_dim
            for v in self.vertices:
                acc = vadd(acc, v)
            return smul(Fraction(1, n), acc)
        pulled = [self._chart.pull_back(f) for f in self.inequalities]
        u = _strictly_feasible(pulled, self._chart.dim)
        if u is None:
            raise EmptyPolytopeError("no interior point")
        return self._chart.to_ambient(u)

    def __eq__(self, other):
        return (
            isinstance(other, Polytope)
            and self.ambient_dim == other.ambient_dim
            and self.bounded
            and other.bounded
            and self.vertices == other.vertices
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.vertices))

    def __repr__(self):
        kind = "polytope" if self.bounded else "polyhedron"
        return f"<{kind} dim={self.dim} vertices={len(self.vertices)}>"

    # -- geometry -----------------------------------------------------------

    def tangent_cone(self, x) -> "Cone":
        """R>=0 (P - x) for x in P; P must be bounded."""
        if not self.bounded:
            raise ValueError("tangent cone only for bounded polytopes")
        if not self.contains(x):
            raise ValueError("point not in polytope")
        x = as_vec(x)
        gens = []
        for v in self.vertices:
            d = vsub(v, x)
            if not is_zero_vec(d):
                gens.append(d)
        active = [f for f in self.inequalities if f(x) == 0]
        normals = [f.coeffs for f in active]
        span = self._chart.directions
        cone = Cone(self.ambient_dim, gens, normals, span)
        # Cross-check the two descriptions against each other.
        rebuilt = Cone.from_generators(self.ambient_dim, gens)
        if not cone_equal(cone, rebuilt):
            raise AssertionError("tangent cone descriptions disagree")
        return cone

    def faces(self):
        """All nonempty faces of a bounded polytope, as vertex tuples.

        Includes the vertices and the polytope itself; sorted by dimension
        then lexicographically, so the output is deterministic.
        """
        if not self.bounded:
            raise ValueError("face enumeration only for bounded polytopes")
        facets = self.inequalities
        found = {}
        for r in range(len(facets) + 1):
            for active in itertools.combinations(range(len(facets)), r):
                vs = tuple(
                    v for v in self.vertices if all(facets[i](v) == 0 for i in active)
                )
                if vs and vs not in found:
                    found[vs] = True
        faces = sorted(found, key=lambda vs: (_face_dim(vs), vs))
        return faces

    def edges(self):
        """Vertex pairs spanning the 1-dimensional faces."""
        return [f for f in self.faces() if len(f) >= 2 and _face_dim(f) == 1]


def _face_dim(vertex_tuple):
    base = vertex_tuple[0]
    diffs = [vsub(v, base) for v in vertex_tuple[1:]]
    if not diffs:
        return 0
    return linalg.rank(tuple(diffs))


def hull(points) -> Polytope:
    return Polytope.from_vertices(points)


def affine_span(p: Polytope):
    return p.affine_span()


def tangent_cone(p: Polytope, x) -> "Cone":
    return p.tangent_cone(x)


def meets_every_wall(p: Polytope, functionals) -> bool:
    """True if P touches the zero set of every given functional."""
    chart = p.chart()
    pulled_ineq = [chart.pull_back(f) for f in p.inequalities]
    a_ub = [tuple(-c for c in f.coeffs) for f in pulled_ineq]
    b_ub = [f.const for f in pulled_ineq]
    for wall in functionals:
        w = chart.pull_back(wall)
        if lp.feasible_point(a_ub, b_ub, [w.coeffs], [-w.const]) is None:
            return False
    return True


# ---------------------------------------------------------------------------
# Cones
# ---------------------------------------------------------------------------


class Cone:
    """Rational polyhedral cone with apex 0, kept in both descriptions.

    The cone is { v in span : n . v >= 0 for all normals n }; generators
    and facet normals are cross-checked at construction.  Normals act on
    coefficient vectors by the plain dot product (metric free).
    """

    __slots__ = ("ambient_dim", "generators", "normals", "span")

    def __init__(self, ambient_dim, generators, normals, span=None):
        self.ambient_dim = ambient_dim
        gens = [as_vec(g) for g in generators]
        gens = [g for g in gens if not is_zero_vec(g)]
        self.generators = tuple(gens)
        if span is None:
            span = tuple(gens)
        self.span = tuple(as_vec(s) for s in span)
        self.normals = tuple(as_vec(n) for n in normals)
        for g in self.generators:
            if not self._in_halfspaces(g):
                raise ValueError("generator violates a facet normal")

    @classmethod
    def from_generators(cls, ambient_dim, generators):
        gens = [as_vec(g) for g in generators if not is_zero_vec(as_vec(g))]
        span_idx = linalg.lin_indep_subset(gens)
        span = [gens[i] for i in span_idx]
        normals = _cone_normals(gens, span)
        return cls(ambient_dim, gens, normals, span)

    def _in_span(self, v):
        if not self.span:
            return is_zero_vec(v)
        return linalg.solve(linalg.transpose(self.span), as_vec(v)) is not None

    def _in_halfspaces(self, v):
        return all(dot(n, v) >= 0 for n in self.normals)

    def contains(self, v) -> bool:
        v = as_vec(v)
        return self._in_span(v) and self._in_halfspaces(v)

    @property
    def dim(self):
        if not self.span:
            return 0
        return linalg.rank(self.span)

    def is_pointed(self) -> bool:
        """No line: v and -v in the cone imply v = 0."""
        if not self.generators:
            return True
        rows = [n for n in self.normals]
        if not rows:
            return self.dim == 0
        lineality = linalg.nullspace(tuple(rows))
        for v in lineality:
            if self._in_span(v):
                return False
        return True

    def extreme_rays(self):
        """Primitive-direction representatives of the extreme rays (sorted)."""
        if not self.generators:
            return ()
        if not self.is_pointed():
            raise ValueError("extreme rays of a non-pointed cone")
        prim = []
        for g in self.generators:
            p = linalg.primitive_integer_vector(g)
            if p not in prim:
                prim.append(p)
        rays = []
        for i, g in enumerate(prim):
            others = [h for j, h in enumerate(prim) if j != i]
            if not _in_cone_of(g, others):
                rays.append(g)
        return tuple(sorted(rays))

    def __eq__(self, other):
        if not isinstance(other, Cone) or self.ambient_dim != other.ambient_dim:
            return False
        return cone_equal(self, other)

    def __hash__(self):
        return hash(self.ambient_dim)  # cones compare by containment

    def __repr__(self):
        return f"<cone dim={self.dim} gens={len(self.generators)}>"


def cone_equal(c1: Cone, c2: Cone) -> bool:
    """Mutual containment of generators against the facet descriptions."""
    return all(c2.contains(g) for g in c1.generators) and all(
        c1.contains(g) for g in c2.generators
    )


def _in_cone_of(v, generators) -> bool:
    """Is v a nonnegative combination of the generators?"""
    if is_zero_vec(v):
        return True
    if not generators:
        return False
    n = len(v)
    k = len(generators)
    # lambda >= 0, sum lambda_i g_i = v.
    a_ub = [[Fraction(-1) if j == i else Fraction(0) for j in range(k)] for i in range(k)]
    b_ub = [Fraction(0)] * k
    a_eq = [[generators[j][t] for j in range(k)] for t in range(n)]
    b_eq = [v[t] for t in range(n)]
    return lp.feasible_point(a_ub, b_ub, a_eq, b_eq) is not None


def _cone_normals(gens, span):
    """Facet normals of cone(gens) inside span(gens), as ambient covectors."""
    if not gens:
        return ()
    d = len(span)
    if d == 0:
        return ()
    # Work in span coordinates.
    spanT = linalg.transpose(span)
    coords = [linalg.solve(spanT, g) for g in gens]
    normals = []
    if d == 1:
        # Single ray or a full line.
        signs = {c[0] > 0 for c in coords if c[0] != 0}
        if len(signs) == 2:
            return ()  # full line, no facets
        sgn = 1 if True in signs else -1
        normals_chart = [(Fraction(sgn),)]
    else:
        normals_chart = []
        for subset in itertools.combinations(range(len(coords)), d - 1):
            sub = [coords[i] for i in subset]
            if linalg.rank(tuple(sub)) != d - 1:
                continue
            kern = linalg.nullspace(tuple(sub))
            if len(kern) != 1:
                continue
            nrm = kern[0]
            pos = [dot(nrm, c) for c in coords]
            if all(x >= 0 for x in pos):
                normals_chart.append(nrm)
            elif all(x <= 0 for x in pos):
                normals_chart.append(tuple(-x for x in nrm))
    # Convert chart covectors to ambient covectors: need n with n.g = nc.coord(g)
    # for all generators; since coord is linear on span, pick n = nc composed
    # with the coordinate map.  Rows of pinv: solve span^T n_amb = nc.
    out = []
    seen = set()
    for nc in normals_chart:
        n_amb = _covector_to_ambient(nc, span)
        key = tuple(linalg.primitive_integer_vector(n_amb)) if not is_zero_vec(n_amb) else None
        if key and key not in seen:
            seen.add(key)
            out.append(key)
    return tuple(out)


def _covector_to_ambient(nc, span):
    """Ambient covector restricting to the chart covector nc on span."""
    # Want n with n . s_i = nc_i for each span basis vector s_i; any solution
    # works since only the restriction to span matters.
    sol = linalg.solve(span, nc)
    if sol is None:
        raise ValueError("inconsistent covector lift")
    return sol


# ---------------------------------------------------------------------------
# internals for Polytope construction
# ---------------------------------------------------------------------------


def _span_equalities(chart: Chart, ambient_dim):
    """Functionals vanishing exactly on the chart's affine subspace."""
    if chart.dim == ambient_dim:
        return ()
    if chart.directions:
        perp = linalg.nullspace(chart.directions)
    else:
        perp = linalg.identity(ambient_dim)
    eqs = []
    for p in perp:
        const = -dot(p, chart.base)
        eqs.append(_canonical_functional(AffineFunctional(const, p)))
    return tuple(eqs)


def _push_forward(chart: Chart, pf: AffineFunctional) -> AffineFunctional:
    """Ambient functional restricting to pf on the chart (canonical form)."""
    coeffs = _covector_to_ambient(pf.coeffs, chart.directions) if chart.directions else (
        (Fraction(0),) * chart.ambient_dim
    )
    const = pf.const - dot(coeffs, chart.base)
    return _canonical_functional(AffineFunctional(const, coeffs))


def _facets_from_points(coords, d):
    """Minimal inequality system of conv(coords) in R^d (chart coords)."""
    if d == 0:
        return ()
    facets = []
    seen = set()
    if d == 1:
        lo = min(c[0] for c in coords)
        hi = max(c[0] for c in coords)
        facets.append(AffineFunctional(-lo, (Fraction(1),)))
        facets.append(AffineFunctional(hi, (Fraction(-1),)))
        return tuple(facets)
    for subset in itertools.combinations(range(len(coords)), d):
        pts = [coords[i] for i in subset]
        base = pts[0]
        diffs = [vsub(p, base) for p in pts[1:]]
        if linalg.rank(tuple(diffs)) != d - 1:
            continue
        kern = linalg.nullspace(tuple(diffs))
        if len(kern) != 1:
            continue
        nrm = kern[0]
        c0 = -dot(nrm, base)
        vals = [c0 + dot(nrm, c) for c in coords]
        if all(v >= 0 for v in vals):
            f = AffineFunctional(c0, nrm)
        elif all(v <= 0 for v in vals):
            f = AffineFunctional(-c0, tuple(-x for x in nrm))
        else:
            continue
        f = _canonical_functional(f)
        key = (f.const, f.coeffs)
        if key not in seen:
            seen.add(key)
            facets.append(f)
    return tuple(facets)


def _extreme_point_indices(coords):
    out = []
    for i, c in enumerate(coords):
        others = [coords[j] for j in range(len(coords)) if j != i and coords[j] != c]
        if not _in_hull(c, others):
            out.append(i)
    # Dedup repeated points.
    seen = set()
    uniq = []
    for i in out:
        if coords[i] not in seen:
            seen.add(coords[i])
            uniq.append(i)
    return uniq


def _in_hull(p, points) -> bool:
    if not points:
        return False
    k = len(points)
    n = len(p)
    a_ub = [[Fraction(-1) if j == i else Fraction(0) for j in range(k)] for i in range(k)]
    b_ub = [Fraction(0)] * k
    a_eq = [[points[j][t] for j in range(k)] for t in range(n)]
    b_eq = list(p)
    a_eq.append([Fraction(1)] * k)
    b_eq.append(Fraction(1))
    return lp.feasible_point(a_ub, b_ub, a_eq, b_eq) is not None


def _chart_from_equalities(ambient_dim, eqs) -> Chart:
    if not eqs:
        return Chart((Fraction(0),) * ambient_dim, linalg.identity(ambient_dim))
    rows = tuple(f.coeffs for f in eqs)
    rhs = tuple(-f.const for f in eqs)
    base = linalg.solve(rows, rhs)
    if base is None:
        raise EmptyPolytopeError("inconsistent equalities")
    dirs = linalg.nullspace(rows)
    return Chart(base, dirs)


def _strictly_feasible(pulled, dim):
    """A point with f > 0 for every functional, or None.

    Solved as: maximize t subject to f_i(u) >= t, t <= 1.
    """
    if not pulled:
        return (Fraction(0),) * dim
    a_ub = []
    b_ub = []
    for f in pulled:
        a_ub.append(tuple(-c for c in f.coeffs) + (Fraction(1),))
        b_ub.append(f.const)
    a_ub.append((Fraction(0),) * dim + (Fraction(1),))
    b_ub.append(Fraction(1))
    obj = (Fraction(0),) * dim + (Fraction(1),)
    status, x, val = lp.lp(obj, a_ub, b_ub)
    if status != lp.OPTIMAL or val <= 0:
        return None
    return x[:dim]


def _forced_equality(pf, all_pf) -> bool:
    """Does pf vanish on the whole feasible set of { f >= 0 }?"""
    a_ub = [tuple(-c for c in f.coeffs) for f in all_pf]
    b_ub = [f.const for f in all_pf]
    status, _, val = lp.lp(pf.coeffs, a_ub, b_ub)
    if status == lp.INFEASIBLE:
        return False
    return status == lp.OPTIMAL and val == -pf.const


def _irredundant(pulled):
    """Indices of a minimal sub-system with the same feasible set."""
    keep = list(range(len(pulled)))
    # Dedup identical functionals first.
    seen = {}
    for i, f in enumerate(pulled):
        key = (f.const, f.coeffs)
        if key in seen:
            keep.remove(i)
        else:
            seen[key] = i
    changed = True
    while changed:
        changed = False
        for i in list(keep):
            others = [pulled[j] for j in keep if j != i]
            a_ub = [tuple(-c for c in f.coeffs) for f in others]
            b_ub = [f.const for f in others]
            status, _, val = lp.lp(tuple(-c for c in pulled[i].coeffs), a_ub, b_ub)
            # redundant iff min of pulled[i] over the others is >= -const,
            # i.e. max of -linear part is <= const.
            if status == lp.OPTIMAL and val <= pulled[i].const:
                keep.remove(i)
                changed = True
                break
    return keep


def _vertices_of_hrep(pulled, dim):
    """(vertices in chart coords, bounded?) of { u : f_i(u) >= 0 }."""
    a_ub = [tuple(-c for c in f.coeffs) for f in pulled]
    b_ub = [f.const for f in pulled]
    bounded = True
    for j in range(dim):
        obj = tuple(Fraction(1 if t == j else 0) for t in range(dim))
        if not lp.is_bounded_above(obj, a_ub, b_ub):
            bounded = False
            break
        if not lp.is_bounded_above(tuple(-x for x in obj), a_ub, b_ub):
            bounded = False
            break
    verts = []
    if dim == 0:
        return [()], True
    for subset in itertools.combinations(range(len(pulled)), dim):
        rows = tuple(pulled[i].coeffs for i in subset)
        if linalg.rank(rows) != dim:
            continue
        rhs = tuple(-pulled[i].const for i in subset)
        u = linalg.solve(rows, rhs)
        if u is None:
            continue
        if all(f(u) >= 0 for f in pulled) and u not in verts:
            verts.append(u)
    return sorted(verts), bounded
