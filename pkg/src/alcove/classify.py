"""Classification combinatorics: primitive roots, ambiguity, root systems
for a fixed Weyl group and lattice, simple-system validation, and global
assembly of local root data.

The key objects: an integral root system is a pair (affine root system,
weight lattice).  For each simple reflection s there is a unique primitive
functional, nonnegative on the alcove, whose gradient generates the
(-1)-eigenlattice of s in the weight lattice; the root of s in any root
system with this Weyl group and lattice is that functional or its double,
and the doubling is possible exactly at the ambiguous reflections.  Subsets
of ambiguous reflections classify the root systems (a bijection, checked by
round-trip), and the possible "all primitive" systems form a short table.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from . import linalg
from .functionals import AffineFunctional
from .lattices import InnerProduct, Lattice
from .linalg import dot, is_zero_vec
from .polytopes import Chart, Polytope
from .roots import AffineRootSystem, FiniteSubsystem, is_weight_lattice, local_subsystem


class SimpleSystemError(ValueError):
    pass


class AngleViolation(SimpleSystemError):
    def __init__(self, i, j, msg=""):
        self.indices = (i, j)
        super().__init__(msg or f"invalid angle between functionals {i} and {j}")


class NonCrystallographicAngle(AngleViolation):
    """Angle pi - pi/l with l in {5, 7, 8, ...}: no weight lattice can exist."""


class NoInteriorPoint(SimpleSystemError):
    pass


class Redundancy(SimpleSystemError):
    def __init__(self, i):
        self.index = i
        super().__init__(f"functional {i} does not define a facet")


class IncoherentAssignment(ValueError):
    pass


class WallNotMet(ValueError):
    pass


class ValidationFailure(ValueError):
    def __init__(self, cause):
        self.cause = cause
        super().__init__(f"simple system validation failed: {cause}")


class IntegralRootSystem:
    """Pair (Phi, Lambda) with Lambda a weight lattice for Phi."""

    def __init__(self, sys: AffineRootSystem, lattice: Lattice):
        if not is_weight_lattice(lattice, sys):
            raise ValueError("lattice is not a weight lattice for the root system")
        self.sys = sys
        self.lattice = lattice

    def __repr__(self):
        return f"<IntegralRootSystem {self.sys.type_string()} rank-{self.lattice.rank} lattice>"


# ---------------------------------------------------------------------------
# primitive functionals and ambiguity
# ---------------------------------------------------------------------------


def primitive_functional(index: int, ir: IntegralRootSystem) -> AffineFunctional:
    """alpha_s^prim for the s-th simple reflection of ir's alcove.

    Vanishes on the wall of the s-th simple root, is nonnegative on the
    alcove, and its gradient generates {chi in Lambda : s(chi) = -chi}.
    """
    sys, lat = ir.sys, ir.lattice
    alpha = sys.simple_roots[index]
    g = alpha.gradient(sys.ip)
    line = lat.intersect_subspace([g])
    if line.rank != 1:
        raise ValueError("lattice does not meet the root line")
    gen = line.basis()[0]
    # Orient along the root.
    ratio = None
    for a, b in zip(gen, g):
        if b != 0:
            ratio = a / b
            break
    if ratio < 0:
        ratio = -ratio
    return alpha.scale(ratio)


@dataclass(frozen=True)
class AmbiguityRecord:
    index: int
    primitive: AffineFunctional
    pairing_generator: int  # <Lambda, (prim)^vee> = dZ
    ambiguous: bool


@dataclass(frozen=True)
class AmbiguityReport:
    records: tuple

    @property
    def ambiguous_indices(self):
        return tuple(r.index for r in self.records if r.ambiguous)

    def __len__(self):
        return len(self.ambiguous_indices)


def ambiguous_reflections(ir: IntegralRootSystem) -> AmbiguityReport:
    """Per-wall ambiguity data: s is ambiguous iff <Lambda, prim^vee> = 2Z."""
    sys, lat = ir.sys, ir.lattice
    ip = sys.ip
    records = []
    cartan = sys.cartan_matrix()
    for i in range(len(sys.simple_roots)):
        prim = primitive_functional(i, ir)
        coroot = prim.coroot(ip)
        d = 0
        for b in lat.basis():
            v = ip.pairing(b, coroot)
            if v.denominator != 1:
                raise AssertionError("primitive coroot pairing left Z")
            d = gcd(d, int(v))
        records.append(AmbiguityRecord(i, prim, d, d == 2))
    # Reflections joined by a simple edge are never ambiguous.
    for i, r in enumerate(records):
        if r.ambiguous:
            for j in range(len(records)):
                if j != i and cartan[i][j] == -1 and cartan[j][i] == -1:
                    raise AssertionError("simple-edge neighbour marked ambiguous")
    return AmbiguityReport(tuple(records))


def s_amb_of(ir: IntegralRootSystem) -> tuple:
    """Indices s with alpha_s = 2 alpha_s^prim in ir's own root system."""
    out = []
    for i, alpha in enumerate(ir.sys.simple_roots):
        prim = primitive_functional(i, ir)
        if alpha == prim.scale(2):
            out.append(i)
        elif alpha != prim:
            raise AssertionError("simple root is neither primitive nor its double")
    return tuple(out)


def root_systems_for(ir: IntegralRootSystem):
    """All root systems with the Weyl group and lattice of ir.

    Returns a list of IntegralRootSystem, one for each subset I of the
    ambiguous reflections (in subset enumeration order); entry I has
    alpha_s = 2 alpha_s^prim exactly for s in I.
    """
    report = ambiguous_reflections(ir)
    amb = report.ambiguous_indices
    prims = {r.index: r.primitive for r in report.records}
    out = []
    for size in range(len(amb) + 1):
        for subset in itertools.combinations(amb, size):
            simples = []
            for i in range(len(ir.sys.simple_roots)):
                f = prims[i]
                simples.append(f.scale(2) if i in subset else f)
            sys = AffineRootSystem(
                ir.sys.ambient_dim, ir.sys.ip, simples, carrier=ir.sys.carrier
            )
            out.append((subset, IntegralRootSystem(sys, ir.lattice)))
    return out


@dataclass(frozen=True)
class PhiEmptyRow:
    in_table: bool
    row: str | None
    starred: tuple
    reason: str = ""


_P2_ROWS = {
    # type pattern -> how many stars and a human tag
    "A1": "A1",
    "A1(1)": "A1(1)",
    "B2(1)": "B2(1)",
}


def phi_empty_classify(ir: IntegralRootSystem) -> PhiEmptyRow:
    """Where (if anywhere) ir sits in the table of Phi_empty systems.

    The table rows are A1, B_n, A1(1), B2(1), B_n(1) (n>=3), D_{n+1}(2),
    with the ambiguous nodes starred; systems whose own roots use a doubled
    primitive (S_amb(Phi) nonempty, e.g. A_{2n}(2)) are not of the form
    Phi_empty and are rejected.
    """
    if len(ir.sys.components()) != 1:
        raise ValueError("phi_empty_classify expects an irreducible system")
    own = s_amb_of(ir)
    if own:
        return PhiEmptyRow(False, None, (), "S_amb(Phi) is nonempty: Phi != Phi_empty")
    report = ambiguous_reflections(ir)
    amb = report.ambiguous_indices
    if not amb:
        return PhiEmptyRow(False, None, (), "no ambiguous reflections: table does not apply")
    # Prop P2(b): Lambda is spanned by the primitive gradients.
    prim_lat = Lattice(
        ir.sys.ambient_dim,
        [r.primitive.gradient(ir.sys.ip) for r in report.records],
    )
    if prim_lat != ir.lattice:
        raise AssertionError("adjointness of the lattice fails on a table row")
    t = ir.sys.type_string()
    ok = (
        t == "A1"
        or (t.startswith("B") and "(" not in t)
        or t in ("A1(1)", "B2(1)")
        or (t.startswith("B") and t.endswith("(1)"))
        or (t.startswith("D") and t.endswith("(2)"))
    )
    if not ok:
        return PhiEmptyRow(False, None, (), f"type {t} is not a table row")
    return PhiEmptyRow(True, t, amb)


# ---------------------------------------------------------------------------
# Simple-system validation (angle test + alcove construction)
# ---------------------------------------------------------------------------


def validate_simple_system(functionals, ip: InnerProduct, carrier: Chart = None) -> Polytope:
    """Check that the functionals are the simple system of their alcove.

    Checks, in order: no constant functionals; a common strict-positivity
    point exists (inside the carrier subspace if given); every functional
    defines a facet; every pair makes a crystallographic angle pi - pi/l,
    l in {2, 3, 4, 6} (4cos^2 in {0,1,2,3}), or is antiparallel (l =
    infinity).  Returns the alcove { all >= 0 } cut to the carrier.
    """
    funcs = list(functionals)
    for i, f in enumerate(funcs):
        if f.is_constant():
            raise SimpleSystemError(f"functional {i} is constant")
    if funcs:
        n = funcs[0].dim
    elif carrier is not None:
        n = carrier.ambient_dim
    else:
        raise SimpleSystemError("empty system needs an explicit carrier")
    eqs = []
    if carrier is not None and carrier.dim < n:
        perp = (
            linalg.nullspace(carrier.directions)
            if carrier.directions
            else linalg.identity(n)
        )
        for p in perp:
            eqs.append(AffineFunctional(-dot(p, carrier.base), p))

    chart = carrier if carrier is not None else Chart((Fraction(0),) * n, linalg.identity(n))
    pulled = [chart.pull_back(f) for f in funcs]
    if any(is_zero_vec(pf.coeffs) for pf in pulled):
        raise SimpleSystemError("a functional is constant on the carrier")
    from .polytopes import _strictly_feasible

    if _strictly_feasible(pulled, chart.dim) is None:
        raise NoInteriorPoint("no common strict positivity point")
    # Facet check: alpha_i = 0 with all others strictly positive.
    for i in range(len(funcs)):
        others = [pulled[j] for j in range(len(funcs)) if j != i]
        if _relative_facet_empty(pulled[i], others, chart.dim):
            raise Redundancy(i)
    # Angle checks.
    for i in range(len(funcs)):
        for j in range(i + 1, len(funcs)):
            _check_angle(funcs[i], funcs[j], ip, i, j)
    return Polytope.from_constraints(n, eqs, funcs)


def _relative_facet_empty(f, others, dim) -> bool:
    """Is { f = 0, others > 0 } empty?  (Strictness via max-t trick.)"""
    from . import lp

    a_ub = []
    b_ub = []
    for g in others:
        a_ub.append(tuple(-c for c in g.coeffs) + (Fraction(1),))
        b_ub.append(g.const)
    a_ub.append((Fraction(0),) * dim + (Fraction(1),))
    b_ub.append(Fraction(1))
    a_eq = [tuple(f.coeffs) + (Fraction(0),)]
    b_eq = [-f.const]
    obj = (Fraction(0),) * dim + (Fraction(1),)
    status, x, val = lp.lp(obj, a_ub, b_ub, a_eq, b_eq)
    return status != lp.OPTIMAL or val <= 0


def _check_angle(f, g, ip, i, j):
    gf, gg = f.gradient(ip), g.gradient(ip)
    p = ip.pairing(gf, gg)
    n2f, n2g = ip.pairing(gf, gf), ip.pairing(gg, gg)
    q = 4 * p * p / (n2f * n2g)
    if q == 4:
        if p > 0:
            raise AngleViolation(i, j, f"functionals {i}, {j} are parallel, same side")
        return  # l = infinity
    if p > 0:
        raise AngleViolation(i, j, f"acute angle between functionals {i} and {j}")
    if q not in (0, 1, 2, 3):
        raise NonCrystallographicAngle(
            i, j, f"4cos^2 = {q} between functionals {i} and {j}: not crystallographic"
        )


# ---------------------------------------------------------------------------
# Global assembly
# ---------------------------------------------------------------------------


@dataclass
class LocalRootAssignment:
    """Vertex -> finite local root system (centered at the vertex)."""

    assignments: dict  # point tuple -> FiniteSubsystem

    def vertices(self):
        return tuple(self.assignments)


def _restrict_functional(f: AffineFunctional, chart: Chart, ip: InnerProduct):
    """Functional agreeing with f on the chart, gradient inside the span."""
    from .lattices import orthogonal_project

    if chart.dim == chart.ambient_dim:
        return f
    g = f.gradient(ip)
    gp = orthogonal_project(g, chart.directions, ip) if chart.directions else (
        (Fraction(0),) * len(g)
    )
    if tuple(gp) == tuple(g):
        return f
    coeffs = linalg.mat_vec(ip.gram, gp)
    const = f(chart.base) - dot(coeffs, chart.base)
    return AffineFunctional(const, coeffs)


def assemble_global(
    p: Polytope, assign: LocalRootAssignment, lat: Lattice, ip: InnerProduct
) -> IntegralRootSystem:
    """Glue vertex-local root systems into one integral root system on the
    affine span of P.

    The union of the local simple systems, restricted to the span, must
    validate as a simple system; the result reproduces every local system,
    has P inside its alcove, and P meets every wall.
    """
    chart = p.chart()
    verts = assign.vertices()
    for v in verts:
        if not p.contains(v):
            raise IncoherentAssignment(f"assigned point {v} is not in P")
    # Axiom: every local root is one-signed on P.
    for v in verts:
        for f in assign.assignments[v].roots:
            vals = [f(w) for w in p.vertices]
            if any(x > 0 for x in vals) and any(x < 0 for x in vals):
                raise IncoherentAssignment("a local root changes sign on P")
    # Coherence along edges: Phi(x)_y = Phi(y)_x.
    for x, y in itertools.combinations(verts, 2):
        fx = {f for f in assign.assignments[x].roots if f(y) == 0}
        fy = {f for f in assign.assignments[y].roots if f(x) == 0}
        rx = {_restrict_functional(f, chart, ip) for f in fx}
        ry = {_restrict_functional(f, chart, ip) for f in fy}
        if rx != ry:
            raise IncoherentAssignment(f"local systems at {x} and {y} disagree")
    simples = []
    for v in verts:
        for f in assign.assignments[v].simple_roots:
            if any(f(w) < 0 for w in p.vertices):
                raise IncoherentAssignment("a local simple root is negative on P")
            rf = _restrict_functional(f, chart, ip)
            if rf not in simples:
                simples.append(rf)
    try:
        validate_simple_system(simples, ip, chart)
    except SimpleSystemError as e:
        raise ValidationFailure(e) from e
    sys = AffineRootSystem(p.ambient_dim, ip, simples, carrier=chart)
    out = IntegralRootSystem(sys, lat)
    # The assembled system must reproduce the assignment.
    for v in verts:
        sub = local_subsystem(sys, v)
        want = {_restrict_functional(f, chart, ip) for f in assign.assignments[v].roots}
        if set(sub.roots) != want:
            raise IncoherentAssignment(f"assembled local system at {v} differs")
    alc = sys.alcove()
    if not alc.contains_polytope(p):
        raise ValidationFailure("P is not contained in the assembled alcove")
    from .polytopes import meets_every_wall

    if not meets_every_wall(p, simples):
        raise WallNotMet("P misses a wall of the assembled alcove")
    # S_amb consistency: doubled walls downstairs match doubled walls upstairs.
    doubled_up = set()
    for i in range(len(simples)):
        prim = primitive_functional(i, out)
        if simples[i] == prim.scale(2):
            doubled_up.add(simples[i])
        elif simples[i] != prim:
            raise AssertionError("assembled simple root is neither primitive nor doubled")
    doubled_down = set()
    for v in verts:
        sub_ir = assign.assignments[v]
        for f in sub_ir.simple_roots:
            rf = _restrict_functional(f, chart, ip)
            i = simples.index(rf)
            prim = primitive_functional(i, out)
            if rf == prim.scale(2):
                doubled_down.add(rf)
    if doubled_up != doubled_down:
        raise IncoherentAssignment("ambiguity sets of the local systems do not glue")
    return out
