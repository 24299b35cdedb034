"""Stalk-level computations for the component-group and kernel sheaves.

For an adjoint-type lattice and an irreducible infinite root system with
labels a_1..a_n, the component group of the local fixed-point subgroup at a
point x with vanishing set I is cyclic of order d_I = gcd{a_j : j not in I};
in general it is the lattice quotient (Z Phi_x)^vee / (Lambda^vee +
(R Phi_x)^perp).  The kernel stalk is Lambda^vee cut to the orthogonal
complement of the local roots, and the two are linked by an exact sequence
0 -> K_x -> Lambda^vee -> Z^{I_x} -> C_x -> 0 which is verified here by
explicit lattice computations, component by component.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import linalg, lp
from .classify import IntegralRootSystem
from .lattices import (
    AbelianGroupPresentation,
    Lattice,
    dual_lattice,
    orthogonal_complement_basis,
    orthogonal_project,
    quotient,
)
from .linalg import dot
from .roots import AffineRootSystem, FiniteSubsystem, local_subsystem


class NotAdjoint(ValueError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"lattice is not of adjoint type; witness {witness}")


def adjoint_decompose(ir: IntegralRootSystem):
    """Split Lambda = Z Phi_bar (+) Lambda^W, or raise NotAdjoint.

    Lambda^W is the W-fixed part, the piece of Lambda in the orthogonal
    complement of the gradient span.  The decomposition is the gate for the
    stalk operations below and the reduction step for commensurable
    lattices.
    """
    sys, lat = ir.sys, ir.lattice
    root_lat = sys.root_lattice()
    perp = orthogonal_complement_basis(sys.gradient_roots(), sys.ip, sys.ambient_dim)
    fixed_part = lat.intersect_subspace(perp)
    total = root_lat.sum(fixed_part)
    if total != lat:
        witness = next(b for b in lat.basis() if not total.contains(b))
        raise NotAdjoint(witness)
    return root_lat, fixed_part


def adjoint_type_lattice(sys: AffineRootSystem) -> Lattice:
    """The adjoint lattice Z Phi_bar (no W-fixed part added)."""
    return sys.root_lattice()


def d_I(labels, subset) -> int:
    """gcd of the labels outside the subset; the subset must be proper."""
    rest = [a for j, a in enumerate(labels) if j not in set(subset)]
    if not rest:
        raise ValueError("subset must be proper (point would be outside the alcove)")
    g = 0
    for a in rest:
        g = gcd(g, a)
    return g


def component_group_adjoint(sys: AffineRootSystem, subset) -> AbelianGroupPresentation:
    """Z/d_I for an irreducible infinite system; trivial for finite type."""
    comps = sys.components()
    if len(comps) != 1:
        raise ValueError("component_group_adjoint expects an irreducible system")
    if not sys.component_is_affine(comps[0]):
        return AbelianGroupPresentation([])
    labels = sys.labels()
    return AbelianGroupPresentation([d_I(labels, subset)])


def component_group_general(sub: FiniteSubsystem, lat: Lattice) -> AbelianGroupPresentation:
    """pi_0 of the fixed-point group: (Z Phi_x)^vee / (Lambda^vee + perp).

    Computed inside the span of Phi_x: orthogonally project Lambda^vee
    there (killing the perp summand) and quotient by the coweight lattice.
    """
    ip = sub.ip
    grads = [f.gradient(ip) for f in sub.roots]
    if not grads:
        return AbelianGroupPresentation([])
    n = len(grads[0])
    root_lat = Lattice(n, grads)
    coweight = dual_lattice(root_lat, ip)
    lam_vee = dual_lattice(lat, ip)
    span = root_lat.basis()
    projected = Lattice(n, [orthogonal_project(v, span, ip) for v in lam_vee.basis()])
    return quotient(projected, coweight)


def kernel_stalk(sub: FiniteSubsystem, lat: Lattice) -> Lattice:
    """Lambda^vee intersected with the orthogonal complement of Phi_x."""
    ip = sub.ip
    lam_vee = dual_lattice(lat, ip)
    grads = [f.gradient(ip) for f in sub.roots]
    if not grads:
        return lam_vee
    n = lat.ambient_dim
    perp = orthogonal_complement_basis(grads, ip, n)
    return lam_vee.intersect_subspace(perp)


@dataclass
class StalkComponentReport:
    component: tuple
    vanishing: tuple
    is_affine: bool
    d: int | None
    kernel_ok: bool
    image_ok: bool
    surjective: bool

    @property
    def exact(self):
        return self.kernel_ok and self.image_ok and self.surjective


@dataclass
class StalkSequenceReport:
    point: tuple
    components: tuple

    @property
    def exact(self):
        return all(c.exact for c in self.components)

    def first_failure(self):
        for c in self.components:
            if not c.kernel_ok:
                return (c.component, "kernel")
            if not c.image_ok:
                return (c.component, "image")
            if not c.surjective:
                return (c.component, "surjectivity")
        return None


def stalk_sequence_check(x, ir: IntegralRootSystem) -> StalkSequenceReport:
    """Verify 0 -> K_x -> Lambda^vee -> Z^{I_x} -> C_x -> 0 at an alcove point.

    Requires an adjoint-type lattice; reducible systems are handled one
    irreducible factor at a time.  A failure in the report indicates an
    implementation bug, not a property of the input: exactness is a
    theorem.
    """
    adjoint_decompose(ir)  # gate
    sys, lat = ir.sys, ir.lattice
    ip = sys.ip
    lam_vee = dual_lattice(lat, ip)
    vee_basis = lam_vee.basis()
    vals = [f(x) for f in sys.simple_roots]
    if any(v < 0 for v in vals):
        raise ValueError("point is outside the alcove")
    reports = []
    for comp in sys.components():
        is_affine = sys.component_is_affine(comp)
        vanishing = tuple(i for i in comp if vals[i] == 0)
        idx = list(vanishing)
        grads = [sys.simple_roots[i].gradient(ip) for i in idx]
        # rho: Lambda^vee -> Z^{I}, v |-> (<alpha_i, v>).
        rho_rows = [
            tuple(ip.pairing(g, v) for g in grads) for v in vee_basis
        ]
        for row in rho_rows:
            if any(c.denominator != 1 for c in row):
                raise AssertionError("rho matrix is not integral")
        image = Lattice(len(idx), rho_rows) if idx else Lattice.zero(0)
        # Kernel of rho versus the kernel stalk of this component.
        comp_sub_roots = [sys.simple_roots[i] for i in idx]
        from .roots import _functional_closure

        closure = _functional_closure(comp_sub_roots, ip) if comp_sub_roots else ()
        sub = FiniteSubsystem(x, closure, comp_sub_roots, idx, ip)
        want_kernel = kernel_stalk(sub, lat)
        if idx:
            kernel_rows = [
                [int(ip.pairing(g, v)) for v in vee_basis] for g in grads
            ]
            kern = linalg.integer_kernel(kernel_rows)
            got_kernel = Lattice(
                lat.ambient_dim,
                [
                    _combine(vee_basis, k) for k in kern
                ],
            )
        else:
            got_kernel = lam_vee
        kernel_ok = got_kernel == want_kernel
        if is_affine:
            labels = sys._component_labels(comp)
            pos = {i: t for t, i in enumerate(comp)}
            subset = tuple(pos[i] for i in idx)
            d = d_I(labels, subset)
            a_sub = [labels[pos[i]] for i in idx]
            # ker psi = { y : sum a_i y_i = 0 mod d }.
            if idx:
                rows = [list(a_sub) + [d]]
                kern = linalg.integer_kernel(rows)
                ker_psi = Lattice(len(idx), [k[: len(idx)] for k in kern])
                image_ok = image == ker_psi
            else:
                image_ok = True
            g = 0
            for a in a_sub:
                g = gcd(g, a)
            surjective = (gcd(g, d) == 1) if d > 1 else True
            reports.append(
                StalkComponentReport(comp, vanishing, True, d, kernel_ok, image_ok, surjective)
            )
        else:
            # Finite factor: C = 0, so exactness means rho is onto Z^I.
            image_ok = (not idx) or image == Lattice.standard(len(idx))
            reports.append(
                StalkComponentReport(comp, vanishing, False, None, kernel_ok, image_ok, True)
            )
    return StalkSequenceReport(tuple(x), tuple(reports))


def _combine(basis, coeffs):
    n = len(basis[0])
    out = [Fraction(0)] * n
    for c, b in zip(coeffs, basis, strict=True):
        if c:
            for t in range(n):
                out[t] += c * b[t]
    return tuple(out)


def restriction_compatible(x, y, ir: IntegralRootSystem) -> bool:
    """Restriction square between nearby points: d_{I_y} | a_i off I_y.

    For y in a small neighbourhood of x (so I_y subset I_x), the reduction
    Z/d_{I_x} -> Z/d_{I_y}, 1 |-> 1, commutes with the two stalk maps iff
    d_{I_y} divides every label indexed by I_x minus I_y.
    """
    sys = ir.sys
    vals_x = [f(x) for f in sys.simple_roots]
    vals_y = [f(y) for f in sys.simple_roots]
    ok = True
    for comp in sys.components():
        if not sys.component_is_affine(comp):
            continue
        labels = sys._component_labels(comp)
        pos = {i: t for t, i in enumerate(comp)}
        ix = [pos[i] for i in comp if vals_x[i] == 0]
        iy = [pos[i] for i in comp if vals_y[i] == 0]
        if not set(iy) <= set(ix):
            raise ValueError("expected I_y inside I_x (y near x)")
        if len(ix) == len(labels) or len(iy) == len(labels):
            raise ValueError("vanishing set must be proper")
        dy = d_I(labels, iy)
        dx = d_I(labels, ix)
        if dx % dy != 0:
            ok = False
        for t in set(ix) - set(iy):
            if labels[t] % dy != 0:
                ok = False
    return ok


@dataclass(frozen=True)
class PrimaryComponentEntry:
    prime: int
    e_max: int
    group: AbelianGroupPresentation
    witness_index: int


def h0_component_data(p, ir: IntegralRootSystem):
    """Primary components of H^0 of the component-group sheaf on P.

    For each prime q dividing some label: e_max is the largest e such that
    the face { alpha_i = 0 whenever q^e does not divide a_i } still meets
    P; the q-primary part of H^0 is Z/q^{e_max}.  Also reports a witness
    simple root index i0 with q not dividing a_{i0} (the surjectivity
    witness).  Requires an adjoint-type lattice and an irreducible infinite
    system.
    """
    adjoint_decompose(ir)
    sys = ir.sys
    comps = sys.components()
    if len(comps) != 1 or not sys.component_is_affine(comps[0]):
        raise ValueError("h0_component_data expects an irreducible infinite system")
    labels = sys.labels()
    primes = sorted({f for a in labels for f in _prime_factors(a)})
    chart = p.chart()
    pulled = [chart.pull_back(f) for f in p.inequalities]
    a_ub = [tuple(-c for c in f.coeffs) for f in pulled]
    b_ub = [f.const for f in pulled]
    out = []
    for q in primes:
        e = 0
        while True:
            walls = [i for i, a in enumerate(labels) if a % (q ** (e + 1)) != 0]
            if len(walls) == len(labels):
                # All simple roots would vanish: empty for affine systems.
                feasible = False
            else:
                a_eq = []
                b_eq = []
                for i in walls:
                    w = chart.pull_back(sys.simple_roots[i])
                    a_eq.append(w.coeffs)
                    b_eq.append(-w.const)
                feasible = lp.feasible_point(a_ub, b_ub, a_eq, b_eq) is not None
            if feasible:
                e += 1
            else:
                break
        if e >= 1:
            witness = next(i for i, a in enumerate(labels) if a % q != 0)
            out.append(
                PrimaryComponentEntry(q, e, AbelianGroupPresentation([q ** e]), witness)
            )
    return tuple(out)


def _prime_factors(n):
    n = int(n)
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out
