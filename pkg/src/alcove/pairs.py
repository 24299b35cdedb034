"""Spherical pairs: momentum polytope + lattice, checked vertex by vertex.

A pair is (ambient affine root system, polytope P inside its alcove,
lattice inside the translation space of P's affine span).  At every vertex
the tangent-cone weight monoid is computed and matched against catalog
entries; a match must identify the entry's root datum with the vertex
centralizer's (all diagram symmetries are tried, factors acting trivially
are allowed) and carry the entry's monoid exactly onto the vertex monoid.
The identification is pinned down by the extreme rays of the two cones.

"Unverified" is not "not spherical": absence from a finite catalog proves
nothing, and the report vocabulary keeps that asymmetry.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .cartan_classify import cartan_isomorphic
from .classify import IntegralRootSystem, LocalRootAssignment, assemble_global
from .functionals import AffineFunctional
from .lattices import InnerProduct, Lattice, dual_lattice
from .linalg import as_vec, dot, is_zero_vec
from .models import LocalModelEntry
from .monoids import WeightMonoid, hilbert_basis, monoid_equal, primitive_in_lattice
from .polytopes import Cone, Polytope
from .roots import AffineRootSystem, FiniteSubsystem, local_subsystem
from .roots import _functional_closure


class PairInvalid(ValueError):
    def __init__(self, reason):
        self.reason = reason
        super().__init__(reason)


@dataclass
class IntegralPair:
    ambient: AffineRootSystem
    polytope: Polytope
    lattice: Lattice
    name: str = ""
    notes: str = ""

    def validate(self):
        p = self.polytope
        if not p.bounded:
            raise PairInvalid("P is unbounded")
        alc = self.ambient.alcove()
        for v in p.vertices:
            for wall in self.ambient.simple_roots:
                if wall(v) < 0:
                    from .functionals import format_functional

                    raise PairInvalid(
                        f"P is not inside the alcove: vertex {v} violates "
                        f"{format_functional(wall)}"
                    )
            if alc.chart().to_chart(v) is None:
                raise PairInvalid("P leaves the carrier subspace of the alcove")
        base, dirs = p.affine_span()
        span_rank = len(dirs)
        if self.lattice.rank != span_rank:
            raise PairInvalid("lattice rank does not match the affine span of P")
        for b in self.lattice.basis():
            if dirs:
                if linalg.solve(linalg.transpose(dirs), b) is None:
                    raise PairInvalid("lattice leaves the translation space of P")
            elif not is_zero_vec(b):
                raise PairInvalid("lattice leaves the translation space of P")
        lam_tau = self.ambient.weight_lattice()
        for b in self.lattice.basis():
            if not lam_tau.contains(b):
                raise PairInvalid("lattice is not compatible: it leaves the character lattice")
        return self


def weight_monoid_at(pair: IntegralPair, x, hilbert=True) -> WeightMonoid:
    """Tangent-cone monoid of the pair at a vertex of P."""
    x = as_vec(x)
    if x not in pair.polytope.vertices:
        raise ValueError("point is not a vertex of P")
    cone = pair.polytope.tangent_cone(x)
    hb = hilbert_basis(cone, pair.lattice) if hilbert else None
    return WeightMonoid(cone, pair.lattice, hb)


# ---------------------------------------------------------------------------
# entry matching
# ---------------------------------------------------------------------------


def _components_of(funcs, ip):
    n = len(funcs)
    adj = [[funcs[i].cartan_with(funcs[j], ip) != 0 for j in range(n)] for i in range(n)]
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
    return comps


def _cartan_submatrix(funcs, ip, idx):
    return tuple(
        tuple(int(funcs[i].cartan_with(funcs[j], ip)) for j in idx) for i in idx
    )


def _cartan_isomorphisms(c1, c2):
    """All index bijections carrying Cartan matrix c1 onto c2."""
    n = len(c1)
    if len(c2) != n:
        return []
    rows1 = [tuple(sorted(r)) for r in c1]
    rows2 = [tuple(sorted(r)) for r in c2]
    out = []

    def backtrack(mapping, used):
        i = len(mapping)
        if i == n:
            out.append(tuple(mapping))
            return
        for j in range(n):
            if j in used or rows1[i] != rows2[j]:
                continue
            ok = True
            for a, b in enumerate(mapping):
                if c1[i][a] != c2[j][b] or c1[a][i] != c2[b][j]:
                    ok = False
                    break
            if ok:
                backtrack(mapping + [j], used | {j})

    backtrack([], set())
    return out


@dataclass
class Alignment:
    """A successful identification of a catalog entry with a vertex."""

    entry: LocalModelEntry
    sigma: tuple  # entry simple index -> index into the vertex subsystem simples
    psi_rays: tuple  # (entry ray, image) pairs, for the record
    mapped_monoid: WeightMonoid


def _span_solve(basis, v):
    if not basis:
        return () if is_zero_vec(v) else None
    return linalg.solve(linalg.transpose(basis), as_vec(v))


def match_entry(
    entry: LocalModelEntry,
    sub: FiniteSubsystem,
    monoid: WeightMonoid,
    ip: InnerProduct,
):
    """Try to align a catalog entry with a vertex; None if impossible."""
    lam = monoid.lattice
    ent_lat = entry.lattice()
    if lam.rank != ent_lat.rank:
        return None
    if lam.rank == 0:
        if entry.simple_roots:
            return None
        mapped = WeightMonoid(Cone(lam.ambient_dim, (), ()), lam)
        return Alignment(entry, (), (), mapped)
    ent_funcs = entry.functionals()
    ent_ip = entry.ip()
    vtx_funcs = sub.simple_roots
    ent_comps = _components_of(ent_funcs, ent_ip)
    vtx_comps = _components_of(vtx_funcs, ip)
    if len(ent_comps) > len(vtx_comps):
        return None
    ent_mats = [_cartan_submatrix(ent_funcs, ent_ip, c) for c in ent_comps]
    vtx_mats = [_cartan_submatrix(vtx_funcs, ip, c) for c in vtx_comps]
    vtx_cors = [f.coroot(ip) for f in vtx_funcs]
    ent_cors = [f.coroot(ent_ip) for f in ent_funcs]
    ent_grads = [f.gradient(ent_ip) for f in ent_funcs]
    vtx_grads = [f.gradient(ip) for f in vtx_funcs]

    # Extreme rays with their primitive lattice generators.
    try:
        vtx_rays = [primitive_in_lattice(r, lam) for r in monoid.cone.extreme_rays()]
        ent_cone = Cone.from_generators(entry.dim, entry.cone_generators)
        ent_rays = [primitive_in_lattice(r, ent_lat) for r in ent_cone.extreme_rays()]
    except ValueError:
        return None
    if len(vtx_rays) != len(ent_rays):
        return None

    def rho_vertex(v, sigma):
        return tuple(ip.pairing(v, vtx_cors[s]) for s in sigma)

    def rho_entry(v, k):
        return ent_ip.pairing(as_vec(v), ent_cors[k])

    for comp_images in itertools.permutations(range(len(vtx_comps)), len(ent_comps)):
        if any(
            len(ent_comps[a]) != len(vtx_comps[b]) for a, b in enumerate(comp_images)
        ):
            continue
        per_comp_isos = []
        feasible = True
        for a, b in enumerate(comp_images):
            isos = _cartan_isomorphisms(ent_mats[a], vtx_mats[b])
            if not isos:
                feasible = False
                break
            per_comp_isos.append(isos)
        if not feasible:
            continue
        leftover = [
            i
            for t, comp in enumerate(vtx_comps)
            if t not in comp_images
            for i in comp
        ]
        # Leftover factors must not see the weights at all.
        if any(
            ip.pairing(bv, vtx_cors[i]) != 0
            for i in leftover
            for bv in lam.basis()
        ):
            continue
        for iso_choice in itertools.product(*per_comp_isos):
            sigma = [None] * len(ent_funcs)
            for a, b in enumerate(comp_images):
                for local_i, local_j in enumerate(iso_choice[a]):
                    sigma[ent_comps[a][local_i]] = vtx_comps[b][local_j]
            sigma = tuple(sigma)
            align = _try_rays(
                entry, sub, monoid, ip, ent_ip, sigma,
                ent_rays, vtx_rays, ent_cors, vtx_cors, ent_grads, vtx_grads, ent_lat,
            )
            if align is not None:
                return align
    return None


def _try_rays(
    entry, sub, monoid, ip, ent_ip, sigma,
    ent_rays, vtx_rays, ent_cors, vtx_cors, ent_grads, vtx_grads, ent_lat,
):
    lam = monoid.lattice
    k = len(sigma)
    rho_e = [
        tuple(ent_ip.pairing(as_vec(r), ent_cors[i]) for i in range(k))
        for r in ent_rays
    ]
    rho_v = [
        tuple(ip.pairing(as_vec(r), vtx_cors[sigma[i]]) for i in range(k))
        for r in vtx_rays
    ]
    candidates = [
        [j for j, rv in enumerate(rho_v) if rv == re] for re in rho_e
    ]
    if any(not c for c in candidates):
        return None
    indep = linalg.lin_indep_subset([as_vec(r) for r in ent_rays])
    for assignment in itertools.product(*candidates):
        if len(set(assignment)) != len(assignment):
            continue
        basis_src = [as_vec(ent_rays[i]) for i in indep]
        basis_dst = [as_vec(vtx_rays[assignment[i]]) for i in indep]

        def psi(v):
            c = _span_solve(tuple(basis_src), as_vec(v))
            if c is None:
                return None
            acc = (Fraction(0),) * lam.ambient_dim
            for ci, t in zip(c, basis_dst):
                if ci:
                    acc = tuple(a + ci * b for a, b in zip(acc, t))
            return acc

        ok = True
        for i, r in enumerate(ent_rays):
            img = psi(r)
            if img is None or tuple(img) != tuple(as_vec(vtx_rays[assignment[i]])):
                ok = False
                break
        if not ok:
            continue
        mapped_basis = []
        for b in ent_lat.basis():
            img = psi(b)
            if img is None:
                ok = False
                break
            mapped_basis.append(img)
        if not ok:
            continue
        if Lattice(lam.ambient_dim, mapped_basis) != lam:
            continue
        # Root-datum consistency on the part of the weight span that meets
        # the entry's root span: psi must agree there with the map sending
        # entry root gradients to the vertex root gradients.
        if not _root_span_consistent(
            psi, sigma, ent_grads, vtx_grads, ent_lat
        ):
            continue
        mapped_cone = Cone.from_generators(
            lam.ambient_dim, [psi(g) for g in entry.cone_generators]
        )
        mapped = WeightMonoid(mapped_cone, Lattice(lam.ambient_dim, mapped_basis))
        if not monoid_equal(mapped, monoid):
            continue
        return Alignment(
            entry,
            sigma,
            tuple((tuple(r), tuple(as_vec(vtx_rays[assignment[i]]))) for i, r in enumerate(ent_rays)),
            mapped,
        )
    return None


def _root_span_consistent(psi, sigma, ent_grads, vtx_grads, ent_lat):
    if not ent_grads:
        return True
    lam_span = ent_lat.basis()
    if not lam_span:
        return True
    inter = _span_intersection(tuple(ent_grads), tuple(lam_span))
    for v in inter:
        c = _span_solve(tuple(ent_grads), v)
        if c is None:
            return False
        target = (Fraction(0),) * len(vtx_grads[0])
        for ci, i in zip(c, range(len(ent_grads))):
            if ci:
                g = vtx_grads[sigma[i]]
                target = tuple(a + ci * b for a, b in zip(target, g))
        img = psi(v)
        if img is None or tuple(img) != tuple(target):
            return False
    return True


def _span_intersection(basis1, basis2):
    """Basis of span(basis1) & span(basis2)."""
    if not basis1 or not basis2:
        return ()
    stacked = tuple(basis1) + tuple(basis2)
    kern = linalg.nullspace(linalg.transpose(stacked))
    out = []
    for kv in kern:
        acc = (Fraction(0),) * len(basis1[0])
        for c, v in zip(kv[: len(basis1)], basis1):
            if c:
                acc = tuple(a + c * b for a, b in zip(acc, v))
        if not is_zero_vec(acc):
            out.append(acc)
    idx = linalg.lin_indep_subset(out)
    return tuple(out[i] for i in idx)


# ---------------------------------------------------------------------------
# vertex and pair checks
# ---------------------------------------------------------------------------


@dataclass
class VertexRecord:
    vertex: tuple
    centralizer_type: str
    monoid: WeightMonoid
    status: str  # "Verified" | "Unverified"
    entry_name: str | None = None
    note: str = ""
    alignment: Alignment | None = None
    subsystem: FiniteSubsystem | None = None


@dataclass
class VerificationReport:
    pair_name: str
    overall: str  # "Spherical" | "Inconclusive"
    records: tuple
    rank: int
    lattice_dual: Lattice
    phi_m: IntegralRootSystem | None = None

    @property
    def spherical(self):
        return self.overall == "Spherical"


def _no_model_note(sub: FiniteSubsystem, monoid: WeightMonoid, ip) -> str:
    """Known gaps: monoids that are provably not weight monoids of any
    smooth model (the rank-one Z>=0(4 alpha) case)."""
    if monoid.lattice.rank != 1 or len(sub.simple_roots) != 1:
        return ""
    gen = monoid.lattice.basis()[0]
    pairing = ip.pairing(gen, sub.simple_roots[0].coroot(ip))
    if abs(pairing) == 8:
        return "Z>=0(4*alpha) is not the weight monoid of any smooth model"
    return ""


def check_vertex(pair: IntegralPair, x, catalog) -> VertexRecord:
    """Match one vertex of P against the catalog (first hit wins)."""
    x = as_vec(x)
    sub = local_subsystem(pair.ambient, x)
    ip = pair.ambient.ip
    monoid = weight_monoid_at(pair, x)
    for entry in catalog:
        align = match_entry(entry, sub, monoid, ip)
        if align is not None:
            return VertexRecord(
                tuple(x), sub.type_string(), monoid, "Verified",
                entry.name, "", align, sub,
            )
    return VertexRecord(
        tuple(x), sub.type_string(), monoid, "Unverified",
        None, _no_model_note(sub, monoid, ip), None, sub,
    )


def check_pair(pair: IntegralPair, catalog) -> VerificationReport:
    """Check every vertex; Spherical only if all vertices verify.

    When every matched entry carries spherical-root data, the induced local
    root systems are assembled into the global system Phi_M and attached.
    """
    pair.validate()
    records = []
    for v in pair.polytope.vertices:
        records.append(check_vertex(pair, v, catalog))
    overall = "Spherical" if all(r.status == "Verified" for r in records) else "Inconclusive"
    rank = pair.polytope.dim
    lam_dual = dual_lattice(pair.lattice, pair.ambient.ip)
    phi_m = None
    if overall == "Spherical" and all(
        r.alignment.entry.spherical_roots is not None for r in records
    ):
        assignments = {}
        ip = pair.ambient.ip
        for r in records:
            walls = [r.subsystem.simple_roots[i] for i in r.alignment.sigma]
            simples = []
            for combo in r.alignment.entry.spherical_roots:
                f = None
                for c, wall in zip(combo, walls):
                    if c:
                        term = wall.scale(c)
                        f = term if f is None else f + term
                simples.append(f)
            closure = _functional_closure(simples, ip) if simples else ()
            assignments[tuple(r.vertex)] = FiniteSubsystem(
                r.vertex, closure, simples, tuple(range(len(simples))), ip
            )
        phi_m = assemble_global(
            pair.polytope, LocalRootAssignment(assignments), pair.lattice, pair.ambient.ip
        )
    return VerificationReport(
        pair.name, overall, tuple(records), rank, lam_dual, phi_m
    )
