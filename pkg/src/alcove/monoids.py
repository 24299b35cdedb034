"""Weight monoids: tangent cone intersected with a lattice.

Equality of two monoids given this way reduces to cone equality plus
lattice equality (both canonical), which is what the vertex matching
uses.  A Hilbert basis is computed for display when the cone is simplicial
or small; it is not needed for any decision.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .lattices import Lattice
from .linalg import dot, is_zero_vec
from .polytopes import Cone, cone_equal


@dataclass(frozen=True)
class WeightMonoid:
    cone: Cone
    lattice: Lattice
    hilbert: tuple | None = None

    @property
    def rank(self):
        return self.lattice.rank

    def contains(self, v) -> bool:
        return self.lattice.contains(v) and self.cone.contains(v)


def monoid_equal(m1: WeightMonoid, m2: WeightMonoid) -> bool:
    return m1.lattice == m2.lattice and cone_equal(m1.cone, m2.cone)


def primitive_in_lattice(ray, lattice: Lattice):
    """Shortest lattice point on the ray through `ray` (positive multiple)."""
    line = lattice.intersect_subspace([ray])
    if line.rank != 1:
        raise ValueError("ray misses the lattice")
    gen = line.basis()[0]
    ratio = None
    for a, b in zip(gen, ray):
        if b != 0:
            ratio = a / b
            break
    return tuple(-x for x in gen) if ratio < 0 else gen


def hilbert_basis(cone: Cone, lattice: Lattice, max_rays=6, max_points=20000):
    """Hilbert basis of cone & lattice for simplicial pointed cones.

    Returns None when the cone is not pointed, not simplicial, or too big;
    the basis is then simply not reported.
    """
    if not cone.generators:
        return ()
    if not cone.is_pointed():
        return None
    rays = cone.extreme_rays()
    d = lattice.rank
    if len(rays) != d or len(rays) > max_rays:
        return None
    gens = [primitive_in_lattice(r, lattice) for r in rays]
    # Work in lattice coordinates: gens become integer vectors.
    coords = [lattice.coords_of(g) for g in gens]
    if any(c is None for c in coords):
        return None
    m = linalg.transpose(tuple(tuple(Fraction(x) for x in c) for c in coords))
    minv = linalg.inverse(m)
    # Enumerate integer points z with t = minv z in [0,1)^d.
    corners = []
    for eps in itertools.product((0, 1), repeat=d):
        v = [Fraction(0)] * d
        for e, c in zip(eps, coords):
            if e:
                v = [a + b for a, b in zip(v, c)]
        corners.append(v)
    lo = [min(c[i] for c in corners) for i in range(d)]
    hi = [max(c[i] for c in corners) for i in range(d)]
    ranges = [range(int(a), int(b) + 1) for a, b in zip(lo, hi)]
    total = 1
    for r in ranges:
        total *= len(r)
    if total > max_points:
        return None
    box = []
    for z in itertools.product(*ranges):
        t = linalg.mat_vec(minv, tuple(Fraction(x) for x in z))
        if all(0 <= ti < 1 for ti in t):
            if any(z):
                box.append(tuple(int(x) for x in z))
    candidates = [tuple(int(x) for x in c) for c in coords] + box
    candidates = sorted(set(candidates))

    def in_cone(z):
        t = linalg.mat_vec(minv, tuple(Fraction(x) for x in z))
        return all(ti >= 0 for ti in t)

    # c is reducible iff c = a + b with a, b nonzero monoid elements; it is
    # enough to try a among the candidates (they contain the Hilbert basis).
    basis = []
    for c in candidates:
        reducible = False
        for a in candidates:
            if a == c:
                continue
            b = tuple(x - y for x, y in zip(c, a))
            if any(b) and in_cone(b):
                reducible = True
                break
        if not reducible:
            basis.append(c)
    # Convert back to ambient vectors.
    lat_basis = lattice.basis()
    out = []
    for z in basis:
        acc = (Fraction(0),) * lattice.ambient_dim
        for zi, bv in zip(z, lat_basis):
            if zi:
                acc = tuple(a + zi * b for a, b in zip(acc, bv))
        out.append(acc)
    return tuple(sorted(out))
