"""Catalog of smooth affine spherical local models.

Every entry records, in an explicit coordinate realization: the simple
roots of the acting group's semisimple part (possibly plus extra central
torus coordinates), the weight monoid as a cone together with the lattice
its weights generate, and, when known, the spherical roots as nonnegative
integer combinations of the simple roots.  spherical_roots=None means "not
encoded" (the model is still usable for verification); an empty tuple
means "known empty" (horospherical models).

The shipped entries cover exactly the models appearing in the worked
examples: the basic SL(2) homogeneous spaces, C^n and C^{2n}, the
full-dominant-monoid varieties of SL(n), Sp(2n) and SO(2n+1), SL(n) as an
S(GL x GL)-variety, group doubles, and the SL(2)/mu_k and SL(2) x^{C*} C
models of the inscribed triangles.  The catalog is data: it can be dumped
to / extended from a JSON file (see formats).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .cartan_classify import classify_finite_functionals
from .functionals import AffineFunctional
from .lattices import InnerProduct, Lattice
from .linalg import as_vec, dot
from .roots import CartanType, build_finite, fundamental_weights


@dataclass(frozen=True)
class LocalModelEntry:
    name: str
    dim: int
    gram: tuple
    simple_roots: tuple  # coefficient covectors of the simple roots
    lattice_basis: tuple  # generators of the group of occurring weights
    cone_generators: tuple  # generators of the monoid's cone
    spherical_roots: tuple | None  # combos of simple roots, or None
    provenance: str = ""

    def ip(self) -> InnerProduct:
        return InnerProduct(self.gram)

    def functionals(self):
        return tuple(AffineFunctional(0, c) for c in self.simple_roots)

    def lattice(self) -> Lattice:
        return Lattice(self.dim, self.lattice_basis)

    def type_string(self) -> str:
        if not self.simple_roots:
            return "0"
        return classify_finite_functionals(self.functionals(), self.ip())

    def validate(self):
        ip = self.ip()
        funcs = self.functionals()
        for f in funcs:
            if f.is_constant():
                raise ValueError(f"{self.name}: constant simple root")
        if self.spherical_roots is not None:
            for combo in self.spherical_roots:
                if len(combo) != len(funcs):
                    raise ValueError(f"{self.name}: spherical root has wrong arity")
                if any(c < 0 for c in combo) or not any(combo):
                    raise ValueError(
                        f"{self.name}: spherical roots must be nonzero nonnegative combos"
                    )
        # Monoid cone inside the dominant chamber.
        for g in self.cone_generators:
            for f in funcs:
                if dot(as_vec(g), f.coroot(ip)) < 0:
                    raise ValueError(f"{self.name}: cone leaves the dominant chamber")
        # The cone must span the lattice's span (monoid generates the group).
        lat = self.lattice()
        if self.cone_generators:
            if linalg.rank(tuple(as_vec(g) for g in self.cone_generators)) != lat.rank:
                raise ValueError(f"{self.name}: cone does not span the weight group")
        elif lat.rank != 0:
            raise ValueError(f"{self.name}: empty cone with nonzero lattice")
        return self


def _pad(v, offset, total):
    v = as_vec(v)
    return (Fraction(0),) * offset + tuple(v) + (Fraction(0),) * (total - offset - len(v))


def _product_entry(name, parts, provenance=""):
    """Combine factor data dicts {dim, gram_rows, roots, lattice, cone, sph}."""
    total = sum(p["dim"] for p in parts)
    gram_rows = []
    roots = []
    lattice = []
    sph = []
    off = 0
    root_offsets = []
    for p in parts:
        for row in p["gram"]:
            gram_rows.append(_pad(row, off, total))
        root_offsets.append(len(roots))
        for r in p["roots"]:
            roots.append(_pad(r, off, total))
        off += p["dim"]
    off = 0
    cone = []
    for p in parts:
        for v in p["lattice"]:
            lattice.append(_pad(v, off, total))
        for v in p["cone"]:
            cone.append(_pad(v, off, total))
        off += p["dim"]
    nroots = len(roots)
    sph_none = any(p["sph"] is None for p in parts)
    if not sph_none:
        for k, p in enumerate(parts):
            for combo in p["sph"]:
                full = [0] * nroots
                for i, c in enumerate(combo):
                    full[root_offsets[k] + i] = c
                sph.append(tuple(full))
    return LocalModelEntry(
        name,
        total,
        tuple(gram_rows),
        tuple(roots),
        tuple(lattice),
        tuple(cone),
        None if sph_none else tuple(sph),
        provenance,
    ).validate()


def _simple_factor(family, rank):
    """Factor data for my standard realization of a simple type."""
    sys = build_finite(CartanType(family, rank))
    return {
        "dim": sys.ambient_dim,
        "gram": linalg.identity(sys.ambient_dim),
        "roots": [f.coeffs for f in sys.simple_roots],
        "system": sys,
    }


def _fws(family, rank):
    sys = build_finite(CartanType(family, rank))
    return sys, fundamental_weights(sys)


def entry_sl2_c2():
    sys, (w,) = _fws("A", 1)
    f = dict(_simple_factor("A", 1), lattice=[w], cone=[w], sph=())
    return _product_entry("C^2 for SL(2)", [f], "two copies of C^2 glue to the 4-sphere")


def entry_cn_sln(n):
    sys, fw = _fws("A", n - 1)
    f = dict(_simple_factor("A", n - 1), lattice=[fw[0]], cone=[fw[0]], sph=())
    return _product_entry(f"C^{n} for SL({n})", [f], "spinning 2n-sphere local model")


def entry_c2n_sp2n(n):
    if n == 1:
        return entry_sl2_c2()
    sys, fw = _fws("C", n)
    f = dict(_simple_factor("C", n), lattice=[fw[0]], cone=[fw[0]], sph=())
    return _product_entry(
        f"C^{2 * n} for Sp({2 * n})", [f], "quaternionic Grassmannian local model"
    )


def entry_sl2_mod_cstar():
    sys = build_finite(CartanType("A", 1))
    alpha = sys.simple_roots[0].coeffs
    f = dict(_simple_factor("A", 1), lattice=[alpha], cone=[alpha], sph=((2,),))
    return _product_entry("SL(2)/C*", [f], "rank-one symmetric model; = SO(3)/SO(2)")


def entry_so3_so2():
    e = entry_sl2_mod_cstar()
    return LocalModelEntry(
        "SO(3)/SO(2)",
        e.dim,
        e.gram,
        e.simple_roots,
        e.lattice_basis,
        e.cone_generators,
        e.spherical_roots,
        "same variety as SL(2)/C*",
    ).validate()


def entry_sl2_mod_ncstar():
    sys = build_finite(CartanType("A", 1))
    alpha = sys.simple_roots[0].coeffs
    twoalpha = tuple(2 * x for x in alpha)
    f = dict(_simple_factor("A", 1), lattice=[twoalpha], cone=[alpha], sph=((2,),))
    return _product_entry("SL(2)/N(C*)", [f], "quotient by the switch; = SO(3)/O(2)")


def entry_so3_o2():
    e = entry_sl2_mod_ncstar()
    return LocalModelEntry(
        "SO(3)/O(2)",
        e.dim,
        e.gram,
        e.simple_roots,
        e.lattice_basis,
        e.cone_generators,
        e.spherical_roots,
        "same variety as SL(2)/N(C*)",
    ).validate()


def _full_dominant_factor(family, rank, sph_combos):
    sys, fw = _fws(family, rank)
    lat = sys.weight_lattice()
    return dict(
        _simple_factor(family, rank),
        lattice=list(lat.basis()),
        cone=list(fw),
        sph=sph_combos,
    )


def sln_full_factor(n):
    combos = tuple(
        tuple(1 if j in (i, i + 1) else 0 for j in range(n - 1)) for i in range(n - 2)
    )
    return _full_dominant_factor("A", n - 1, combos)


def sp2n_full_factor(n):
    # Y_n: all dominant weights of Sp(2n); weight lattice Z^n.
    if n == 1:
        sys, (w,) = _fws("A", 1)
        return dict(_simple_factor("A", 1), lattice=[w], cone=[w], sph=())
    combos = tuple(
        tuple(1 if j in (i, i + 1) else 0 for j in range(n)) for i in range(n - 1)
    )
    return _full_dominant_factor("C", n, combos)


def so_odd_full_factor(m):
    # Z_m = SO(2m+1)/GL(m): all irreducible SO(2m+1)-modules once; the
    # weight lattice is Z^m and the last spherical root is doubled.
    if m == 1:
        sys = build_finite(CartanType("A", 1))
        alpha = sys.simple_roots[0].coeffs
        return dict(_simple_factor("A", 1), lattice=[alpha], cone=[alpha], sph=((2,),))
    combos = [
        tuple(1 if j in (i, i + 1) else 0 for j in range(m)) for i in range(m - 1)
    ]
    combos.append(tuple(2 if j == m - 1 else 0 for j in range(m)))
    sys, fw = _fws("B", m)
    lat = Lattice(m, linalg.identity(m))  # characters of SO(2m+1), not Spin
    cone = [fw[i] for i in range(m - 1)]
    cone.append(tuple(2 * x for x in fw[m - 1]))
    return dict(
        _simple_factor("B", m), lattice=list(lat.basis()), cone=cone, sph=tuple(combos)
    )


def entry_sln_full(n):
    name = f"SL({n})/Sp({n - 1})" if n % 2 else f"SL({n}) x^(Sp({n})) C^{n}"
    return _product_entry(name, [sln_full_factor(n)], "full dominant monoid of SL(n)")


def entry_sp2n_full(n):
    return _product_entry(f"Y_{n}", [sp2n_full_factor(n)], "full dominant monoid of Sp(2n)")


def entry_so_odd_full(m):
    return _product_entry(
        f"Z_{m} = SO({2 * m + 1})/GL({m})", [so_odd_full_factor(m)],
        "all SO(2m+1)-modules exactly once",
    )


def entry_sp_full_product(i, j):
    return _product_entry(
        f"Y_{i} x Y_{j}",
        [sp2n_full_factor(i), sp2n_full_factor(j)],
        "interior-vertex model of the surjective Sp case",
    )


def entry_y_z_product(i, j):
    return _product_entry(
        f"Y_{i} x Z_{j}",
        [sp2n_full_factor(i), so_odd_full_factor(j)],
        "interior-vertex model of the twisted surjective case",
    )


def entry_sln_glgl(n):
    """SL(n) as an S(GL(n) x GL(n))-variety: the disymmetric local model.

    Weights are diagonal pairs (chi, chi); spherical roots pair the i-th
    simple roots of the two factors.
    """
    f1 = _simple_factor("A", n - 1)
    f2 = _simple_factor("A", n - 1)
    sys, fw = _fws("A", n - 1)
    total = 2 * n
    gram = linalg.identity(total)
    roots = [_pad(r, 0, total) for r in f1["roots"]] + [
        _pad(r, n, total) for r in f2["roots"]
    ]
    lattice = [tuple(w) + tuple(w) for w in fw]
    cone = list(lattice)
    k = n - 1
    sph = []
    for i in range(k):
        combo = [0] * (2 * k)
        combo[i] = 1
        combo[k + i] = 1
        sph.append(tuple(combo))
    return LocalModelEntry(
        f"SL({n}) as S(GL({n})xGL({n}))-variety",
        total,
        tuple(gram),
        tuple(roots),
        tuple(lattice),
        tuple(cone),
        tuple(sph),
        "disymmetric SU(2n) local model",
    ).validate()


def double_entry(name, roots_coeffs, gram, lattice_gens, provenance=""):
    """Double of a group datum: weights (chi, delta chi), delta = -w0.

    roots_coeffs/lattice_gens describe one factor in dim-d coordinates; the
    entry lives in 2d coordinates.  Spherical roots are gamma_i + gamma'_j
    where j is the -w0-dual of i.
    """
    d = len(gram)
    ip = InnerProduct(gram)
    funcs = [AffineFunctional(0, c) for c in roots_coeffs]
    grads = [f.gradient(ip) for f in funcs]
    # Fundamental weights of the factor (within the gradient span).
    k = len(funcs)
    m = tuple(
        tuple(ip.pairing(grads[j], funcs[l].coroot(ip)) for j in range(k))
        for l in range(k)
    )
    fw = []
    for i in range(k):
        rhs = tuple(Fraction(1 if l == i else 0) for l in range(k))
        c = linalg.solve(m, rhs)
        acc = (Fraction(0),) * d
        for cj, gj in zip(c, grads):
            acc = tuple(a + cj * b for a, b in zip(acc, gj))
        fw.append(acc)
    # The longest element w0 as a matrix: dominance-move the antidominant
    # strictly regular vector -rho (rho = sum of fundamental weights) while
    # recording the reflections; delta = -w0 linearly.
    rho = (Fraction(0),) * d
    for w in fw:
        rho = tuple(a + b for a, b in zip(rho, w))
    w0 = linalg.identity(d)
    v = tuple(-x for x in rho)
    moved = True
    while moved:
        moved = False
        for g in grads:
            n2 = ip.pairing(g, g)
            c = Fraction(2) * ip.pairing(v, g) / n2
            if c < 0:
                v = tuple(a - c * b for a, b in zip(v, g))
                gg = linalg.mat_vec(ip.gram, g)
                refl = tuple(
                    tuple(
                        (Fraction(1 if r == s else 0)) - Fraction(2) / n2 * g[r] * gg[s]
                        for s in range(d)
                    )
                    for r in range(d)
                )
                w0 = linalg.mat_mul(refl, w0)
                moved = True
    if v != tuple(rho):
        raise AssertionError("w0 computation did not reach the dominant chamber")

    def delta(u):
        return tuple(-x for x in linalg.mat_vec(w0, as_vec(u)))

    dual_index = []
    for i, g in enumerate(grads):
        dg = delta(g)
        j = next(kk for kk, h in enumerate(grads) if tuple(h) == tuple(dg))
        dual_index.append(j)
    total = 2 * d
    gram2 = [_pad(r, 0, total) for r in gram] + [_pad(r, d, total) for r in gram]
    roots2 = [_pad(c, 0, total) for c in roots_coeffs] + [
        _pad(c, d, total) for c in roots_coeffs
    ]
    # Lattice: (chi, delta chi) over the factor lattice.
    lattice2 = []
    for b in lattice_gens:
        lattice2.append(tuple(b) + tuple(delta(b)))
    cone2 = [tuple(w) + tuple(delta(w)) for w in fw]
    sph = []
    for i in range(k):
        combo = [0] * (2 * k)
        combo[i] += 1
        combo[k + dual_index[i]] += 1
        sph.append(tuple(combo))
    return LocalModelEntry(
        name, total, tuple(gram2), tuple(roots2), tuple(lattice2), tuple(cone2),
        tuple(sph), provenance,
    ).validate()


def entry_double(family, rank):
    sys = build_finite(CartanType(family, rank))
    lat = sys.weight_lattice()
    return double_entry(
        f"double of {family}{rank}",
        [f.coeffs for f in sys.simple_roots],
        sys.ip.gram,
        lat.basis(),
        "group double local model",
    )


def entry_double_adjoint_a1a1():
    # Local datum at the middle vertex of the Sp(4) alcove: roots 2e_1, 2e_2
    # with character lattice Z^2.
    roots = [(Fraction(2), Fraction(0)), (Fraction(0), Fraction(2))]
    return double_entry(
        "double of (PSL(2)xPSL(2) datum)",
        roots,
        linalg.identity(2),
        linalg.identity(2),
        "D(Sp(4)) middle-vertex model",
    )


def entry_double_g2_edge():
    # Local datum at the A1xA1 vertex of the G2 alcove: roots theta and
    # alpha_2 of G2, character lattice Z{alpha_1, alpha_2}.
    sys = build_finite(CartanType("G", 2))
    a1 = sys.simple_roots[0].coeffs  # long
    a2 = sys.simple_roots[1].coeffs  # short
    theta = tuple(2 * x + 3 * y for x, y in zip(a1, a2))
    return double_entry(
        "double of (G2 edge-vertex datum)",
        [theta, a2],
        sys.ip.gram,
        [a1, a2],
        "D(G2) vertex model at the A1xA1 corner",
    )


def entry_sl2_mu(k):
    """SL(2)/mu_k under SL(2) x (T/mu_k): the reflection-contact model."""
    half = Fraction(1, 2)
    root = (Fraction(1), Fraction(-1), Fraction(0))
    if k % 2 == 0:
        lattice = [(Fraction(1), Fraction(-1), Fraction(0)), (0, 0, Fraction(k))]
    else:
        lattice = [(Fraction(1), Fraction(-1), Fraction(0)), (half, -half, Fraction(k))]
    cone = [(half, -half, Fraction(1)), (half, -half, Fraction(-1))]
    return LocalModelEntry(
        f"SL(2)/mu_{k}",
        3,
        linalg.identity(3),
        (root,),
        tuple(tuple(Fraction(x) for x in v) for v in lattice),
        tuple(cone),
        None,
        "inscribed-triangle model, reflection contact",
    ).validate()


def entry_sl2_fiber(j=1):
    """SL(2) x^{C*} C with fiber weight j: the right-angle-contact model.

    Weights (d, w): 0 <= w <= d, d = w mod 2, j | w; same lattice as
    SL(2)/mu_j but only the upper half of its cone.
    """
    half = Fraction(1, 2)
    root = (Fraction(1), Fraction(-1), Fraction(0))
    if j % 2 == 0:
        lattice = [(Fraction(1), Fraction(-1), Fraction(0)), (0, 0, Fraction(j))]
    else:
        lattice = [(Fraction(1), Fraction(-1), Fraction(0)), (half, -half, Fraction(j))]
    cone = [(half, -half, Fraction(1)), (Fraction(1), Fraction(-1), Fraction(0))]
    name = "SL(2) x^(C*) C" if j == 1 else f"SL(2) x^(C*) C (fiber weight {j})"
    return LocalModelEntry(
        name,
        3,
        linalg.identity(3),
        (root,),
        tuple(tuple(Fraction(x) for x in v) for v in lattice),
        tuple(cone),
        None,
        "inscribed-triangle model, right-angle contact",
    ).validate()


def entry_point():
    return LocalModelEntry(
        "point", 0, (), (), (), (), (), "zero-dimensional model"
    ).validate()


def shipped_catalog():
    """The default catalog, in deterministic order."""
    entries = [
        entry_point(),
        entry_sl2_c2(),
        entry_sl2_mod_cstar(),
        entry_so3_so2(),
        entry_sl2_mod_ncstar(),
        entry_so3_o2(),
    ]
    for n in (3, 4, 5):
        entries.append(entry_cn_sln(n))
    for n in (2, 3, 4):
        entries.append(entry_c2n_sp2n(n))
    for n in (3, 4, 5):
        entries.append(entry_sln_full(n))
    for n in (1, 2, 3):
        entries.append(entry_sp2n_full(n))
    for m in (1, 2):
        entries.append(entry_so_odd_full(m))
    entries.append(entry_sp_full_product(1, 1))
    entries.append(entry_sp_full_product(1, 2))
    entries.append(entry_y_z_product(1, 1))
    for n in (2, 3):
        entries.append(entry_sln_glgl(n))
    for fam, rank in (("A", 1), ("A", 2), ("C", 2), ("G", 2)):
        entries.append(entry_double(fam, rank))
    entries.append(entry_double_adjoint_a1a1())
    entries.append(entry_double_g2_edge())
    for k in (1, 2, 3, 4, 5, 6):
        entries.append(entry_sl2_mu(k))
    for j in (1, 2, 3):
        entries.append(entry_sl2_fiber(j))
    return tuple(entries)
