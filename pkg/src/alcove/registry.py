"""Built-in corpus of worked examples, with stored expectations.

Each entry builds an IntegralPair from scratch and records what its
verification report should say: overall status, the global root system
type when it is attached, expected witness-model names per vertex (in
lexicographic vertex order), and the manifold the pair classifies, when it
has a classical name.

The quaternionic vertices are x_k = (1/2)(e_1 + ... + e_k); the bare
"x_k = sum of e's" formula (without the 1/2) contradicts the alcove
inequality 1 - 2 x_1 >= 0 and is a suspected typo in the source material,
so the halved form forced by the alcove is used.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .lattices import Lattice, dual_lattice
from .pairs import IntegralPair
from .polytopes import hull
from .roots import (
    CartanType,
    build_affine_twisted,
    build_affine_untwisted,
    build_finite,
    fundamental_weights,
    product_system,
    standard_twist,
)


@dataclass
class Example:
    name: str
    pair: IntegralPair
    expected_status: str
    expected_phi_type: str | None = None  # None = no expectation recorded
    expected_witnesses: tuple | None = None  # per vertex, lexicographic order
    manifold: str = ""
    notes: str = ""


def _minus_w0(sys):
    """-w0 of a finite system, as a matrix on its ambient space."""
    ip = sys.ip
    grads = [f.gradient(ip) for f in sys.simple_roots]
    fw = fundamental_weights(sys)
    rho = tuple(sum(col, Fraction(0)) for col in zip(*fw))
    d = sys.ambient_dim
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
        raise AssertionError("w0 iteration failed")
    return tuple(tuple(-x for x in row) for row in w0)


def _segment(a, b, t):
    return tuple(x + t * (y - x) for x, y in zip(a, b))


def su2_pair(k):
    amb = build_affine_untwisted(CartanType("A", 1))
    lam = amb.weight_lattice().scaled(k)
    return IntegralPair(amb, amb.alcove(), lam, name=f"su2-{k}P")


def su3_twisted_pair(k):
    t = CartanType("A", 2)
    amb = build_affine_twisted(t, standard_twist(t, 2))
    lam = amb.weight_lattice().scaled(k)
    return IntegralPair(amb, amb.alcove(), lam, name=f"su3tw-{k}P")


def spinning_sphere_pair(n):
    """SU(n) pair of the spinning 2(n-1)-sphere: P = [0, omega_1]."""
    amb = build_affine_untwisted(CartanType("A", n - 1))
    fin = build_finite(CartanType("A", n - 1))
    w1 = fundamental_weights(fin)[0]
    p = hull([(Fraction(0),) * n, w1])
    lam = Lattice(n, [w1])
    return IntegralPair(amb, p, lam, name=f"sphere-su{n}")


def quaternionic_pair(n, k):
    amb = build_affine_untwisted(CartanType("C", n))

    def xv(j):
        return tuple(Fraction(1, 2) if i < j else Fraction(0) for i in range(n))

    p = hull([xv(k - 1), xv(k)])
    lam = Lattice(n, [tuple(Fraction(1 if i == k - 1 else 0) for i in range(n))])
    return IntegralPair(amb, p, lam, name=f"quaternionic-{n}-{k}")


def double_pair(family, rank, scales=(1, 1)):
    f1 = build_affine_untwisted(CartanType(family, rank), scale=scales[0])
    f2 = build_affine_untwisted(CartanType(family, rank), scale=scales[1])
    amb = product_system([f1, f2])
    fin = build_finite(CartanType(family, rank))
    delta = _minus_w0(fin)
    verts = [tuple(v) + tuple(linalg.mat_vec(delta, v)) for v in f1.alcove().vertices]
    p = hull(verts)
    p0 = f1.weight_lattice()
    gens = [tuple(b) + tuple(linalg.mat_vec(delta, b)) for b in p0.basis()]
    lam = Lattice(2 * fin.ambient_dim, gens)
    return IntegralPair(amb, p, lam, name=f"double-{family.lower()}{rank}")


def disymmetric_pair(n):
    """SU(2n)/SO(2n) x SU(2n)/Sp(2n) with the diagonal action."""
    amb = build_affine_untwisted(CartanType("A", 2 * n - 1))
    fin = build_finite(CartanType("A", n - 1))
    fw = fundamental_weights(fin)
    yverts = [(Fraction(0),) * n] + [tuple(Fraction(1, 2) * c for c in w) for w in fw]
    q = Fraction(1, 4)
    verts = [tuple(c + q for c in y) + tuple(c - q for c in y) for y in yverts]
    p = hull(verts)
    ip = amb.ip
    simples = amb.simple_roots  # [alpha_0, alpha_1, ..., alpha_{2n-1}]
    coroots = []
    for i in range(1, n + 1):
        ai = simples[i]
        aj = simples[n + i] if n + i <= 2 * n - 1 else simples[0]
        g = (ai + aj).gradient(ip)
        n2 = ip.pairing(g, g)
        coroots.append(tuple(Fraction(2) / n2 * x for x in g))
    lam = dual_lattice(Lattice(2 * n, coroots), ip)
    return IntegralPair(amb, p, lam, name=f"disymmetric-su{2 * n}")


def surjective_pair(kind, n):
    if kind == "su":
        amb = build_affine_untwisted(CartanType("A", n - 1))
    elif kind == "sp":
        amb = build_affine_untwisted(CartanType("C", n))
    elif kind == "sutw":
        t = CartanType("A", 2 * n)
        amb = build_affine_twisted(t, standard_twist(t, 2))
    else:
        raise ValueError(kind)
    lam = amb.weight_lattice()
    return IntegralPair(amb, amb.alcove(), lam, name=f"surjective-{kind}{n}")


def inscribed_pair(row, lattice_kind):
    """The inscribed-triangle pairs; row in {su3-mid, su3-23, sp4-mid,
    sp4-13, g2} and lattice_kind in {P, R}."""
    if row.startswith("su3"):
        amb = build_affine_untwisted(CartanType("A", 2))
        fin = build_finite(CartanType("A", 2))
        w1, w2 = fundamental_weights(fin)
        v0 = (Fraction(0),) * 3
        if row == "su3-mid":
            verts = [
                _segment(v0, w1, Fraction(1, 2)),
                _segment(w1, w2, Fraction(1, 2)),
                _segment(w2, v0, Fraction(1, 2)),
            ]
        else:
            verts = [
                _segment(v0, w1, Fraction(2, 3)),
                _segment(w1, w2, Fraction(2, 3)),
                _segment(w2, v0, Fraction(2, 3)),
            ]
    elif row.startswith("sp4"):
        amb = build_affine_untwisted(CartanType("C", 2))
        a = (Fraction(0), Fraction(0))
        b = (Fraction(1, 2), Fraction(0))
        c = (Fraction(1, 2), Fraction(1, 2))
        if row == "sp4-mid":
            verts = [
                _segment(a, b, Fraction(1, 2)),
                _segment(b, c, Fraction(1, 2)),
                _segment(a, c, Fraction(1, 2)),
            ]
        else:
            verts = [
                _segment(a, b, Fraction(2, 3)),
                _segment(b, c, Fraction(1, 3)),
                _segment(a, c, Fraction(1, 3)),
            ]
    elif row == "g2":
        amb = build_affine_untwisted(CartanType("G", 2))
        vs = list(amb.alcove().vertices)
        orig = next(v for v in vs if all(x == 0 for x in v))
        others = [v for v in vs if v != orig]
        ip = amb.ip
        others.sort(key=lambda v: ip.pairing(v, v))
        v1, v2 = others  # |v1|^2 = 1/6 (right-angle vertex), |v2|^2 = 2/9
        verts = [
            _segment(orig, v1, Fraction(2, 3)),
            _segment(v1, v2, Fraction(1, 3)),
            _segment(orig, v2, Fraction(2, 3)),
        ]
    else:
        raise ValueError(row)
    lam = amb.weight_lattice() if lattice_kind == "P" else amb.root_lattice()
    return IntegralPair(amb, hull(verts), lam, name=f"inscribed-{row}-{lattice_kind}")


def builtin_examples():
    """Name -> Example, in a fixed deterministic order."""
    out = {}

    def add(ex):
        out[ex.name] = ex

    c2 = "C^2 for SL(2)"
    add(Example("su2-1P", su2_pair(1), "Spherical", "0", (c2, c2),
                manifold="spinning 4-sphere S^4"))
    add(Example("su2-2P", su2_pair(2), "Spherical", "A1(1)",
                ("SL(2)/C*", "SL(2)/C*"), manifold="S^2 x S^2"))
    add(Example("su2-3P", su2_pair(3), "Inconclusive", None, (None, None)))
    add(Example("su2-4P", su2_pair(4), "Spherical", "A1(1)",
                ("SL(2)/N(C*)", "SL(2)/N(C*)"), manifold="P^2(C)"))
    add(Example("su2-6P", su2_pair(6), "Inconclusive", None, (None, None)))

    add(Example("su3tw-1P", su3_twisted_pair(1), "Spherical", "A1",
                ("SL(2)/C*", c2)))
    add(Example("su3tw-2P", su3_twisted_pair(2), "Spherical", "A2(2)",
                ("SL(2)/N(C*)", "SL(2)/C*")))
    add(Example("su3tw-4P", su3_twisted_pair(4), "Inconclusive", None,
                (None, "SL(2)/N(C*)"),
                notes="Z>=0(4 alpha) admits no smooth model at the SO(3) vertex"))

    for n in (2, 3, 4, 5):
        cn = c2 if n == 2 else f"C^{n} for SL({n})"
        add(Example(
            f"sphere-su{n}", spinning_sphere_pair(n), "Spherical", "0",
            (cn, cn), manifold=f"spinning {2 * (n - 1)}-sphere",
        ))

    for n in (2, 3, 4):
        for k in range(1, n + 1):
            model = lambda m: c2 if m == 1 else f"C^{2 * m} for Sp({2 * m})"
            w_low, w_high = model(n - k + 1), model(k)
            # vertices sort lexicographically: x_{k-1} before x_k
            add(Example(
                f"quaternionic-{n}-{k}", quaternionic_pair(n, k), "Spherical", "0",
                (w_low, w_high), manifold=f"Gr_{k}(H^{n + 1})",
            ))

    add(Example("double-a1", double_pair("A", 1), "Spherical", "A1(1)",
                manifold="double D(SU(2))"))
    add(Example("double-a2", double_pair("A", 2), "Spherical", "A2(1)",
                manifold="double D(SU(3))"))
    add(Example("double-c2", double_pair("C", 2), "Spherical", "B2(1)",
                manifold="double D(Sp(4))"))
    add(Example("double-g2", double_pair("G", 2), "Spherical", "G2(1)",
                manifold="double D(G2)"))
    add(Example("double-su2-unequal", double_pair("A", 1, scales=(1, 2)),
                "Inconclusive", None, (None, None),
                notes="unequal metric scales: the diagonal is not parallel to alpha+alpha'"))

    add(Example("disymmetric-su4", disymmetric_pair(2), "Spherical", "A1(1)",
                manifold="SU(4)/SO(4) x SU(4)/Sp(4)"))
    add(Example("disymmetric-su6", disymmetric_pair(3), "Spherical", "A2(1)",
                manifold="SU(6)/SO(6) x SU(6)/Sp(6)"))

    add(Example("surjective-su3", surjective_pair("su", 3), "Spherical", "A2(1)"))
    add(Example("surjective-su4", surjective_pair("su", 4), "Spherical", "A1(1)xA1(1)"))
    add(Example("surjective-su5", surjective_pair("su", 5), "Spherical", "A4(1)"))
    add(Example("surjective-sp4", surjective_pair("sp", 2), "Spherical", "A1(1)"))
    add(Example("surjective-sp6", surjective_pair("sp", 3), "Spherical", "A2(1)"))
    add(Example("surjective-su3tw", surjective_pair("sutw", 1), "Spherical", "A1",
                notes="degenerate n=1 case: the only spherical root is 2x1"))
    add(Example("surjective-su5tw", surjective_pair("sutw", 2), "Spherical", "A4(2)"))

    add(Example("inscribed-su3-mid-P", inscribed_pair("su3-mid", "P"), "Spherical"))
    add(Example("inscribed-su3-mid-R", inscribed_pair("su3-mid", "R"), "Spherical"))
    add(Example("inscribed-su3-23-R", inscribed_pair("su3-23", "R"), "Spherical"))
    add(Example("inscribed-sp4-mid-R", inscribed_pair("sp4-mid", "R"), "Spherical"))
    add(Example("inscribed-sp4-13-R", inscribed_pair("sp4-13", "R"), "Spherical"))
    add(Example("inscribed-g2-R", inscribed_pair("g2", "R"), "Spherical"))
    add(Example("inscribed-sp4-mid-P", inscribed_pair("sp4-mid", "P"), "Inconclusive"))
    add(Example("inscribed-sp4-13-P", inscribed_pair("sp4-13", "P"), "Inconclusive"))

    return out
