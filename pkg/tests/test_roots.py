import itertools
import random
from fractions import Fraction as F

import pytest

from alcove.functionals import (
    AffineFunctional as AF,
    WeylElement,
    format_functional,
    reflect,
    reflect_functional,
)
from alcove.lattices import InnerProduct, Lattice
from alcove.roots import (
    CartanType,
    InvalidCartanType,
    TwistSpec,
    build_affine_twisted,
    build_affine_untwisted,
    build_finite,
    centralizer_root_datum,
    fold_cyclic,
    fundamental_weights,
    is_weight_lattice,
    local_subsystem,
    product_system,
    standard_twist,
)


def pretty(sys):
    return [format_functional(f) for f in sys.simple_roots]


def test_cartan_type_validation():
    with pytest.raises(InvalidCartanType):
        CartanType("B", 1)
    with pytest.raises(InvalidCartanType):
        CartanType("E", 5)
    with pytest.raises(InvalidCartanType):
        CartanType("H", 3)
    CartanType("D", 3)


def test_a1_pairing_two():
    a1 = build_finite(CartanType("A", 1))
    f = a1.simple_roots[0]
    assert f.cartan_with(f, a1.ip) == 2


def test_cn_simple_roots():
    c3 = build_finite(CartanType("C", 3))
    assert pretty(c3) == ["x1 - x2", "x2 - x3", "2*x3"]


def test_a2_cartan_matrix():
    a2 = build_finite(CartanType("A", 2))
    assert a2.cartan_matrix() == ((2, -1), (-1, 2))


def test_affine_su_n_alpha0():
    for n in (3, 4, 6):
        sys = build_affine_untwisted(CartanType("A", n - 1))
        assert format_functional(sys.simple_roots[0]) == f"1 - x1 + x{n}"


def test_affine_sp_alpha0():
    sys = build_affine_untwisted(CartanType("C", 3))
    assert format_functional(sys.simple_roots[0]) == "1 - 2*x1"


def test_a1_affine_labels():
    sys = build_affine_untwisted(CartanType("A", 1))
    assert sys.labels() == [1, 1]


def test_cn_affine_labels():
    for n in (2, 3, 4):
        sys = build_affine_untwisted(CartanType("C", n))
        assert sys.labels() == [1] + [2] * (n - 1) + [1]


def test_twisted_su_odd():
    t = CartanType("A", 4)
    sys = build_affine_twisted(t, standard_twist(t, 2))
    assert pretty(sys) == ["1/2 - 2*x1", "x1 - x2", "x2"]
    assert sys.type_string() == "A4(2)"


def test_twisted_su3_gradient_relation():
    t = CartanType("A", 2)
    sys = build_affine_twisted(t, standard_twist(t, 2))
    a0, a1 = sys.simple_roots
    g0 = a0.gradient(sys.ip)
    g1 = a1.gradient(sys.ip)
    assert tuple(g0) == tuple(-2 * x for x in g1)
    assert sys.labels() == [1, 2]


def test_twisted_d4_triality_triangle():
    t = CartanType("D", 4)
    sys = build_affine_twisted(t, standard_twist(t, 3))
    assert sys.type_string() == "D4(3)"
    alc = sys.alcove()
    assert alc.bounded and len(alc.vertices) == 3
    assert sys.simple_roots[0].const == F(1, 3)


def test_twist_validation():
    t = CartanType("A", 3)
    with pytest.raises(InvalidCartanType):
        build_affine_twisted(t, TwistSpec(2, (0, 1, 2)))  # trivial permutation
    with pytest.raises(InvalidCartanType):
        TwistSpec(2, (1, 2, 0))  # order 3 permutation under order-2 twist
    with pytest.raises(InvalidCartanType):
        build_affine_twisted(t, TwistSpec(2, (1, 0, 2)))  # not a diagram automorphism


def test_fold_cyclic_m1_identity():
    base = build_affine_untwisted(CartanType("A", 1))
    assert fold_cyclic(base, 1) is base


def test_fold_cyclic_m2():
    base = build_affine_untwisted(CartanType("A", 1))
    folded = fold_cyclic(base, 2)
    # constants halve, coefficients unchanged, metric doubled
    assert folded.simple_roots[0].const == F(1, 2)
    assert folded.simple_roots[0].coeffs == base.simple_roots[0].coeffs
    assert folded.ip.gram[0][0] == 2 * base.ip.gram[0][0]
    # gradients halve in the rescaled metric
    g0 = base.simple_roots[1].gradient(base.ip)
    g1 = folded.simple_roots[1].gradient(folded.ip)
    assert tuple(g1) == tuple(x / 2 for x in g0)
    # alcove shrinks by the factor 2
    a0 = base.alcove().vertices
    a1 = folded.alcove().vertices
    assert {tuple(2 * x for x in v) for v in a1} == set(a0)
    # same abstract Coxeter diagram
    assert folded.cartan_matrix() == base.cartan_matrix()


def test_reflect_fixes_hyperplane():
    ip = InnerProduct.standard(2)
    alpha = AF(0, (1, -1))
    x = (F(3), F(3))
    assert reflect(alpha, x, ip) == x


def test_reflect_involution_random():
    rng = random.Random(11)
    ip = InnerProduct.standard(3)
    alpha = AF(1, (1, -1, 2))
    for _ in range(100):
        x = tuple(F(rng.randint(-10, 10), rng.randint(1, 5)) for _ in range(3))
        y = reflect(alpha, x, ip)
        assert reflect(alpha, y, ip) == x


def test_reflect_a1_coroot():
    a1 = build_finite(CartanType("A", 1))
    alpha = a1.simple_roots[0]
    cor = alpha.coroot(a1.ip)
    assert reflect(alpha, cor, a1.ip) == tuple(-x for x in cor)


def test_reflect_functional_self():
    ip = InnerProduct.standard(2)
    alpha = AF(0, (1, -1))
    assert reflect_functional(alpha, alpha, ip) == -alpha


def test_reflect_functional_orthogonal():
    ip = InnerProduct.standard(2)
    alpha = AF(0, (1, 0))
    beta = AF(3, (0, 2))
    assert reflect_functional(alpha, beta, ip) == beta


def test_reflect_functional_compatibility_random():
    # (s_alpha beta)(s_alpha x) = beta(x)
    rng = random.Random(5)
    ip = InnerProduct([[2, -1], [-1, 2]])
    for _ in range(100):
        alpha = AF(rng.randint(-2, 2), (rng.randint(-3, 3), rng.randint(-3, 3)))
        if alpha.is_constant():
            continue
        beta = AF(rng.randint(-2, 2), (rng.randint(-3, 3), rng.randint(-3, 3)))
        x = tuple(F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(2))
        sx = reflect(alpha, x, ip)
        sb = reflect_functional(alpha, beta, ip)
        assert sb(sx) == beta(x)


def test_constant_functional_rejected():
    ip = InnerProduct.standard(1)
    with pytest.raises(ValueError):
        reflect(AF(1, (0,)), (F(0),), ip)


def test_weyl_element_reflection_isometry():
    sys = build_finite(CartanType("G", 2))
    for f in sys.simple_roots:
        w = WeylElement.reflection(f, sys.ip)
        assert w.is_isometry(sys.ip)
        assert w.compose(w).apply((F(1), F(2), F(-3))) == (F(1), F(2), F(-3))
        assert w.inverse() == w


def test_labels_primitive_relation():
    for fam, rank in (("A", 3), ("B", 3), ("C", 2), ("D", 4), ("G", 2), ("F", 4)):
        sys = build_affine_untwisted(CartanType(fam, rank))
        labels = sys.labels()
        grads = [f.gradient(sys.ip) for f in sys.simple_roots]
        total = [F(0)] * sys.ambient_dim
        for a, g in zip(labels, grads):
            total = [t + a * x for t, x in zip(total, g)]
        assert all(x == 0 for x in total)
        from math import gcd

        g = 0
        for a in labels:
            g = gcd(g, a)
        assert g == 1


def test_labels_finite_empty():
    assert build_finite(CartanType("A", 2)).labels() == []


def test_labels_reducible_per_component():
    prod = product_system(
        [build_affine_untwisted(CartanType("A", 1)), build_affine_untwisted(CartanType("C", 2))]
    )
    assert prod.labels() == [[1, 1], [1, 2, 1]]


def test_local_subsystem_interior_empty():
    sys = build_affine_untwisted(CartanType("A", 2))
    x = sys.alcove().interior_point()
    sub = local_subsystem(sys, x)
    assert sub.roots == () and sub.simple_roots == ()


def test_local_subsystem_su_n_at_zero():
    for n in (3, 4, 5):
        sys = build_affine_untwisted(CartanType("A", n - 1))
        sub = local_subsystem(sys, (F(0),) * n)
        assert sub.type_string() == f"A{n - 1}"
        assert len(sub.roots) == n * (n - 1)


def test_local_subsystem_sp_vertex():
    n = 3
    sys = build_affine_untwisted(CartanType("C", n))
    for k in (1, 2):
        x = tuple(F(1, 2) if i < k else F(0) for i in range(n))
        sub = local_subsystem(sys, x)
        names = {1: "A1xB2", 2: "B2xA1"}
        assert sorted(sub.type_string().split("x")) == sorted(names[k].split("x"))


def test_local_subsystem_outside_alcove():
    sys = build_affine_untwisted(CartanType("A", 2))
    with pytest.raises(ValueError):
        local_subsystem(sys, (F(5), F(0), F(-5)))


def test_local_subsystem_brute_force_count():
    """Root count matches the word-closure oracle: all w(alpha_i) for words
    of length <= 2|Phi_x| in the vanishing simple reflections."""
    sys = build_affine_untwisted(CartanType("C", 2))
    x = (F(1, 2), F(1, 2))
    sub = local_subsystem(sys, x)
    simples = sub.simple_roots
    ip = sys.ip
    roots = set()
    frontier = set(simples) | {-f for f in simples}
    for _ in range(2 * len(sub.roots)):
        new = set()
        for f in frontier:
            for s in simples:
                g = reflect_functional(s, f, ip)
                if g not in roots and g not in frontier:
                    new.add(g)
        roots |= frontier
        if not new:
            break
        frontier = new
    roots = {f for f in roots if f(x) == 0}
    assert roots == set(sub.roots)


def test_is_weight_lattice():
    a2 = build_finite(CartanType("A", 2))
    P = a2.weight_lattice()
    R = a2.root_lattice()
    assert is_weight_lattice(P, a2)
    assert is_weight_lattice(R, a2)
    assert not is_weight_lattice(P.scaled(F(1, 3)), a2)


def test_alcove_simplex_for_irreducible_affine():
    for fam, rank in (("A", 2), ("C", 3), ("G", 2), ("F", 4)):
        sys = build_affine_untwisted(CartanType(fam, rank))
        alc = sys.alcove()
        assert alc.bounded
        assert len(alc.vertices) == rank + 1


def test_cartan_axioms_all_builds():
    specs = [("A", 3, 1), ("B", 3, 1), ("C", 2, 1), ("D", 4, 1), ("G", 2, 1),
             ("A", 4, 2), ("A", 5, 2), ("D", 4, 3), ("E", 6, 2)]
    for fam, rank, tw in specs:
        t = CartanType(fam, rank)
        sys = (
            build_affine_untwisted(t)
            if tw == 1
            else build_affine_twisted(t, standard_twist(t, tw))
        )
        c = sys.cartan_matrix()
        n = len(c)
        for i in range(n):
            assert c[i][i] == 2
            for j in range(n):
                if i != j:
                    assert c[i][j] <= 0
        # <alpha, alpha_coroot> = 2 for every gradient root
        for g in sys.gradient_roots():
            n2 = sys.ip.pairing(g, g)
            cor = tuple(F(2) / n2 * x for x in g)
            assert sys.ip.pairing(g, cor) == 2


def test_centralizer_root_datum():
    # SU(4) at the disymmetric point (alpha_0 and alpha_2 off the walls):
    # the Levi S(U(2)xU(2)), type A1 x A1.
    sys = build_affine_untwisted(CartanType("A", 3))
    lat = sys.weight_lattice()
    x = (F(1, 4), F(1, 4), F(-1, 4), F(-1, 4))
    sub, l2 = centralizer_root_datum(sys, lat, x)
    assert l2 == lat
    assert sub.type_string() == "A1xA1"
    # at the alcove vertex omega_2 the centralizer is a full A3 again
    fin = build_finite(CartanType("A", 3))
    w2 = fundamental_weights(fin)[1]
    sub2, _ = centralizer_root_datum(sys, lat, w2)
    assert sub2.type_string() == "A3"
    # interior point: torus datum
    sub0, _ = centralizer_root_datum(sys, lat, sys.alcove().interior_point())
    assert sub0.roots == ()
    with pytest.raises(ValueError):
        centralizer_root_datum(sys, lat.scaled(F(1, 5)), w2)


def test_twisted_su2n1_centralizer_types():
    # endpoints of the twisted SU(2n+1) alcove: Sp(2i) x SO(2n+1-2i) sides
    t = CartanType("A", 4)
    sys = build_affine_twisted(t, standard_twist(t, 2))
    # vertices of the alcove {1/4 >= x1 >= x2 >= 0}
    v0 = (F(0), F(0))
    v2 = (F(1, 4), F(1, 4))
    assert local_subsystem(sys, v0).type_string() == "B2"  # SO(5) side
    assert local_subsystem(sys, v2).type_string() == "B2"  # Sp(4) side (C2=B2)
    # distinguished by root lengths, not the abstract type
    n0 = {sys.ip.norm2(f.gradient(sys.ip)) for f in local_subsystem(sys, v0).simple_roots}
    n2 = {sys.ip.norm2(f.gradient(sys.ip)) for f in local_subsystem(sys, v2).simple_roots}
    assert n0 != n2


def test_su2n_disymmetric_levi():
    # SU(4): at the vertex where only alpha_0, alpha_2 are nonzero the
    # centralizer is S(U(2)xU(2)), i.e. type A1 x A1
    sys = build_affine_untwisted(CartanType("A", 3))
    x = (F(1, 4), F(1, 4), F(-1, 4), F(-1, 4))
    sub = local_subsystem(sys, x)
    assert sub.type_string() == "A1xA1"
    assert len(sub.simple_indices) == 2
