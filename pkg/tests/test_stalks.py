from fractions import Fraction as F

import pytest

from alcove.classify import IntegralRootSystem
from alcove.functionals import AffineFunctional as AF
from alcove.lattices import AbelianGroupPresentation, InnerProduct, Lattice, dual_lattice
from alcove.roots import (
    CartanType,
    FiniteSubsystem,
    build_affine_twisted,
    build_affine_untwisted,
    build_finite,
    local_subsystem,
    product_system,
    standard_twist,
)
from alcove.stalks import (
    NotAdjoint,
    adjoint_decompose,
    component_group_adjoint,
    component_group_general,
    d_I,
    h0_component_data,
    kernel_stalk,
    restriction_compatible,
    stalk_sequence_check,
)


def adjoint_ir(sys):
    return IntegralRootSystem(sys, sys.root_lattice())


def test_adjoint_decompose_root_lattice():
    sys = build_affine_untwisted(CartanType("C", 2))
    ir = adjoint_ir(sys)
    root_part, fixed = adjoint_decompose(ir)
    assert root_part == sys.root_lattice()
    assert fixed.rank == 0


def test_adjoint_decompose_su2_weight_fails():
    a1 = build_finite(CartanType("A", 1))
    ir = IntegralRootSystem(a1, a1.weight_lattice())
    with pytest.raises(NotAdjoint) as e:
        adjoint_decompose(ir)
    # the witness is a weight outside root lattice + fixed part
    assert not a1.root_lattice().contains(e.value.witness)


def test_adjoint_decompose_with_fixed_summand():
    # Z Phi(A1) + Z in a rank-2 ambient: adjoint by construction
    a1 = build_finite(CartanType("A", 1))  # ambient dim 2, root (1,-1)
    lam = Lattice(2, [(1, -1), (1, 1)])
    # (1,1) is orthogonal to the root: W acts trivially on it
    ir = IntegralRootSystem(a1, lam)
    root_part, fixed = adjoint_decompose(ir)
    assert root_part == a1.root_lattice()
    assert fixed == Lattice(2, [(1, 1)])


def test_d_I():
    labels = [1, 2, 2, 1]  # C3(1)
    assert d_I(labels, ()) == 1
    assert d_I(labels, (0,)) == 1
    assert d_I(labels, (0, 3)) == 2
    assert d_I(labels, (1, 2)) == 1
    with pytest.raises(ValueError):
        d_I(labels, (0, 1, 2, 3))


def test_component_group_adjoint_c2():
    sys = build_affine_untwisted(CartanType("C", 2))  # labels (1,2,1)
    assert component_group_adjoint(sys, (0, 2)) == AbelianGroupPresentation([2])
    assert component_group_adjoint(sys, (1,)) == AbelianGroupPresentation([])
    fin = build_finite(CartanType("A", 2))
    assert component_group_adjoint(fin, ()).is_trivial


def test_component_group_general_a1():
    # Xi(pi_0) = Tors(Lambda / Z Phi): the weight lattice of A1 gives Z/2
    # (index-two extension of the root lattice), the root lattice gives 0.
    a1 = build_finite(CartanType("A", 1))
    sub = local_subsystem_all(a1)
    weight = a1.weight_lattice()
    root = a1.root_lattice()
    assert component_group_general(sub, weight) == AbelianGroupPresentation([2])
    assert component_group_general(sub, root).is_trivial


def local_subsystem_all(fin_sys):
    """FiniteSubsystem holding all roots of a finite system at the origin."""
    from alcove.roots import _functional_closure

    simples = list(fin_sys.simple_roots)
    closure = _functional_closure(simples, fin_sys.ip)
    x = (F(0),) * fin_sys.ambient_dim
    return FiniteSubsystem(x, closure, simples, tuple(range(len(simples))), fin_sys.ip)


def test_component_group_direct_summand_trivial():
    # Lambda = Z Phi + orthogonal summand: pi_0 = 0
    a1 = build_finite(CartanType("A", 1))
    sub = local_subsystem_all(a1)
    lam = Lattice(2, [(1, -1), (1, 1)])
    assert component_group_general(sub, lam).is_trivial


def test_kernel_stalk():
    a1 = build_finite(CartanType("A", 1))
    lam = Lattice.standard(2)
    sub = local_subsystem_all(a1)
    # alpha_bar = (1,-1): stalk = Z^vee cap orthogonal = Z (1,1)
    stalk = kernel_stalk(sub, lam)
    assert stalk == Lattice(2, [(1, 1)])
    # empty Phi_x: the stalk is all of Lambda^vee
    empty = FiniteSubsystem((F(0), F(0)), (), (), (), a1.ip)
    assert kernel_stalk(empty, lam) == dual_lattice(lam, a1.ip)
    # full-rank Phi_x in its span and full-rank lattice: zero lattice
    a2 = build_finite(CartanType("G", 2))
    sub2 = local_subsystem_all(a2)
    lam2 = a2.root_lattice()
    assert kernel_stalk(sub2, lam2).rank == 0


def test_stalk_sequence_interior():
    sys = build_affine_untwisted(CartanType("C", 2))
    ir = adjoint_ir(sys)
    x = sys.alcove().interior_point()
    rep = stalk_sequence_check(x, ir)
    assert rep.exact
    assert all(not c.vanishing for c in rep.components)


def test_stalk_sequence_c2_vertices():
    sys = build_affine_untwisted(CartanType("C", 2))
    ir = adjoint_ir(sys)
    for v in sys.alcove().vertices:
        rep = stalk_sequence_check(v, ir)
        assert rep.exact, rep.first_failure()


def test_stalk_sequence_a2_trivial_groups():
    sys = build_affine_untwisted(CartanType("A", 2))
    ir = adjoint_ir(sys)
    for v in sys.alcove().vertices:
        rep = stalk_sequence_check(v, ir)
        assert rep.exact
        for c in rep.components:
            assert c.d == 1


def test_stalk_sequence_requires_adjoint():
    a1aff = build_affine_untwisted(CartanType("A", 1))
    ir = IntegralRootSystem(a1aff, a1aff.weight_lattice())
    with pytest.raises(NotAdjoint):
        stalk_sequence_check((F(0), F(0)), ir)


def test_stalk_sequence_product():
    sys = product_system(
        [build_affine_untwisted(CartanType("A", 1)), build_affine_untwisted(CartanType("C", 2))]
    )
    ir = adjoint_ir(sys)
    for v in sys.alcove().vertices:
        rep = stalk_sequence_check(v, ir)
        assert rep.exact


def brute_force_component_group(sub, lam):
    """Coset count of (projected Lambda^vee) in the coweight lattice of
    Phi_x, by bounded breadth-first search; independent of SNF."""
    from alcove.lattices import orthogonal_project, quotient

    ip = sub.ip
    grads = [f.gradient(ip) for f in sub.roots]
    if not grads:
        return 1
    n = len(grads[0])
    root_lat = Lattice(n, grads)
    coweight = dual_lattice(root_lat, ip)
    lam_vee = dual_lattice(lam, ip)
    span = root_lat.basis()
    projected = Lattice(n, [orthogonal_project(v, span, ip) for v in lam_vee.basis()])
    reps = [(F(0),) * n]
    frontier = list(reps)
    while frontier:
        nxt = []
        for v in frontier:
            for b in coweight.basis():
                for s in (1, -1):
                    w = tuple(a + s * c for a, c in zip(v, b))
                    if not any(
                        projected.contains(tuple(x - y for x, y in zip(w, r)))
                        for r in reps
                    ):
                        reps.append(w)
                        nxt.append(w)
                        if len(reps) > 64:
                            raise AssertionError("unexpectedly large group")
        frontier = nxt
    return len(reps)


def test_component_group_matches_brute_force():
    for fam, rank in (("C", 2), ("C", 3), ("B", 3), ("G", 2)):
        sys = build_affine_untwisted(CartanType(fam, rank))
        lam = sys.root_lattice()
        for v in sys.alcove().vertices:
            sub = local_subsystem(sys, v)
            got = component_group_general(sub, lam)
            order = got.order()
            assert order == brute_force_component_group(sub, lam)
            # agrees with the adjoint gcd formula
            labels = sys.labels()
            subset = tuple(sub.simple_indices)
            assert order == d_I(labels, subset)


def test_restriction_compatibility():
    sys = build_affine_untwisted(CartanType("C", 2))
    ir = adjoint_ir(sys)
    alc = sys.alcove()
    for v in alc.vertices:
        for w in alc.vertices:
            if v == w:
                continue
            mid = tuple((a + b) / 2 for a, b in zip(v, w))
            assert restriction_compatible(v, mid, ir)


def test_h0_component_data():
    # A_{n-1}(1): all labels 1 -> empty table
    su = build_affine_untwisted(CartanType("A", 3))
    ir = adjoint_ir(su)
    assert h0_component_data(su.alcove(), ir) == ()

    # C2(1), labels (1,2,1), P = alcove: p=2, e_max=1
    c2 = build_affine_untwisted(CartanType("C", 2))
    ir2 = adjoint_ir(c2)
    table = h0_component_data(c2.alcove(), ir2)
    assert len(table) == 1
    entry = table[0]
    assert entry.prime == 2 and entry.e_max == 1
    assert entry.group == AbelianGroupPresentation([2])
    assert c2.labels()[entry.witness_index] % 2 == 1

    # a small polytope around an interior point misses all walls: empty
    from alcove.polytopes import hull

    c = c2.alcove().interior_point()
    small = hull([
        tuple(F(99, 100) * a + F(1, 100) * b for a, b in zip(c, v))
        for v in c2.alcove().vertices
    ])
    assert h0_component_data(small, ir2) == ()


def test_h0_g2():
    # G2(1) labels (1,2,3): primes 2 and 3 each with e_max = 1 on the alcove
    g2 = build_affine_untwisted(CartanType("G", 2))
    ir = adjoint_ir(g2)
    table = h0_component_data(g2.alcove(), ir)
    assert [(e.prime, e.e_max) for e in table] == [(2, 1), (3, 1)]
