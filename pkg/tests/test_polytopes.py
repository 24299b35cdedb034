import random
from fractions import Fraction as F

import pytest

from alcove.functionals import AffineFunctional as AF
from alcove.polytopes import (
    Cone,
    EmptyPolytopeError,
    Polytope,
    cone_equal,
    hull,
    meets_every_wall,
)
from alcove.roots import CartanType, build_affine_untwisted, build_finite, fundamental_weights


def test_hull_single_point():
    p = hull([(1, 2)])
    assert p.dim == 0
    assert p.vertices == ((F(1), F(2)),)
    base, dirs = p.affine_span()
    assert base == (F(1), F(2)) and dirs == ()


def test_hull_su3_alcove_hrep():
    """The SU(3) alcove from its three vertices has H-rep {alpha_i >= 0}.

    Functional representatives are only determined on the affine span, so
    the comparison pulls both systems back to the span's chart.
    """
    amb = build_affine_untwisted(CartanType("A", 2))
    fin = build_finite(CartanType("A", 2))
    w1, w2 = fundamental_weights(fin)
    p = hull([(F(0),) * 3, w1, w2])
    alc = amb.alcove()
    assert p == alc
    from alcove.polytopes import _canonical_functional

    chart = p.chart()
    got = {
        (g.const, g.coeffs)
        for g in (_canonical_functional(chart.pull_back(f)) for f in p.inequalities)
    }
    want = {
        (g.const, g.coeffs)
        for g in (_canonical_functional(chart.pull_back(f)) for f in amb.simple_roots)
    }
    assert got == want


def test_hull_membership_oracle_random():
    rng = random.Random(7)
    pts = [
        tuple(F(rng.randint(-8, 8), rng.randint(1, 4)) for _ in range(3))
        for _ in range(10)
    ]
    p = hull(pts)
    for x in pts:
        assert p.contains(x)
    assert all(p.contains(v) for v in p.vertices)


def test_hull_round_trip_random():
    rng = random.Random(123)
    for _ in range(25):
        dim = rng.randint(1, 3)
        k = rng.randint(dim + 1, 6)
        pts = [
            tuple(F(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(dim))
            for _ in range(k)
        ]
        p = hull(pts)
        p2 = hull(p.vertices)
        assert p2 == p
        assert p2.inequalities == p.inequalities


def test_empty_hull_raises():
    with pytest.raises(EmptyPolytopeError):
        hull([])


def test_from_constraints_infeasible():
    with pytest.raises(EmptyPolytopeError):
        Polytope.from_constraints(1, [], [AF(0, (1,)), AF(-1, (-1,))])


def test_tangent_cone_interior_is_full_span():
    tri = hull([(0, 0), (1, 0), (0, 1)])
    c = tri.tangent_cone((F(1, 4), F(1, 4)))
    assert c.dim == 2
    assert not c.is_pointed()
    assert c.contains((-1, 0)) and c.contains((0, -1))


def test_tangent_cone_segment_endpoint():
    fin = build_finite(CartanType("A", 2))
    w1 = fundamental_weights(fin)[0]
    seg = hull([(F(0),) * 3, w1])
    c = seg.tangent_cone((F(0),) * 3)
    assert c.is_pointed()
    rays = c.extreme_rays()
    assert len(rays) == 1
    from alcove.linalg import primitive_integer_vector

    assert rays[0] == primitive_integer_vector(w1)


def test_tangent_cone_outside_point():
    tri = hull([(0, 0), (1, 0), (0, 1)])
    with pytest.raises(ValueError):
        tri.tangent_cone((2, 2))


def test_affine_span_quaternionic_segment():
    # the segment [x_0, x_1] in the Sp(4) alcove has 1-dim span along e_1
    seg = hull([(F(0), F(0)), (F(1, 2), F(0))])
    base, dirs = seg.affine_span()
    assert len(dirs) == 1
    assert dirs[0][1] == 0 and dirs[0][0] != 0


def test_cone_equal_scale_invariance():
    c1 = Cone.from_generators(2, [(1, 0)])
    c2 = Cone.from_generators(2, [(2, 0)])
    assert cone_equal(c1, c2)


def test_cone_equal_quadrant_vs_halfplane():
    quad = Cone.from_generators(2, [(1, 0), (0, 1)])
    half = Cone.from_generators(2, [(1, 0), (0, 1), (-1, 0)])
    assert not cone_equal(quad, half)
    assert cone_equal(quad, quad)


def test_simplex_face_count():
    """A d-simplex has 2^(d+1) - 1 nonempty faces."""
    for d in (1, 2, 3):
        pts = [tuple(F(0) for _ in range(d))]
        for i in range(d):
            pts.append(tuple(F(1 if j == i else 0) for j in range(d)))
        p = hull(pts)
        assert len(p.faces()) == 2 ** (d + 1) - 1


def test_edges_of_triangle():
    tri = hull([(0, 0), (1, 0), (0, 1)])
    assert len(tri.edges()) == 3


def test_meets_every_wall_alcove_itself():
    amb = build_affine_untwisted(CartanType("A", 2))
    alc = amb.alcove()
    assert meets_every_wall(alc, amb.simple_roots)


def test_meets_every_wall_fails_for_interior_ball():
    amb = build_affine_untwisted(CartanType("A", 2))
    alc = amb.alcove()
    c = alc.interior_point()
    small = hull([tuple(F(9, 10) * a + F(1, 10) * b for a, b in zip(c, v))
                  for v in alc.vertices])
    assert not meets_every_wall(small, amb.simple_roots)


def test_unbounded_chamber():
    fin = build_finite(CartanType("A", 2))
    alc = fin.alcove()
    assert not alc.bounded
    assert len(alc.vertices) == 1  # the chamber apex


def test_local_polyhedrality_sampling():
    # P cap U = C_x cap U near x: sample cone points close to x.
    tri = hull([(0, 0), (1, 0), (0, 1)])
    x = (F(0), F(0))
    c = tri.tangent_cone(x)
    for g in c.generators:
        near = tuple(a + F(1, 100) * b for a, b in zip(x, g))
        assert tri.contains(near)
    for v in tri.vertices:
        d = tuple(a - b for a, b in zip(v, x))
        assert c.contains(d)
