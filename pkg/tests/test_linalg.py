from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alcove import linalg


def test_hnf_identity():
    assert linalg.hnf([[1, 0], [0, 1]]) == ((1, 0), (0, 1))


def test_hnf_idempotent():
    h = linalg.hnf([[2, 4], [0, 6]])
    assert linalg.hnf(h) == h


def brute_span_points(rows, box):
    """All integer points of the row span inside [0, box)^2, by brute force."""
    pts = set()
    for a in range(-box, box + 1):
        for b in range(-box, box + 1):
            x = (a * rows[0][0] + b * rows[1][0], a * rows[0][1] + b * rows[1][1])
            if 0 <= x[0] < box and 0 <= x[1] < box:
                pts.add(x)
    return pts


def test_hnf_canonical_iff_same_span():
    # {(3,0),(0,5)} and {(3,5),(0,5)} span the same lattice; certified by
    # enumerating lattice points in the box [0,15)^2.
    r1 = [(3, 0), (0, 5)]
    r2 = [(3, 5), (0, 5)]
    assert brute_span_points(r1, 15) == brute_span_points(r2, 15)
    assert linalg.hnf(r1) == linalg.hnf(r2)
    r3 = [(3, 1), (0, 5)]
    assert brute_span_points(r1, 15) != brute_span_points(r3, 15)
    assert linalg.hnf(r1) != linalg.hnf(r3)


small_matrix = st.integers(min_value=1, max_value=4).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(min_value=-5, max_value=5), min_size=n, max_size=n),
        min_size=1,
        max_size=5,
    )
)


@settings(max_examples=120, deadline=None)
@given(small_matrix)
def test_hnf_idempotence_and_span_random(rows):
    h = linalg.hnf(rows)
    assert linalg.hnf(h) == h
    # Mutual membership of rows certifies span equality.
    for r in rows:
        assert _in_int_span(r, h)
    for r in h:
        assert _in_int_span(r, rows)


def _in_int_span(v, rows):
    rows = [list(r) for r in rows if any(r)]
    if not any(v):
        return True
    return linalg.hnf(rows) == linalg.hnf(rows + [list(v)])


def test_solve_underdetermined_membership():
    # span membership with dependent rows
    rows = ((F(1), F(1)), (F(2), F(2)), (F(0), F(1)))
    sol = linalg.solve(linalg.transpose(rows), (F(3), F(4)))
    assert sol is not None


def test_snf_invariant_factors():
    assert linalg.snf_invariant_factors([[2, 0], [0, 3]]) == [1, 6]
    assert linalg.snf_invariant_factors([[12, 6, 4], [3, 9, 6], [2, 16, 14]]) == [1, 10, 30]
    assert linalg.snf_invariant_factors([]) == []
    assert linalg.snf_invariant_factors([[0, 0]]) == []


def test_integer_kernel():
    k = linalg.integer_kernel([[1, 1, 1]])
    assert len(k) == 2
    for row in k:
        assert sum(row) == 0
    # kernel basis is saturated: (1,-1,0) must be in the span over Z
    assert _in_int_span((1, -1, 0), k)
    assert _in_int_span((0, 1, -1), k)


def test_integer_kernel_of_scaled_matrix():
    # 2x + 4y = 0 over Z: kernel generated by (2,-1), not (4,-2)
    k = linalg.integer_kernel([[2, 4]])
    assert k == ((2, -1),)


def test_nullspace_and_rank():
    m = ((F(1), F(2), F(3)), (F(2), F(4), F(6)))
    assert linalg.rank(m) == 1
    ns = linalg.nullspace(m)
    assert len(ns) == 2
    for v in ns:
        assert linalg.dot(m[0], v) == 0


def test_inverse_and_det():
    m = ((F(2), F(1)), (F(1), F(1)))
    inv = linalg.inverse(m)
    assert linalg.mat_mul(m, inv) == linalg.identity(2)
    with pytest.raises(ValueError):
        linalg.inverse(((F(1), F(2)), (F(2), F(4))))


def test_primitive_integer_vector():
    assert linalg.primitive_integer_vector((F(2, 3), F(4, 3))) == (F(1), F(2))
    with pytest.raises(ValueError):
        linalg.primitive_integer_vector((F(0), F(0)))


def test_saturation():
    # span of (2,0),(0,2) over Q is everything: saturation is Z^2
    assert linalg.saturation([[2, 0], [0, 2]]) == ((1, 0), (0, 1))
    # span of (2,2) over Q: saturation generated by (1,1)
    assert linalg.saturation([[2, 2]]) == ((1, 1),)
