from fractions import Fraction as F

import pytest

from alcove.lattices import Lattice
from alcove.models import (
    LocalModelEntry,
    entry_sl2_c2,
    entry_sl2_mu,
    shipped_catalog,
)
from alcove.monoids import WeightMonoid, hilbert_basis, monoid_equal, primitive_in_lattice
from alcove.polytopes import Cone


def ray_monoid(gen, lattice_gen):
    cone = Cone.from_generators(len(gen), [gen])
    return WeightMonoid(cone, Lattice(len(gen), [lattice_gen]))


def test_monoid_equal_self():
    m = ray_monoid((1, 0), (1, 0))
    assert monoid_equal(m, m)


def test_monoid_equal_lattice_scale():
    m1 = ray_monoid((1, 0), (1, 0))
    m2 = ray_monoid((1, 0), (2, 0))
    assert not monoid_equal(m1, m2)


def test_monoid_equal_redundant_generator():
    c1 = Cone.from_generators(2, [(1, 0)])
    c2 = Cone.from_generators(2, [(1, 0), (2, 0)])
    lat = Lattice(2, [(1, 0)])
    assert monoid_equal(WeightMonoid(c1, lat), WeightMonoid(c2, lat))


def test_primitive_in_lattice():
    lat = Lattice(2, [(2, 0), (0, 3)])
    assert primitive_in_lattice((1, 0), lat) == (F(2), F(0))
    assert primitive_in_lattice((-1, 0), lat) == (F(-2), F(0))
    assert primitive_in_lattice((1, 1), lat) == (F(6), F(6))
    with pytest.raises(ValueError):
        primitive_in_lattice((1, 1), Lattice(2, [(2, 0)]))


def test_hilbert_basis_quadrant():
    cone = Cone.from_generators(2, [(1, 0), (0, 1)])
    lat = Lattice.standard(2)
    hb = hilbert_basis(cone, lat)
    assert set(hb) == {(F(1), F(0)), (F(0), F(1))}


def test_hilbert_basis_nonsimplicial_skipped():
    cone = Cone.from_generators(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, -1)])
    lat = Lattice.standard(3)
    assert hilbert_basis(cone, lat) is None


def test_hilbert_basis_singular_cone():
    # cone over (1,2),(2,1) in Z^2 needs the interior point (1,1)
    cone = Cone.from_generators(2, [(1, 2), (2, 1)])
    lat = Lattice.standard(2)
    hb = hilbert_basis(cone, lat)
    assert set(hb) == {(F(1), F(2)), (F(2), F(1)), (F(1), F(1))}


def test_catalog_entries_validate():
    cat = shipped_catalog()
    assert len(cat) >= 35
    names = [e.name for e in cat]
    assert len(names) == len(set(names))
    for e in cat:
        e.validate()


def test_catalog_round_trip_and_packaged_file():
    from alcove.formats import catalog_json, default_catalog, dump_catalog, load_catalog

    cat = shipped_catalog()
    again = load_catalog(dump_catalog(cat))
    assert again == cat
    assert default_catalog() == cat  # packaged data file is in sync


def test_entry_validation_rejects_bad_spherical_roots():
    e = entry_sl2_c2()
    bad = LocalModelEntry(
        "bad", e.dim, e.gram, e.simple_roots, e.lattice_basis, e.cone_generators,
        ((-1,),), "",
    )
    with pytest.raises(ValueError):
        bad.validate()


def test_entry_validation_rejects_cone_outside_chamber():
    e = entry_sl2_c2()
    neg = tuple(tuple(-x for x in g) for g in e.cone_generators)
    bad = LocalModelEntry(
        "bad", e.dim, e.gram, e.simple_roots, e.lattice_basis, neg, (), "",
    )
    with pytest.raises(ValueError):
        bad.validate()


def test_mu_entries_distinct():
    mus = [entry_sl2_mu(k) for k in (1, 2, 3)]
    lattices = {m.lattice() for m in mus}
    assert len(lattices) == 3
