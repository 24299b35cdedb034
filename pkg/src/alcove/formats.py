"""Versioned JSON formats for pair files, catalog files and reports.

All rational numbers appear as "p/q" strings (or "p" for integers), so the
files stay exact; every document carries a leading "format": 1 field.
Pair and catalog files round-trip losslessly through these functions.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .functionals import AffineFunctional, format_functional
from .lattices import Lattice
from .models import LocalModelEntry
from .pairs import IntegralPair, VerificationReport
from .polytopes import Polytope
from .roots import (
    AffineRootSystem,
    CartanType,
    build_factor,
    fold_cyclic,
    product_system,
)

FORMAT_VERSION = 1


class ParseError(ValueError):
    def __init__(self, where, message):
        self.where = where
        super().__init__(f"{where}: {message}")


def frac_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_frac(s, where="") -> Fraction:
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(where or "number", f"bad rational {s!r}") from e


def vec_json(v):
    return [frac_str(x) for x in v]


def parse_vec(v, where=""):
    return tuple(parse_frac(x, where) for x in v)


def functional_json(f: AffineFunctional):
    return {"const": frac_str(f.const), "coeffs": vec_json(f.coeffs)}


def parse_functional(d, where=""):
    return AffineFunctional(
        parse_frac(d.get("const", "0"), where), parse_vec(d["coeffs"], where)
    )


# -- ambient systems --------------------------------------------------------


def ambient_json(sys: AffineRootSystem):
    factors = []
    for fam, rank, scale, twist in sys.meta.get("factors", []):
        factors.append(
            {"family": fam, "rank": rank, "twist": twist, "scale": frac_str(scale)}
        )
    out = {"factors": factors}
    if sys.meta.get("cyclic_m", 1) != 1:
        out["cyclic"] = sys.meta["cyclic_m"]
    return out


def parse_ambient(d, where="ambient") -> AffineRootSystem:
    factors = d.get("factors")
    if not factors:
        raise ParseError(where, "no factors given")
    built = []
    for i, f in enumerate(factors):
        try:
            fam = f["family"]
            rank = int(f["rank"])
            twist = int(f.get("twist", 1))
            scale = parse_frac(f.get("scale", "1"), f"{where}.factors[{i}].scale")
        except (KeyError, ValueError) as e:
            raise ParseError(f"{where}.factors[{i}]", str(e)) from e
        built.append(build_factor(fam, rank, scale, twist))
    sys = product_system(built)
    m = int(d.get("cyclic", 1))
    if m != 1:
        sys = fold_cyclic(sys, m)
    return sys


# -- pairs -------------------------------------------------------------------


def pair_json(pair: IntegralPair):
    return {
        "format": FORMAT_VERSION,
        "name": pair.name,
        "notes": pair.notes,
        "ambient": ambient_json(pair.ambient),
        "polytope": {"vertices": [vec_json(v) for v in pair.polytope.vertices]},
        "lattice": [vec_json(b) for b in pair.lattice.basis()],
    }


def parse_pair(d) -> IntegralPair:
    if d.get("format") != FORMAT_VERSION:
        raise ParseError("format", f"unsupported format {d.get('format')!r}")
    sys = parse_ambient(d.get("ambient", {}))
    poly = d.get("polytope", {})
    if "vertices" in poly:
        pts = [parse_vec(v, "polytope.vertices") for v in poly["vertices"]]
        p = Polytope.from_vertices(pts)
    elif "constraints" in poly:
        cons = poly["constraints"]
        eqs = [parse_functional(f, "polytope.equalities") for f in cons.get("equalities", [])]
        ineqs = [
            parse_functional(f, "polytope.inequalities")
            for f in cons.get("inequalities", [])
        ]
        p = Polytope.from_constraints(sys.ambient_dim, eqs, ineqs)
    else:
        raise ParseError("polytope", "need vertices or constraints")
    lat = Lattice(sys.ambient_dim, [parse_vec(b, "lattice") for b in d.get("lattice", [])])
    return IntegralPair(sys, p, lat, name=d.get("name", ""), notes=d.get("notes", ""))


def dump_pair(pair: IntegralPair) -> str:
    return json.dumps(pair_json(pair), indent=2)


def load_pair(text: str) -> IntegralPair:
    return parse_pair(json.loads(text))


# -- catalogs ----------------------------------------------------------------


def entry_json(e: LocalModelEntry):
    return {
        "name": e.name,
        "dim": e.dim,
        "gram": [vec_json(r) for r in e.gram],
        "simple_roots": [vec_json(r) for r in e.simple_roots],
        "lattice": [vec_json(r) for r in e.lattice_basis],
        "cone": [vec_json(r) for r in e.cone_generators],
        "spherical_roots": None
        if e.spherical_roots is None
        else [list(c) for c in e.spherical_roots],
        "provenance": e.provenance,
    }


def parse_entry(d, where="entry") -> LocalModelEntry:
    try:
        sph = d.get("spherical_roots")
        entry = LocalModelEntry(
            d["name"],
            int(d["dim"]),
            tuple(parse_vec(r, where) for r in d["gram"]),
            tuple(parse_vec(r, where) for r in d["simple_roots"]),
            tuple(parse_vec(r, where) for r in d["lattice"]),
            tuple(parse_vec(r, where) for r in d["cone"]),
            None if sph is None else tuple(tuple(int(c) for c in combo) for combo in sph),
            d.get("provenance", ""),
        )
    except KeyError as e:
        raise ParseError(where, f"missing field {e}") from e
    return entry.validate()


def catalog_json(entries):
    return {
        "format": FORMAT_VERSION,
        "entries": [entry_json(e) for e in entries],
    }


def parse_catalog(d):
    if d.get("format") != FORMAT_VERSION:
        raise ParseError("format", f"unsupported format {d.get('format')!r}")
    return tuple(
        parse_entry(e, f"entries[{i}]") for i, e in enumerate(d.get("entries", []))
    )


def dump_catalog(entries) -> str:
    return json.dumps(catalog_json(entries), indent=2)


def load_catalog(text: str):
    return parse_catalog(json.loads(text))


def default_catalog():
    """The shipped catalog, loaded from the packaged data file."""
    from importlib import resources

    text = resources.files("alcove").joinpath("data/catalog.json").read_text()
    return load_catalog(text)


# -- reports and root systems ------------------------------------------------


def report_json(rep: VerificationReport):
    verts = []
    for r in rep.records:
        verts.append(
            {
                "vertex": vec_json(r.vertex),
                "centralizer": r.centralizer_type,
                "status": r.status,
                "model": r.entry_name,
                "note": r.note,
                "hilbert_basis": None
                if r.monoid.hilbert is None
                else [vec_json(h) for h in r.monoid.hilbert],
            }
        )
    phi = None
    if rep.phi_m is not None:
        phi = {
            "type": rep.phi_m.sys.type_string(),
            "simple_roots": [functional_json(f) for f in rep.phi_m.sys.simple_roots],
            "pretty": sorted(
                format_functional(f) for f in rep.phi_m.sys.simple_roots
            ),
        }
    return {
        "format": FORMAT_VERSION,
        "pair": rep.pair_name,
        "overall": rep.overall,
        "rank": rep.rank,
        "vertices": verts,
        "lattice_dual": [vec_json(b) for b in rep.lattice_dual.basis()],
        "phi_m": phi,
    }


def rootsystem_json(sys: AffineRootSystem):
    alc = sys.alcove()
    return {
        "format": FORMAT_VERSION,
        "type": sys.type_string(),
        "ambient_dim": sys.ambient_dim,
        "gram": [vec_json(r) for r in sys.ip.gram],
        "simple_roots": [functional_json(f) for f in sys.simple_roots],
        "pretty": [format_functional(f) for f in sys.simple_roots],
        "labels": sys.labels(),
        "cartan_matrix": [list(r) for r in sys.cartan_matrix()],
        "alcove_vertices": [vec_json(v) for v in alc.vertices],
        "alcove_bounded": alc.bounded,
    }
