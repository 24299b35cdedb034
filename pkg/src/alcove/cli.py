"""Command-line interface.

Subcommands:

  rootsystem FAMILY RANK [--affine | --twist R] [--cyclic M] [--scale q]
      Build a root system and print simple roots, labels, Cartan matrix
      and alcove vertices (--json for machine output).

  check PAIRFILE [--catalog FILE] [--json]
      Verify a pair file against the catalog.  Exit codes: 0 = Spherical,
      1 = Inconclusive, 2 = invalid input.

  examples [NAME | --all] [--json]
      Re-verify built-in examples against their stored expectations.

  render PAIRFILE OUT.SVG [--catalog FILE]
      Draw a rank-2 pair (alcove outline, shaded P, dashed global walls).

All machine output keeps rationals as "p/q" strings; SVG is the only
place decimals appear.
"""

from __future__ import annotations

import argparse
import json
import sys

from .formats import (
    ParseError,
    default_catalog,
    dump_pair,
    frac_str,
    load_catalog,
    load_pair,
    parse_frac,
    report_json,
    rootsystem_json,
    vec_json,
)
from .functionals import format_functional

EXIT_OK = 0
EXIT_INCONCLUSIVE = 1
EXIT_INVALID = 2


def _fail(msg):
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_INVALID


def cmd_rootsystem(args):
    from .roots import InvalidCartanType, build_factor, fold_cyclic

    try:
        scale = parse_frac(args.scale, "--scale")
        if scale <= 0:
            return _fail("--scale must be positive")
        twist = args.twist if args.twist else (1 if args.affine else 0)
        sys_ = build_factor(args.family, args.rank, scale, twist)
        if args.cyclic != 1:
            if twist == 0:
                return _fail("--cyclic requires an affine system")
            sys_ = fold_cyclic(sys_, args.cyclic)
    except (InvalidCartanType, ValueError, ParseError) as e:
        return _fail(e)
    if args.json:
        print(json.dumps(rootsystem_json(sys_), indent=2))
        return EXIT_OK
    print(f"type: {sys_.type_string()}")
    print("simple roots:")
    for i, f in enumerate(sys_.simple_roots):
        print(f"  alpha_{i if twist else i + 1}: {format_functional(f)}")
    labels = sys_.labels()
    if labels:
        print(f"labels: {labels}")
    print("cartan matrix:")
    for row in sys_.cartan_matrix():
        print("  " + " ".join(f"{x:3d}" for x in row))
    alc = sys_.alcove()
    if alc.bounded:
        print("alcove vertices:")
        for v in alc.vertices:
            print("  (" + ", ".join(frac_str(x) for x in v) + ")")
    else:
        print("alcove: unbounded (finite type chamber)")
    return EXIT_OK


def _load_catalog_arg(args):
    if args.catalog:
        with open(args.catalog) as fh:
            return load_catalog(fh.read())
    return default_catalog()


def _print_report(rep):
    print(f"pair: {rep.pair_name or '(unnamed)'}")
    print(f"overall: {rep.overall}")
    print(f"rank: {rep.rank}")
    for r in rep.records:
        v = "(" + ", ".join(frac_str(x) for x in r.vertex) + ")"
        line = f"  vertex {v}: centralizer {r.centralizer_type}: {r.status}"
        if r.entry_name:
            line += f" by {r.entry_name}"
        print(line)
        if r.monoid.hilbert is not None:
            hb = ", ".join(
                "(" + ", ".join(frac_str(x) for x in h) + ")" for h in r.monoid.hilbert
            )
            print(f"    monoid Hilbert basis: {hb}")
        if r.note:
            print(f"    note: {r.note}")
    if rep.phi_m is not None:
        print(f"global root system: {rep.phi_m.sys.type_string()}")
        for f in sorted(format_functional(g) for g in rep.phi_m.sys.simple_roots):
            print(f"  {f}")


def cmd_check(args):
    from .pairs import PairInvalid, check_pair

    try:
        with open(args.pairfile) as fh:
            pair = load_pair(fh.read())
        catalog = _load_catalog_arg(args)
    except (OSError, ParseError, ValueError, json.JSONDecodeError) as e:
        return _fail(e)
    try:
        rep = check_pair(pair, catalog)
    except PairInvalid as e:
        return _fail(f"invalid pair: {e.reason}")
    if args.json:
        print(json.dumps(report_json(rep), indent=2))
    else:
        _print_report(rep)
    return EXIT_OK if rep.spherical else EXIT_INCONCLUSIVE


def cmd_examples(args):
    from .pairs import check_pair
    from .registry import builtin_examples

    registry = builtin_examples()
    aliases = {
        "su2-all": ["su2-1P", "su2-2P", "su2-4P"],
    }
    if args.name and not args.all:
        if args.name in registry:
            names = [args.name]
        elif args.name in aliases:
            names = aliases[args.name]
        else:
            names = [n for n in registry if n.startswith(args.name)]
            if not names:
                return _fail(f"unknown example {args.name!r}; try --all")
    else:
        names = list(registry)
    catalog = _load_catalog_arg(args)
    failures = 0
    results = []
    for name in names:
        ex = registry[name]
        rep = check_pair(ex.pair, catalog)
        ok = rep.overall == ex.expected_status
        if ok and ex.expected_phi_type is not None:
            got = rep.phi_m.sys.type_string() if rep.phi_m else None
            ok = got == ex.expected_phi_type
        if ok and ex.expected_witnesses is not None:
            ok = tuple(r.entry_name for r in rep.records) == ex.expected_witnesses
        results.append((name, ok, rep))
        if not ok:
            failures += 1
    if args.json:
        out = []
        for name, ok, rep in results:
            ex = registry[name]
            out.append(
                {
                    "name": name,
                    "pass": ok,
                    "expected": ex.expected_status,
                    "manifold": ex.manifold,
                    "report": report_json(rep),
                }
            )
        print(json.dumps({"format": 1, "examples": out}, indent=2))
    else:
        for name, ok, rep in results:
            ex = registry[name]
            manifold = f"  [{ex.manifold}]" if ex.manifold else ""
            phi = f" phi_M={rep.phi_m.sys.type_string()}" if rep.phi_m else ""
            print(f"{'pass' if ok else 'FAIL'}  {name}: {rep.overall}{phi}{manifold}")
    return EXIT_OK if failures == 0 else EXIT_INCONCLUSIVE


def cmd_render(args):
    from .pairs import PairInvalid, check_pair
    from .render import render_pair_svg

    try:
        with open(args.pairfile) as fh:
            pair = load_pair(fh.read())
        catalog = _load_catalog_arg(args)
    except (OSError, ParseError, ValueError, json.JSONDecodeError) as e:
        return _fail(e)
    try:
        rep = check_pair(pair, catalog)
        svg = render_pair_svg(pair, rep)
    except (PairInvalid, ValueError) as e:
        return _fail(e)
    with open(args.out, "w") as fh:
        fh.write(svg)
    print(f"wrote {args.out}")
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(
        prog="alcove",
        description="exact alcove geometry and spherical-pair verification",
    )
    sub = p.add_subparsers(dest="command", required=True)

    rs = sub.add_parser("rootsystem", help="build a (twisted) affine root system")
    rs.add_argument("family", choices=list("ABCDEFG"))
    rs.add_argument("rank", type=int)
    rs.add_argument("--affine", action="store_true", help="append the affine root")
    rs.add_argument("--twist", type=int, default=0, choices=(1, 2, 3),
                    help="affine system twisted by the standard automorphism")
    rs.add_argument("--cyclic", type=int, default=1, metavar="M",
                    help="fold as the diagonal of an M-fold cyclic product")
    rs.add_argument("--scale", default="1", help="inner product scale (rational)")
    rs.add_argument("--json", action="store_true")
    rs.set_defaults(func=cmd_rootsystem)

    ck = sub.add_parser("check", help="verify a pair file")
    ck.add_argument("pairfile")
    ck.add_argument("--catalog", help="catalog file overriding the shipped one")
    ck.add_argument("--json", action="store_true")
    ck.set_defaults(func=cmd_check)

    ex = sub.add_parser("examples", help="run the built-in example corpus")
    ex.add_argument("name", nargs="?", help="example name (see --all)")
    ex.add_argument("--all", action="store_true")
    ex.add_argument("--catalog", help="catalog file overriding the shipped one")
    ex.add_argument("--json", action="store_true")
    ex.set_defaults(func=cmd_examples)

    rd = sub.add_parser("render", help="render a rank-2 pair to SVG")
    rd.add_argument("pairfile")
    rd.add_argument("out")
    rd.add_argument("--catalog", help="catalog file overriding the shipped one")
    rd.set_defaults(func=cmd_render)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
