"""Recognition of finite and affine Dynkin types from Cartan matrices.

A component is matched against candidate Cartan matrices generated from the
builders themselves, up to simultaneous row/column permutation.  Canonical
names follow Kac's tables, except that the rank-2 untwisted double-bond
diagram is reported as B2(1) (the papers' usual name for C2(1)).

Coinciding low-rank diagrams are normalized: A1=B1=C1, B2=C2 (reported B2),
A3=D3 (reported A3).
"""

from __future__ import annotations

import itertools

from . import linalg


def _cartan_of_functionals(funcs, ip):
    return tuple(
        tuple(int(a.cartan_with(b, ip)) for b in funcs) for a in funcs
    )


def cartan_isomorphic(c1, c2) -> bool:
    """Are two integer Cartan matrices equal up to one permutation?"""
    n = len(c1)
    if len(c2) != n:
        return False

    def sig(c):
        return sorted(tuple(sorted(row)) for row in c)

    if sig(c1) != sig(c2):
        return False

    rows1 = [tuple(sorted(r)) for r in c1]
    rows2 = [tuple(sorted(r)) for r in c2]

    def backtrack(mapping, used):
        i = len(mapping)
        if i == n:
            return True
        for j in range(n):
            if j in used or rows1[i] != rows2[j]:
                continue
            ok = True
            for a, b in enumerate(mapping):
                if c1[i][a] != c2[j][b] or c1[a][i] != c2[b][j]:
                    ok = False
                    break
            if ok and backtrack(mapping + [j], used | {j}):
                return True
        return False

    return backtrack([], set())


_FINITE_CANDIDATES = {}
_AFFINE_CANDIDATES = {}


def _finite_candidates(rank):
    if rank in _FINITE_CANDIDATES:
        return _FINITE_CANDIDATES[rank]
    from .roots import CartanType, InvalidCartanType, build_finite

    cands = []
    specs = [("A", rank)]
    if rank >= 3:
        specs += [("B", rank), ("C", rank)]
    elif rank == 2:
        specs += [("B", rank)]
    if rank >= 4:
        specs.append(("D", rank))
    if rank in (6, 7, 8):
        specs.append(("E", rank))
    if rank == 4:
        specs.append(("F", rank))
    if rank == 2:
        specs.append(("G", rank))
    for fam, r in specs:
        try:
            sys = build_finite(CartanType(fam, r))
        except InvalidCartanType:
            continue
        cands.append((f"{fam}{r}", sys.cartan_matrix()))
    _FINITE_CANDIDATES[rank] = cands
    return cands


def _affine_candidates(n_simples):
    if n_simples in _AFFINE_CANDIDATES:
        return _AFFINE_CANDIDATES[n_simples]
    from .roots import (
        CartanType,
        InvalidCartanType,
        build_affine_twisted,
        build_affine_untwisted,
        standard_twist,
    )

    rank = n_simples - 1
    cands = []
    untwisted = [("A", rank)]
    if rank == 2:
        untwisted += [("B", rank), ("G", 2)]
    if rank >= 3:
        untwisted += [("B", rank), ("C", rank)]
    if rank >= 4:
        untwisted += [("D", rank), ("F", 4)]
    if rank in (6, 7, 8):
        untwisted.append(("E", rank))
    for fam, r in untwisted:
        try:
            sys = build_affine_untwisted(CartanType(fam, r))
        except InvalidCartanType:
            continue
        name = f"{fam}{r}(1)"
        if fam == "C" and r == 2:
            continue  # same diagram as B2(1)
        cands.append((name, sys.cartan_matrix()))
    twisted = []
    if rank >= 1:
        twisted.append((f"A{2 * rank}(2)", ("A", 2 * rank, 2)))
    if rank >= 3:
        twisted.append((f"A{2 * rank - 1}(2)", ("A", 2 * rank - 1, 2)))
    if rank >= 2:
        twisted.append((f"D{rank + 1}(2)", ("D", rank + 1, 2)))
    if rank == 4:
        twisted.append(("E6(2)", ("E", 6, 2)))
    if rank == 2:
        twisted.append(("D4(3)", ("D", 4, 3)))
    for name, (fam, r, order) in twisted:
        try:
            t = CartanType(fam, r)
            sys = build_affine_twisted(t, standard_twist(t, order))
        except InvalidCartanType:
            continue
        cands.append((name, sys.cartan_matrix()))
    _AFFINE_CANDIDATES[n_simples] = cands
    return cands


def classify_finite_cartan(c) -> str:
    n = len(c)
    if n == 0:
        return "0"
    for name, cand in _finite_candidates(n):
        if cartan_isomorphic(c, cand):
            return name
    raise ValueError(f"unrecognized finite Cartan matrix {c}")


def classify_affine_cartan(c) -> str:
    for name, cand in _affine_candidates(len(c)):
        if cartan_isomorphic(c, cand):
            return name
    raise ValueError(f"unrecognized affine Cartan matrix {c}")


def classify_finite_functionals(funcs, ip) -> str:
    """Type of a finite simple system given by functionals (products ok)."""
    if not funcs:
        return "0"
    c = _cartan_of_functionals(list(funcs), ip)
    comps = _components(c)
    names = []
    for comp in comps:
        sub = tuple(tuple(c[i][j] for j in comp) for i in comp)
        names.append(classify_finite_cartan(sub))
    return "x".join(sorted(names))


def _components(c):
    n = len(c)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and c[i][j] != 0:
                    seen[j] = True
                    stack.append(j)
        comps.append(tuple(sorted(comp)))
    return comps


def classify_system(sys) -> str:
    """Canonical type string of an AffineRootSystem (components sorted)."""
    simples = sys.simple_roots
    if not simples:
        return "0"
    c = sys.cartan_matrix()
    names = []
    for comp in sys.components():
        sub = tuple(tuple(c[i][j] for j in comp) for i in comp)
        grads = tuple(simples[i].gradient(sys.ip) for i in comp)
        if linalg.rank(grads) < len(comp):
            names.append(classify_affine_cartan(sub))
        else:
            names.append(classify_finite_cartan(sub))
    return "x".join(sorted(names))
