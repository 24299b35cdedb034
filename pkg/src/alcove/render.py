"""Deterministic SVG rendering of rank-2 pairs.

Draws the ambient alcove outline, the momentum polytope shaded, and the
reflection hyperplanes of the assembled global root system as dashed
lines.  This is the only place in the package where floating point is
used: exact data is converted to decimals (6 significant digits) at
output time, after projecting the span to orthonormal plane coordinates.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .linalg import dot, vsub
from .pairs import IntegralPair, VerificationReport


def _plane_coords(pair: IntegralPair):
    """Orthonormal 2d coordinates on the affine span of the alcove."""
    alc = pair.ambient.alcove()
    base, dirs = alc.affine_span()
    if len(dirs) != 2:
        raise ValueError(f"rendering needs a rank-2 ambient, got rank {len(dirs)}")
    ip = pair.ambient.ip
    d1, d2 = dirs
    gram = [[float(x) for x in row] for row in ip.gram]

    def fpair(u, v):
        return sum(u[i] * gram[i][j] * v[j] for i in range(len(u)) for j in range(len(u)))

    f1 = [float(x) for x in d1]
    f2 = [float(x) for x in d2]
    n1 = math.sqrt(fpair(f1, f1))
    e1 = [x / n1 for x in f1]
    c = fpair(f2, e1)
    e2raw = [x - c * a for x, a in zip(f2, e1)]
    n2 = math.sqrt(fpair(e2raw, e2raw))
    e2 = [x / n2 for x in e2raw]

    fbase = [float(x) for x in base]

    def to_plane(p):
        diff = [float(x) - b for x, b in zip(p, fbase)]
        return (fpair(diff, e1), fpair(diff, e2))

    return to_plane


def _fmt(x: float) -> str:
    if abs(x) < 1e-9:
        x = 0.0
    return f"{x:.6g}"


def render_pair_svg(pair: IntegralPair, report: VerificationReport | None = None) -> str:
    """SVG document for a rank-2 pair: alcove, shaded P, dashed Phi_M walls."""
    to_plane = _plane_coords(pair)
    alc = pair.ambient.alcove()
    if not alc.bounded:
        raise ValueError("rendering needs a bounded alcove")
    alc_pts = [to_plane(v) for v in alc.vertices]
    p_pts = [to_plane(v) for v in pair.polytope.vertices]
    xs = [p[0] for p in alc_pts]
    ys = [p[1] for p in alc_pts]
    margin = 0.25 * max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)
    x0, x1 = min(xs) - margin, max(xs) + margin
    y0, y1 = min(ys) - margin, max(ys) + margin
    scale = 400.0 / max(x1 - x0, y1 - y0)

    def pt(p):
        return (_fmt((p[0] - x0) * scale), _fmt((y1 - p[1]) * scale))

    width = _fmt((x1 - x0) * scale)
    height = _fmt((y1 - y0) * scale)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    # Shaded momentum polytope (hull order: angular sort around centroid).
    hullpts = _ccw(p_pts)
    if len(hullpts) >= 3:
        path = " ".join(",".join(pt(p)) for p in hullpts)
        lines.append(f'<polygon points="{path}" fill="#999999" fill-opacity="0.5"/>')
    elif len(hullpts) == 2:
        a, b = pt(hullpts[0]), pt(hullpts[1])
        lines.append(
            f'<line x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}" '
            f'stroke="#999999" stroke-width="4"/>'
        )
    # Alcove outline.
    outline = _ccw(alc_pts)
    path = " ".join(",".join(pt(p)) for p in outline)
    lines.append(f'<polygon points="{path}" fill="none" stroke="black" stroke-width="1.5"/>')
    # Dashed reflection lines of the assembled root system.
    if report is not None and report.phi_m is not None:
        for f in report.phi_m.sys.simple_roots:
            seg = _wall_segment(pair, f, (x0, x1, y0, y1), to_plane)
            if seg is not None:
                a, b = pt(seg[0]), pt(seg[1])
                lines.append(
                    f'<line x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}" '
                    f'stroke="black" stroke-width="1" stroke-dasharray="6,4"/>'
                )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _ccw(points):
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    cx = sum(p[0] for p in pts) / len(pts)
    cy = sum(p[1] for p in pts) / len(pts)
    return sorted(pts, key=lambda p: math.atan2(p[1] - cy, p[0] - cx))


def _wall_segment(pair, f, box, to_plane):
    """Clip the zero line of a functional to the bounding box, in plane coords."""
    alc = pair.ambient.alcove()
    base, dirs = alc.affine_span()
    d1, d2 = dirs
    # Zero set in chart coordinates (u, v): f(base + u d1 + v d2) = 0.
    c0 = float(f(base))
    c1 = float(dot(f.coeffs, d1))
    c2 = float(dot(f.coeffs, d2))
    if abs(c1) < 1e-12 and abs(c2) < 1e-12:
        return None
    # Two far-apart points on the line, mapped to the plane, then clipped.
    if abs(c2) >= abs(c1):
        us = (-50.0, 50.0)
        pts = [(u, (-c0 - c1 * u) / c2) for u in us]
    else:
        vs = (-50.0, 50.0)
        pts = [((-c0 - c2 * v) / c1, v) for v in vs]

    def chart_to_plane(uv):
        p = [float(b) + uv[0] * float(x) + uv[1] * float(y) for b, x, y in zip(base, d1, d2)]
        return to_plane(p)

    a, b = chart_to_plane(pts[0]), chart_to_plane(pts[1])
    return _clip_segment(a, b, box)


def _clip_segment(a, b, box):
    x0, x1, y0, y1 = box
    t0, t1 = 0.0, 1.0
    dx, dy = b[0] - a[0], b[1] - a[1]
    for p, q in (
        (-dx, a[0] - x0),
        (dx, x1 - a[0]),
        (-dy, a[1] - y0),
        (dy, y1 - a[1]),
    ):
        if abs(p) < 1e-15:
            if q < 0:
                return None
            continue
        r = q / p
        if p < 0:
            t0 = max(t0, r)
        else:
            t1 = min(t1, r)
        if t0 > t1:
            return None
    return (
        (a[0] + t0 * dx, a[1] + t0 * dy),
        (a[0] + t1 * dx, a[1] + t1 * dy),
    )
