"""Standalone SVG drawings of labeled curves.

Winding numbers are printed inside each face, crossing indices in bold
italics next to each crossing.  Output depends only on the input, so equal
inputs give byte-identical files.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from xml.sax.saxutils import escape

from .diagram import CurveDiagram, face_sample_point, trace_diagram
from .errors import NoGeometry
from .geometry import PolylineCurve
from .invariants import rotation_from_windings

LAYERS = ("winding", "index", "rotation", "orientation-arrows")


@dataclass(frozen=True)
class RenderSpec:
    shape: object                       # geometric diagram or curve
    layers: frozenset = field(default_factory=frozenset)
    size: int = 480
    stroke: float = 2.0
    margin: int = 24


def _num(v: int) -> str:
    return str(v).replace("-", "−")


def _fmt(x: float) -> str:
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _ray_hit(p, n, edges, skip):
    """Smallest t > 0 with p + t n on one of ``edges`` (None if the ray escapes)."""
    best = None
    for i, (u, v) in enumerate(edges):
        if i == skip:
            continue
        ex, ey = v[0] - u[0], v[1] - u[1]
        den = n[0] * ey - n[1] * ex
        if den == 0:
            continue
        wx, wy = u[0] - p[0], u[1] - p[1]
        t = (wx * ey - wy * ex) / den
        s = (wx * n[1] - wy * n[0]) / den
        if t > 1e-12 and 0 <= s <= 1 and (best is None or t < best):
            best = t
    return best


def _label_point(d: CurveDiagram, f: int):
    """Roomy spot inside a bounded face, for drawing only.

    From the middle of every boundary segment a ray goes into the face; the
    midpoint of the longest free ray wins.  Falls back to the exact sample.
    """
    g = d.geometry
    pts = [(float(x), float(y)) for x, y in g.curve.vertices]
    edges = [(pts[i], pts[(i + 1) % len(pts)]) for i in range(len(pts))]
    best, where = 0.0, None
    for k, side in d.faces[f]:
        path = [(float(x), float(y)) for x, y in g.arc_paths[k]]
        for j in range(len(path) - 1):
            a, b = path[j], path[j + 1]
            n = (-(b[1] - a[1]) * side, (b[0] - a[0]) * side)
            m = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
            t = _ray_hit(m, n, edges, g.arc_edges[k][j])
            if t is not None and t > best:
                best, where = t, (m[0] + n[0] * t / 2, m[1] + n[1] * t / 2)
    return where if where is not None else face_sample_point(d, f)


def render_svg(spec: RenderSpec) -> str:
    shape = spec.shape
    if isinstance(shape, PolylineCurve):
        d = trace_diagram(shape)
    elif isinstance(shape, CurveDiagram):
        d = shape
    else:
        raise TypeError("render_svg needs a curve or a diagram")
    if d.geometry is None:
        raise NoGeometry("combinatorial diagrams have no coordinates to draw")
    bad = set(spec.layers) - set(LAYERS)
    if bad:
        raise ValueError(f"unknown label layers {sorted(bad)}")
    pts = [(float(x), float(y)) for x, y in d.geometry.curve.vertices]
    xs, ys = [p[0] for p in pts], [p[1] for p in pts]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    inner = spec.size - 2 * spec.margin
    # x and y scale separately: flat layouts from realization stay readable,
    # and a positive affine map does not change the diagram
    kx = inner / ((x1 - x0) or 1.0)
    ky = inner / ((y1 - y0) or 1.0)

    def tr(p):
        return (spec.margin + (float(p[0]) - x0) * kx,
                spec.margin + (y1 - float(p[1])) * ky)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.size}" '
        f'height="{spec.size}" viewBox="0 0 {spec.size} {spec.size}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    path = " ".join(("M" if i == 0 else "L") + f"{_fmt(x)},{_fmt(y)}"
                    for i, (x, y) in enumerate(map(tr, pts))) + " Z"
    out.append(f'<path id="curve" d="{path}" fill="none" stroke="black" '
               f'stroke-width="{_fmt(spec.stroke)}" stroke-linejoin="round"/>')
    font = 'font-family="sans-serif" font-size="14" text-anchor="middle"'
    if "winding" in spec.layers:
        out.append('<g id="windings">')
        for f in range(len(d.faces)):
            if f == d.outer_face:
                # park the outer label in a corner
                x, y = spec.margin / 2 + 4, spec.margin / 2 + 6
            else:
                x, y = tr(_label_point(d, f))
            out.append(f'<text x="{_fmt(x)}" y="{_fmt(y)}" {font} fill="#1f4e9a">'
                       f'{escape(_num(d.windings[f]))}</text>')
        out.append('</g>')
    if "index" in spec.layers:
        out.append('<g id="indices">')
        for c, loc in enumerate(d.geometry.crossing_points):
            x, y = tr(loc)
            out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="#b22222"/>')
            out.append(f'<text x="{_fmt(x + 10)}" y="{_fmt(y - 6)}" {font} '
                       f'font-weight="bold" font-style="italic" fill="#b22222">'
                       f'{escape(_num(d.indices[c]))}</text>')
        out.append('</g>')
    if "orientation-arrows" in spec.layers:
        out.append('<g id="arrows" fill="black">')
        for arc_path in d.geometry.arc_paths:
            j = max(range(len(arc_path) - 1),
                    key=lambda i: (arc_path[i + 1][0] - arc_path[i][0]) ** 2
                    + (arc_path[i + 1][1] - arc_path[i][1]) ** 2)
            (ax, ay), (bx, by) = tr(arc_path[j]), tr(arc_path[j + 1])
            mx, my = (ax + bx) / 2, (ay + by) / 2
            dx, dy = bx - ax, by - ay
            n = (dx * dx + dy * dy) ** 0.5 or 1.0
            ux, uy = dx / n * 7, dy / n * 7
            tip = (mx + ux, my + uy)
            l = (mx - ux - uy * 0.6, my - uy + ux * 0.6)
            r = (mx - ux + uy * 0.6, my - uy - ux * 0.6)
            out.append('<polygon points="' + " ".join(f"{_fmt(a)},{_fmt(b)}" for a, b in (tip, l, r)) + '"/>')
        out.append('</g>')
    if "rotation" in spec.layers:
        out.append(f'<text id="rotation" x="{spec.size - spec.margin}" y="{spec.size - 6}" '
                   f'font-family="sans-serif" font-size="14" text-anchor="end">'
                   f'rot = {escape(_num(rotation_from_windings(d)))}</text>')
    out.append('</svg>')
    return "\n".join(out) + "\n"
