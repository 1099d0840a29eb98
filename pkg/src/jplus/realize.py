"""Straight-line realization of combinatorial diagrams.

The diagram becomes a plane graph: one vertex per crossing and two per arc,
with the crossing rotations as the combinatorial embedding.  networkx draws
it on an integer grid (Chrobak-Payne).  networkx makes the face with the
most vertices the outer one, so a long pendant path is hung inside the face
that must end up unbounded.  Each crossing vertex is then opened into two
short chords that cross transversally.  The result is re-traced and
compared with the input before it is returned.
"""
from __future__ import annotations

import math
from fractions import Fraction

import networkx as nx

from .diagram import CurveDiagram, LEFT, canonical_form, trace_diagram
from .errors import CurveError, DiagramError, PlacementFailure
from .geometry import PolylineCurve

_ATTEMPTS = 20


def _square(side):
    pts = [(0, 0), (8, 0), (8, 8), (0, 8)]
    # outer face on the right of a counter-clockwise loop
    if side == LEFT:
        pts.reverse()
    return PolylineCurve.from_points(pts)


def _plane_graph(d: CurveDiagram):
    emb = {}
    m = len(d.word)
    for k in range(m):
        a0, a1 = ("a", k, 0), ("a", k, 1)
        c0, c1 = ("c", d.word[k]), ("c", d.word[(k + 1) % m])
        emb[a0] = [c0, a1]
        emb[a1] = [a0, c1]
    for c in range(d.n):
        ccw = [("a", arc, 0) if out else ("a", arc, 1) for arc, out in d.rotation(c)]
        emb[("c", c)] = list(reversed(ccw))
    # pendant path inside the outer face, hung from the first node of the arc
    k, s = d.outer
    a0 = ("a", k, 0)
    back, ahead = emb[a0]
    tail = ("f", 0)
    # clockwise from the forward direction is the right-hand side
    emb[a0] = [ahead, back, tail] if s == LEFT else [ahead, tail, back]
    length = len(emb) + 4
    for i in range(length):
        nb = [("f", i - 1) if i else a0]
        if i + 1 < length:
            nb.append(("f", i + 1))
        emb[("f", i)] = nb
    return emb


def _layout(d: CurveDiagram):
    emb = nx.PlanarEmbedding()
    emb.set_data(_plane_graph(d))
    return nx.combinatorial_embedding_to_pos(emb)


def _cut(v, w, eps):
    dx, dy = w[0] - v[0], w[1] - v[1]
    norm = math.hypot(dx, dy)
    # float direction snapped to a fine grid; exact collinearity is unlikely
    # and any degeneracy is caught by re-validation
    grid = 1 << 20
    ux = Fraction(round(dx / norm * grid), grid)
    uy = Fraction(round(dy / norm * grid), grid)
    return (v[0] + eps * ux, v[1] + eps * uy)


def _polyline(d: CurveDiagram, pos, eps, mirror=False):
    m = len(d.word)
    P = {node: (Fraction(-x if mirror else x), Fraction(y)) for node, (x, y) in pos.items()}
    pts = []
    for k in range(m):
        c0, c1 = ("c", d.word[k]), ("c", d.word[(k + 1) % m])
        a0, a1 = P[("a", k, 0)], P[("a", k, 1)]
        pts.append(_cut(P[c0], a0, eps))
        pts.append(a0)
        pts.append(a1)
        pts.append(_cut(P[c1], a1, eps))
    return PolylineCurve(tuple(pts))


def realize(d: CurveDiagram) -> CurveDiagram:
    """A geometric diagram isomorphic to ``d`` (same plane curve)."""
    if d.n == 0:
        return trace_diagram(_square(d.faces[d.outer_face][0][1]))
    target = canonical_form(d)
    pos = _layout(d)
    eps = Fraction(1, 4)
    for _ in range(_ATTEMPTS):
        for mirror in (False, True):
            curve = _polyline(d, pos, eps, mirror)
            try:
                traced = trace_diagram(curve)
            except (CurveError, DiagramError):
                continue
            if canonical_form(traced) == target:
                return traced
        eps /= 2
    raise PlacementFailure(f"could not realize a diagram with {d.n} crossings")


def realize_curve(d: CurveDiagram) -> PolylineCurve:
    return realize(d).geometry.curve
