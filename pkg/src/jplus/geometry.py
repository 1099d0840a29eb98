"""Closed polylines with exact rational coordinates.

A curve is the closed polygonal loop through its vertices in order.  All
predicates are exact: coordinates are rescaled to a common integer grid
before any orientation test, so genericity (transversality, no triple
points) is decided rather than estimated.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (EdgeReversal, IdentityViolation, NotClosed, PointOnCurve,
                     TangentialIntersection, TripleOrHigherPoint)

Point = tuple  # (Fraction, Fraction)


def to_fraction(value) -> Fraction:
    """Convert an int, float, Fraction or ``"p/q"`` string exactly."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, (int, float)):
        if isinstance(value, float) and not math.isfinite(value):
            raise ValueError(f"non-finite coordinate {value!r}")
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot read coordinate {value!r}")


@dataclass(frozen=True)
class PolylineCurve:
    vertices: tuple

    @classmethod
    def from_points(cls, points: Iterable) -> "PolylineCurve":
        return cls(tuple((to_fraction(x), to_fraction(y)) for x, y in points))

    def __len__(self):
        return len(self.vertices)

    def edge(self, i):
        v = self.vertices
        return v[i], v[(i + 1) % len(v)]

    def reversed(self) -> "PolylineCurve":
        return PolylineCurve(tuple(reversed(self.vertices)))

    def transformed(self, a, b, c, d, tx=0, ty=0) -> "PolylineCurve":
        """Apply the affine map (x, y) -> (a x + b y + tx, c x + d y + ty)."""
        a, b, c, d, tx, ty = map(to_fraction, (a, b, c, d, tx, ty))
        return PolylineCurve(tuple((a * x + b * y + tx, c * x + d * y + ty)
                                   for x, y in self.vertices))

    def to_floats(self):
        return [(float(x), float(y)) for x, y in self.vertices]


@dataclass(frozen=True, order=True)
class DoublePointRecord:
    # (edge index, parameter in (0, 1)) for both passes; first < second.
    first_visit: tuple
    second_visit: tuple
    location: tuple


@dataclass(frozen=True)
class ValidatedCurve:
    curve: PolylineCurve
    double_points: tuple

    @property
    def n(self):
        return len(self.double_points)


# -- exact integer kernel ---------------------------------------------------

def _integer_grid(curve: PolylineCurve):
    """Scale all coordinates by the lcm of their denominators."""
    scale = 1
    for x, y in curve.vertices:
        scale = math.lcm(scale, x.denominator, y.denominator)
    pts = [(int(x * scale), int(y * scale)) for x, y in curve.vertices]
    return pts, scale


def _orient(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _on_closed_segment(a, b, p):
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def _check_structure(pts):
    m = len(pts)
    if m < 3:
        raise NotClosed(f"a closed polyline needs at least 3 vertices, got {m}")
    for i in range(m):
        if pts[i] == pts[(i + 1) % m]:
            raise NotClosed(f"zero-length edge at vertex {i}")
    for i in range(m):
        p, v, q = pts[i - 1], pts[i], pts[(i + 1) % m]
        d1 = (v[0] - p[0], v[1] - p[1])
        d2 = (q[0] - v[0], q[1] - v[1])
        if d1[0] * d2[1] - d1[1] * d2[0] == 0 and d1[0] * d2[0] + d1[1] * d2[1] < 0:
            raise EdgeReversal(f"the curve doubles back at vertex {i}")


def _adjacent(i, j, m):
    return j == i + 1 or (i == 0 and j == m - 1)


def _edge_pair(pts, i, j):
    """Classify edges i, j (non-adjacent).  Returns (t_i, t_j) or None."""
    m = len(pts)
    a, b = pts[i], pts[(i + 1) % m]
    c, d = pts[j], pts[(j + 1) % m]
    o1, o2 = _orient(a, b, c), _orient(a, b, d)
    o3, o4 = _orient(c, d, a), _orient(c, d, b)
    if o1 == o2 == 0:
        # collinear: any contact is an overlap or an endpoint touch
        if (_on_closed_segment(a, b, c) or _on_closed_segment(a, b, d)
                or _on_closed_segment(c, d, a)):
            raise TangentialIntersection(f"edges {i} and {j} overlap")
        return None
    if (o1 > 0 and o2 < 0 or o1 < 0 and o2 > 0) and (o3 > 0 and o4 < 0 or o3 < 0 and o4 > 0):
        # a + t (b - a), t = o3 / (o3 - o4); c + s (d - c), s = o1 / (o1 - o2)
        return Fraction(o3, o3 - o4), Fraction(o1, o1 - o2)
    touching = ((o1 == 0 and _on_closed_segment(a, b, c))
                or (o2 == 0 and _on_closed_segment(a, b, d))
                or (o3 == 0 and _on_closed_segment(c, d, a))
                or (o4 == 0 and _on_closed_segment(c, d, b)))
    if touching:
        raise TangentialIntersection(
            f"edges {i} and {j} meet at a segment endpoint")
    return None


def _candidate_pairs(pts):
    """Edge pairs whose bounding boxes overlap (sort-and-sweep on x)."""
    m = len(pts)
    boxes = []
    for i in range(m):
        a, b = pts[i], pts[(i + 1) % m]
        boxes.append((min(a[0], b[0]), max(a[0], b[0]),
                      min(a[1], b[1]), max(a[1], b[1]), i))
    boxes.sort()
    active = []
    for x0, x1, y0, y1, i in boxes:
        active = [bx for bx in active if bx[1] >= x0]
        for bx in active:
            if bx[2] <= y1 and y0 <= bx[3]:
                j = bx[4]
                yield (i, j) if i < j else (j, i)
        active.append((x0, x1, y0, y1, i))


def find_intersections(curve: PolylineCurve) -> list:
    """All transverse interior double points, sorted by first visit.

    Raises the degeneracy errors of :func:`validate_curve`.
    """
    pts, scale = _integer_grid(curve)
    _check_structure(pts)
    m = len(pts)
    records = []
    for i, j in _candidate_pairs(pts):
        if _adjacent(i, j, m):
            continue
        hit = _edge_pair(pts, i, j)
        if hit is None:
            continue
        ti, tj = hit
        a, b = curve.edge(i)
        loc = (a[0] + ti * (b[0] - a[0]), a[1] + ti * (b[1] - a[1]))
        records.append(DoublePointRecord((i, ti), (j, tj), loc))
    records.sort()
    seen = {}
    for r in records:
        if r.location in seen:
            raise TripleOrHigherPoint(
                f"point {tuple(map(str, r.location))} is passed three or more times")
        seen[r.location] = r
    return records


def validate_curve(curve: PolylineCurve) -> ValidatedCurve:
    """Check that ``curve`` is a generic immersed loop and list its double points."""
    return ValidatedCurve(curve, tuple(find_intersections(curve)))


# -- rotation number --------------------------------------------------------

def _directions(curve):
    pts, _ = _integer_grid(curve)
    _check_structure(pts)
    m = len(pts)
    return [(pts[(i + 1) % m][0] - pts[i][0], pts[(i + 1) % m][1] - pts[i][1])
            for i in range(m)]


def turning_number_angle_sum(curve: PolylineCurve) -> int:
    """Sum of signed exterior angles divided by 2 pi."""
    dirs = _directions(curve)
    total = 0.0
    for k in range(len(dirs)):
        a, b = dirs[k - 1], dirs[k]
        total += math.atan2(a[0] * b[1] - a[1] * b[0], a[0] * b[0] + a[1] * b[1])
    turns = total / (2 * math.pi)
    result = round(turns)
    if abs(turns - result) > 1e-6:
        raise IdentityViolation(f"angle sum is not a whole number of turns: {turns}")
    return result


def _upper(d):
    # half-open upper half plane: angles in [0, pi)
    return d[1] > 0 or (d[1] == 0 and d[0] > 0)


def turning_number_smiles(curve: PolylineCurve) -> int:
    """Signed count of the tangent passing through the +x direction.

    Each turn between consecutive edges is less than pi in magnitude, so the
    tangent passes angle 0 counter-clockwise exactly when it moves from the
    lower to the upper half plane with a left turn (a "smile"), and
    clockwise in the mirrored situation (a "frown").
    """
    dirs = _directions(curve)
    count = 0
    for k in range(len(dirs)):
        a, b = dirs[k - 1], dirs[k]
        cr = a[0] * b[1] - a[1] * b[0]
        if cr > 0 and not _upper(a) and _upper(b):
            count += 1
        elif cr < 0 and _upper(a) and not _upper(b):
            count -= 1
    return count


def turning_number(curve: PolylineCurve) -> int:
    """Rotation number of the closed polyline, computed two ways."""
    by_angles = turning_number_angle_sum(curve)
    by_smiles = turning_number_smiles(curve)
    if by_angles != by_smiles:
        raise IdentityViolation("angle sum and smile count disagree",
                                by_angles, by_smiles)
    return by_smiles


# -- winding number of a point ----------------------------------------------

def point_winding(curve: PolylineCurve, p) -> int:
    """Winding number of ``curve`` around ``p`` by exact ray casting.

    The ray leaves ``p`` in direction (1, eps) with eps symbolic, so a
    vertex level with ``p`` counts as below the ray when it lies ahead of
    ``p`` and above it when it lies behind.
    """
    px, py = to_fraction(p[0]), to_fraction(p[1])
    verts = curve.vertices
    m = len(verts)

    def above(v):
        return v[1] > py or (v[1] == py and v[0] < px)

    w = 0
    for i in range(m):
        a, b = verts[i], verts[(i + 1) % m]
        o = (b[0] - a[0]) * (py - a[1]) - (b[1] - a[1]) * (px - a[0])
        if o == 0 and _on_closed_segment(a, b, (px, py)):
            raise PointOnCurve(f"point lies on edge {i}")
        ua, ub = above(a), above(b)
        if not ua and ub and o > 0:
            w += 1
        elif ua and not ub and o < 0:
            w -= 1
    return w


def segment_distance2(p, a, b) -> Fraction:
    """Squared distance from point p to the closed segment ab."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    t = ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / Fraction(dx * dx + dy * dy)
    t = min(max(t, Fraction(0)), Fraction(1))
    qx, qy = a[0] + t * dx - p[0], a[1] + t * dy - p[1]
    return qx * qx + qy * qy


def offset_point(curve: PolylineCurve, a, b, side: int, skip: Sequence = ()):
    """A point just beside the midpoint of segment ab (left if side=+1).

    The offset is chosen below half the distance from the midpoint to every
    curve edge not listed in ``skip`` so the point stays in the face that
    borders ab on that side.
    """
    mx, my = (a[0] + b[0]) / 2, (a[1] + b[1]) / 2
    nx, ny = -(b[1] - a[1]) * side, (b[0] - a[0]) * side
    n2 = nx * nx + ny * ny
    dmin = None
    m = len(curve.vertices)
    for i in range(m):
        if i in skip:
            continue
        u, v = curve.edge(i)
        d = segment_distance2((mx, my), u, v)
        if dmin is None or d < dmin:
            dmin = d
    t = Fraction(1)
    if dmin is not None:
        while t * t * n2 * 4 >= dmin:
            t /= 2
    return (mx + t * nx, my + t * ny)
