"""Explicit coordinates for the named curves.

Every template is a counter-clockwise circle carrying inward "kinks": a
kink of depth m leaves the circle, spirals m times counter-clockwise and
returns along a nearly radial segment that crosses each turn once.  Depth
m contributes m crossings, m to the rotation number and nested faces of
winding 2, ..., m + 1.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .geometry import PolylineCurve

_GRID = 10 ** 6
_TURN_SAMPLES = 24


def _q(v: float) -> Fraction:
    return Fraction(round(v * _GRID), _GRID)


def _kink_points(theta, R, depth, r0=1.5, delta=0.35):
    """Local spiral for one kink anchored at angle theta (exit end)."""
    px, py = R * math.cos(theta), R * math.sin(theta)
    tx, ty = -math.sin(theta), math.cos(theta)
    nx, ny = -math.cos(theta), -math.sin(theta)

    def place(x, y):
        return (px + x * tx + y * nx, py + x * ty + y * ny)

    v0 = r0 + 1.0           # spiral centre depth below the circle
    r_end = r0 / (depth + 1)
    phi0 = -math.pi / 2 - delta
    steps = _TURN_SAMPLES * depth
    pts = []
    for k in range(steps + 1):
        s = k / steps
        phi = phi0 + 2 * math.pi * depth * s
        r = r0 + (r_end - r0) * s
        pts.append(place(r * math.cos(phi), v0 + r * math.sin(phi)))
    return pts


def kinked_circle(depths, clockwise=False) -> PolylineCurve:
    """Circle with one inward kink of each listed depth, evenly spaced."""
    depths = [d for d in depths if d > 0]
    count = max(len(depths), 1)
    R = max(10.0, 4.0 * count)
    per_gap = 8
    total = per_gap * count
    step = 2 * math.pi / total
    pts = []
    for i in range(total):
        theta = i * step
        slot, pos = divmod(i, per_gap)
        if pos == 0 and slot < len(depths):
            pts.extend(_kink_points(theta, R, depths[slot]))
        pts.append((R * math.cos(theta), R * math.sin(theta)))
    exact = []
    for x, y in pts:
        p = (_q(x), _q(y))
        if not exact or exact[-1] != p:
            exact.append(p)
    if exact[0] == exact[-1]:
        exact.pop()
    curve = PolylineCurve(tuple(exact))
    return curve.reversed() if clockwise else curve


def figure_eight() -> PolylineCurve:
    """K0: rot 0, one crossing."""
    return PolylineCurve.from_points([(0, 0), (4, 4), (4, 0), (0, 4)])


def standard_curve(j: int) -> PolylineCurve:
    """K_j: circle with |j| - 1 disjoint interior loops, rotation j."""
    if j == 0:
        return figure_eight()
    return kinked_circle([1] * (abs(j) - 1), clockwise=j < 0)


def inner_loop_curve(j: int) -> PolylineCurve:
    """A_j: circle with a single (|j| - 1)-fold nested interior loop."""
    if j == 0:
        return figure_eight()
    return kinked_circle([abs(j) - 1], clockwise=j < 0)


def single_and_double_loop() -> PolylineCurve:
    """Circle carrying one single and one double interior loop (J+ = -8)."""
    return kinked_circle([1, 2])
