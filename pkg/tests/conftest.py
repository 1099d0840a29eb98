import math
import random
from fractions import Fraction

import pytest

from jplus.geometry import PolylineCurve

_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call" and not (rep.when == "setup" and rep.failed):
        return
    n, title = mark.args
    ok = rep.passed
    prev = _ACCEPTANCE.get(n, (title, True))
    _ACCEPTANCE[n] = (title, prev[1] and ok)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        title, ok = _ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {title}")


def random_polyline(rng: random.Random, m: int, span=10 ** 6) -> PolylineCurve:
    """Closed polyline through m random integer points (generic with high probability)."""
    pts = [(rng.randrange(span), rng.randrange(span)) for _ in range(m)]
    return PolylineCurve.from_points(pts)


def brute_force_intersections(curve: PolylineCurve):
    """All-pairs exact crossing points, written independently of the library.

    Returns a sorted list of (i, j, x, y) for non-adjacent edges i < j whose
    relative interiors cross; None if any degenerate contact is found.
    """
    scale = math.lcm(*(q.denominator for p in curve.vertices for q in p))
    v = [(int(x * scale), int(y * scale)) for x, y in curve.vertices]
    m = len(v)
    out = []
    for i in range(m):
        (ax, ay), (bx, by) = v[i], v[(i + 1) % m]
        for j in range(i + 1, m):
            if j == i + 1 or (i == 0 and j == m - 1):
                continue
            (cx, cy), (dx, dy) = v[j], v[(j + 1) % m]
            # solve a + t(b - a) = c + s(d - c) by Cramer's rule
            rx, ry = bx - ax, by - ay
            sx, sy = dx - cx, dy - cy
            den = rx * sy - ry * sx
            if den == 0:
                continue
            tn = (cx - ax) * sy - (cy - ay) * sx
            sn = (cx - ax) * ry - (cy - ay) * rx
            if den < 0:
                den, tn, sn = -den, -tn, -sn
            # t = tn/den and s = sn/den, compared in integers
            if 0 < tn < den and 0 < sn < den:
                t = Fraction(tn, den)
                out.append((i, j, (ax + t * rx) / scale, (ay + t * ry) / scale))
            elif 0 <= tn <= den and 0 <= sn <= den:
                return None
    return sorted(out)


@pytest.fixture
def rng():
    return random.Random(12345)
