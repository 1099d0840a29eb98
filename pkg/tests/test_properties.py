from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from jplus.diagram import (CurveDiagram, canonical_form, face_sample_point, from_gauss_code,
                           reverse_orientation, to_gauss_code, trace_diagram)
from jplus.errors import CurveError
from jplus.geometry import PolylineCurve, point_winding, turning_number
from jplus.invariants import arnold_slack, jplus_viro, rotation_from_windings
from jplus.moves import random_homotopy
from jplus.realize import realize
from jplus.templates import standard_curve

points = st.lists(st.tuples(st.integers(-40, 40), st.integers(-40, 40)),
                  min_size=3, max_size=14, unique=True)


def traced(pts):
    try:
        return trace_diagram(PolylineCurve.from_points(pts))
    except CurveError:
        assume(False)


@settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(points)
def test_random_polylines(pts):
    d = traced(pts)
    c = d.geometry.curve
    j = jplus_viro(d)
    assert j % 2 == 0 and arnold_slack(d) >= 0
    assert turning_number(c) == rotation_from_windings(d)
    assert len(d.faces) == d.n + 2
    for f in range(len(d.faces)):
        assert point_winding(c, face_sample_point(d, f)) == d.windings[f]
    r = reverse_orientation(d)
    assert jplus_viro(r) == j
    assert canonical_form(from_gauss_code(str(to_gauss_code(d)))) == canonical_form(d)


@settings(max_examples=40, deadline=None)
@given(st.integers(-4, 4), st.integers(0, 10 ** 6), st.integers(1, 40))
def test_walk_then_realize(j, seed, steps):
    d0 = trace_diagram(standard_curve(j))
    t = random_homotopy(CurveDiagram(d0.word, d0.signs, d0.outer), steps, seed=seed,
                        max_crossings=14)
    g = realize(t.final)
    assert jplus_viro(g) == t.final_jplus
    assert turning_number(g.geometry.curve) == j
