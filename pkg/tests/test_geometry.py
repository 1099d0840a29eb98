import math
import random
from fractions import Fraction

import pytest

from jplus.errors import (EdgeReversal, NotClosed, PointOnCurve, TangentialIntersection,
                          TripleOrHigherPoint)
from jplus.geometry import (PolylineCurve, find_intersections, offset_point, point_winding,
                            to_fraction, turning_number, turning_number_angle_sum,
                            turning_number_smiles, validate_curve)
from jplus.templates import figure_eight, standard_curve

from conftest import brute_force_intersections, random_polyline

SQUARE = PolylineCurve.from_points([(0, 0), (4, 0), (4, 4), (0, 4)])


def test_to_fraction_is_exact():
    assert to_fraction(0.1) == Fraction(3602879701896397, 36028797018963968)
    assert to_fraction("3/7") == Fraction(3, 7)
    with pytest.raises(ValueError):
        to_fraction(float("nan"))
    with pytest.raises(TypeError):
        to_fraction(True)


def test_square_has_no_crossings():
    vc = validate_curve(SQUARE)
    assert vc.n == 0
    assert turning_number(SQUARE) == 1
    assert turning_number(SQUARE.reversed()) == -1


def test_figure_eight_crossing():
    (rec,) = find_intersections(figure_eight())
    assert rec.location == (2, 2)
    assert rec.first_visit == (0, Fraction(1, 2))
    assert rec.second_visit == (2, Fraction(1, 2))


@pytest.mark.parametrize("pts, err", [
    ([(0, 0), (1, 0)], NotClosed),
    ([(0, 0), (1, 0), (1, 0), (0, 1)], NotClosed),
    ([(0, 0), (2, 0), (1, 0), (1, 1)], EdgeReversal),
    # vertex of one edge lying on another edge
    ([(0, 0), (4, 0), (4, 4), (2, 0), (0, 4)], TangentialIntersection),
    # collinear overlap between non-adjacent edges
    ([(0, 0), (4, 0), (4, 2), (3, 2), (3, 0), (1, 0), (1, -2), (0, -2)], TangentialIntersection),
])
def test_degenerate_curves_rejected(pts, err):
    with pytest.raises(err):
        validate_curve(PolylineCurve.from_points(pts))


def test_triple_point_rejected():
    # three strands through the origin
    pts = [(-2, 0), (2, 0), (2, 1), (-2, -1), (-2, 2), (0, 3), (0, -3), (3, -3), (3, 3), (-3, 3)]
    c = PolylineCurve.from_points(pts)
    with pytest.raises((TripleOrHigherPoint, TangentialIntersection)):
        validate_curve(c)
    star = PolylineCurve.from_points([(-1, 0), (1, 0), (1, 1), (-1, -1), (0, -1), (0, 1), (-2, 1)])
    with pytest.raises(TripleOrHigherPoint):
        validate_curve(star)


def test_find_intersections_matches_brute_force(rng):
    for _ in range(15):
        c = random_polyline(rng, 40)
        oracle = brute_force_intersections(c)
        got = [(r.first_visit[0], r.second_visit[0], *r.location) for r in find_intersections(c)]
        assert sorted(got) == oracle


def test_turning_number_two_ways_agree(rng):
    for _ in range(30):
        c = random_polyline(rng, rng.randrange(3, 25), span=100)
        try:
            a = turning_number_angle_sum(c)
        except Exception:
            continue
        assert a == turning_number_smiles(c)


def test_turning_of_standard_curves():
    for j in range(-4, 5):
        assert turning_number(standard_curve(j)) == j


def test_point_winding():
    assert point_winding(SQUARE, (1, 1)) == 1
    assert point_winding(SQUARE.reversed(), (1, 1)) == -1
    assert point_winding(SQUARE, (5, 1)) == 0
    # ray passes exactly through vertices
    assert point_winding(SQUARE, (-1, 0)) == 0
    assert point_winding(SQUARE, (-1, 4)) == 0
    with pytest.raises(PointOnCurve):
        point_winding(SQUARE, (2, 0))
    eight = figure_eight()
    assert {point_winding(eight, (1, 2)), point_winding(eight, (3, 2))} == {1, -1}


def test_offset_point_stays_beside_segment():
    p = offset_point(SQUARE, (0, 0), (4, 0), +1, skip=(0,))
    assert point_winding(SQUARE, p) == 1
    q = offset_point(SQUARE, (0, 0), (4, 0), -1, skip=(0,))
    assert point_winding(SQUARE, q) == 0


def test_affine_transform_and_reverse():
    c = SQUARE.transformed(0, -1, 1, 0, 10, 0)
    assert c.vertices[1] == (10, 4)
    assert c.reversed().reversed() == c
    assert turning_number(SQUARE.transformed(-1, 0, 0, 1)) == -1
