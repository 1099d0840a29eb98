"""Reconstructions of the worked examples.

The example curves are rebuilt from short descriptions (which
standard curve, how many tangencies, which sum) rather than from
digitized coordinates.  Each builder returns a realized geometric diagram.
"""
from __future__ import annotations

from .constructions import SumSpec, as_diagram, connected_sum
from .diagram import CurveDiagram, trace_diagram
from .moves import DIRECT_POS, INVERSE_POS, apply_move, positive_sites
from .realize import realize
from . import templates


def _strip(d: CurveDiagram) -> CurveDiagram:
    return CurveDiagram(d.word, d.signs, d.outer)


def _first(d, kind):
    """First site of ``kind``, preferring bounded faces and distinct arcs."""
    sites = [s for s in positive_sites(d) if s.kind == kind]
    sites.sort(key=lambda s: (s.face == d.outer_face, s.darts[0] == s.darts[1]))
    return sites[0] if sites else None


def with_direct_tangencies(curve, count: int) -> CurveDiagram:
    """Push ``count`` pairs of co-oriented strands through each other.

    Direct sites are taken in a fixed order inside bounded faces.  A curve
    without any (the circle) first gets one inverse tangency, which leaves
    J⁺ unchanged.
    """
    d = _strip(as_diagram(curve))
    done = 0
    while done < count:
        site = _first(d, DIRECT_POS)
        if site is None:
            d = apply_move(d, _first(d, INVERSE_POS)).diagram
            continue
        d = apply_move(d, site).diagram
        done += 1
    return realize(d)


def worked_example():
    """Circle with a single and a double interior loop: J⁺ = -8."""
    return trace_diagram(templates.single_and_double_loop())


def loops_touching_circle():
    """K_4 with two of its loops pushed across the circle: J⁺ = -2."""
    return with_direct_tangencies(templates.standard_curve(4), 2)


def circle_with_tangencies():
    """A circle after 12 direct positive tangencies: J⁺ = 24."""
    return with_direct_tangencies(templates.standard_curve(1), 12)


def k2_with_tangencies():
    """K_2 whose loop crosses the circle through 5 tangencies: J⁺ = 8."""
    return with_direct_tangencies(templates.standard_curve(2), 5)


def eight_chain(count=8):
    """A circle connected in a chain to ``count`` figure eights: J⁺ = 0."""
    d = trace_diagram(templates.standard_curve(1))
    eight = trace_diagram(templates.figure_eight())
    for _ in range(count):
        a1 = d.faces[d.outer_face][0][0]
        a2 = eight.faces[eight.outer_face][0][0]
        d = connected_sum(d, a1, eight, a2, mode="flip").diagram
    return d


def interior_sum_pair():
    """The interior-sum example: K with J⁺ 2 and rot 3, K' with J⁺ -2 and rot 3.

    Returns (K, K', spec) where the spec targets a face with winding 2 next
    to a face of winding 1.
    """
    k = with_direct_tangencies(templates.standard_curve(3), 3)
    k2 = with_direct_tangencies(templates.standard_curve(3), 1)
    spec = None
    for f, cyc in enumerate(k.faces):
        if k.windings[f] != 2:
            continue
        for arc, s in cyc:
            if k.face_winding((arc, -s)) == 1:
                spec = (f, arc)
                break
        if spec:
            break
    a2 = k2.faces[k2.outer_face][0][0]
    return k, k2, SumSpec(k, spec[0], spec[1], k2, a2)
