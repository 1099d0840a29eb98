"""Named curves and sum constructions with predicted J⁺.

Sums are spliced at the level of visit tokens and the result is realized
as a polyline by ``realize``.  Every construction returns the realized
curve together with the value of J⁺ and rot that the corresponding sum
formula predicts; callers compare the two.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import templates
from .diagram import LEFT, RIGHT, CurveDiagram, assemble, tokens, trace_diagram
from .errors import (ArcNotOnFace, ArcNotOuter, FaceUnbounded, OrientationMismatch)
from .geometry import PolylineCurve, ValidatedCurve
from .invariants import jplus_viro, rotation_from_windings, sum_prediction
from .realize import realize

standard_curve = templates.standard_curve
inner_loop_curve = templates.inner_loop_curve


@dataclass(frozen=True)
class SumSpec:
    base: object                 # curve or diagram K
    face: int                    # target face C of K
    arc: int                     # arc A on the boundary of C
    inserted: object             # curve or diagram K'
    inserted_arc: int            # arc A' of K' on its unbounded face
    omega_adj: Optional[int] = None   # checked against the geometry when given


@dataclass(frozen=True)
class PredictedResult:
    curve: PolylineCurve
    diagram: CurveDiagram
    predicted_jplus: int
    predicted_rot: int
    formula_tag: str
    flipped: bool = False
    omega_c: Optional[int] = None
    omega_adj: Optional[int] = None
    unbounded_face: bool = False


def as_diagram(obj) -> CurveDiagram:
    if isinstance(obj, CurveDiagram):
        return obj
    if isinstance(obj, (PolylineCurve, ValidatedCurve)):
        return trace_diagram(obj)
    raise TypeError(f"expected a curve or diagram, got {type(obj).__name__}")


# -- token helpers ----------------------------------------------------------

class _Oriented:
    """Token view of a diagram, optionally with reversed orientation."""

    def __init__(self, d: CurveDiagram, tag, reverse=False):
        seq, rot = tokens(d, tag)
        self.d = d
        self.reverse = reverse
        self.n = d.n
        m = len(seq)
        if reverse:
            self.seq = list(reversed(seq))
            self.rot = {k: tuple((t, not o) for t, o in r) for k, r in rot.items()}
        else:
            self.seq = list(seq)
            self.rot = rot
        self._old = seq
        self._m = m

    def arc_start(self, k):
        """Start token of old arc k in this orientation (None if n == 0)."""
        if self._m == 0:
            return None
        return self._old[(k + 1) % self._m] if self.reverse else self._old[k]

    def side(self, s):
        return -s if self.reverse else s

    def tour_after(self, tok):
        """Whole tour starting just after ``tok`` and ending with it."""
        if tok is None:
            return []
        i = self.seq.index(tok)
        return self.seq[i + 1:] + self.seq[:i + 1]


def _splice(host: _Oriented, host_tok, guest_tour, before=(), after=()):
    if host.n == 0:
        return list(before) + guest_tour + list(after)
    out = []
    for t in host.seq:
        out.append(t)
        if t == host_tok:
            out += list(before) + guest_tour + list(after)
    return out


def _outer_dart_side(d: CurveDiagram, arc, want=None):
    """Side of ``arc`` facing the unbounded face, preferring ``want``."""
    sides = [s for s in (LEFT, RIGHT) if d.face_of[(arc, s)] == d.outer_face]
    if not sides:
        raise ArcNotOuter(f"arc {arc} does not bound the unbounded face")
    return want if want in sides else sides[0]


def _check_arc(d: CurveDiagram, arc):
    if not 0 <= arc < d.num_arcs:
        raise ArcNotOnFace(f"no arc {arc} (diagram has {d.num_arcs})")


def _host_outer(host: _Oriented, seq):
    k, s = host.d.outer
    tok = host.arc_start(k)
    return (seq[-1] if tok is None else tok, s)


def _finish(d, pred_j, pred_rot, tag, **kw):
    g = realize(d)
    return PredictedResult(g.geometry.curve, g, pred_j, pred_rot, tag, **kw)


# -- sums -------------------------------------------------------------------

def _interior_setup(spec: SumSpec, allow_unbounded=False):
    K, P = as_diagram(spec.base), as_diagram(spec.inserted)
    _check_arc(K, spec.arc)
    _check_arc(P, spec.inserted_arc)
    if not 0 <= spec.face < len(K.faces):
        raise ArcNotOnFace(f"no face {spec.face}")
    unbounded = spec.face == K.outer_face
    if unbounded and not allow_unbounded:
        raise FaceUnbounded("interior sums need a bounded face")
    sides = [s for s in (LEFT, RIGHT) if K.face_of[(spec.arc, s)] == spec.face]
    if not sides:
        raise ArcNotOnFace(f"arc {spec.arc} does not bound face {spec.face}")
    s_c = sides[0]
    omega_c = K.windings[spec.face]
    omega_adj = omega_c - K.face_winding((spec.arc, -s_c))
    if spec.omega_adj is not None and spec.omega_adj != omega_adj:
        raise ArcNotOnFace(f"given omega_adj {spec.omega_adj} but the face gives {omega_adj}")
    # the inserted curve must run parallel to A: its outer face on the far side
    s_out = _outer_dart_side(P, spec.inserted_arc, want=-s_c)
    flip = s_out != -s_c
    return K, P, s_c, omega_c, omega_adj, flip, unbounded


def interior_sum(spec: SumSpec, allow_unbounded=False) -> PredictedResult:
    """Insert K' into face C and cross-connect arcs A and A' (one new crossing)."""
    K, P, s_c, omega_c, omega_adj, flip, unbounded = _interior_setup(spec, allow_unbounded)
    host = _Oriented(K, "K")
    guest = _Oriented(P, "P", reverse=flip)
    z1, z2 = ("new", "Z", 0), ("new", "Z", 1)
    tour = guest.tour_after(guest.arc_start(spec.inserted_arc))
    seq = _splice(host, host.arc_start(spec.arc), tour, [z1], [z2])
    rot = dict(host.rot)
    rot.update(guest.rot)
    rz = ((z1, True), (z2, False), (z1, False), (z2, True))
    rot[("new", "Z")] = rz if s_c == LEFT else rz[::-1]
    if unbounded:
        tok = host.arc_start(spec.arc)
        outer = (z2 if tok is None else tok, s_c)
    else:
        outer = _host_outer(host, seq)
    d = assemble(seq, rot, outer)

    jk, jp = jplus_viro(K), jplus_viro(P)
    rot_p = rotation_from_windings(P) * (-1 if flip else 1)
    pred = sum_prediction("interior", jk, jp, omega_c=omega_c, rot_k2=rot_p)
    pred_rot = rotation_from_windings(K) + rot_p
    return _finish(d, pred, pred_rot, "interior-sum", flipped=flip,
                   omega_c=omega_c, omega_adj=omega_adj, unbounded_face=unbounded)


def tunnel_interior_sum(spec: SumSpec) -> PredictedResult:
    """Insert K' (reversed) into face C and join A, A' by two parallel segments."""
    K, P, s_c, omega_c, omega_adj, flip, _ = _interior_setup(spec)
    host = _Oriented(K, "K")
    # parallel joins need A' anti-parallel to A: the opposite of the
    # cross-connected orientation
    guest = _Oriented(P, "P", reverse=not flip)
    tour = guest.tour_after(guest.arc_start(spec.inserted_arc))
    seq = _splice(host, host.arc_start(spec.arc), tour)
    rot = dict(host.rot)
    rot.update(guest.rot)
    if not seq:
        outer = (None, K.outer[1])
    else:
        outer = _host_outer(host, seq)
    d = assemble(seq, rot, outer)

    jk, jp = jplus_viro(K), jplus_viro(P)
    rot_p = rotation_from_windings(P) * (-1 if flip else 1)
    pred = sum_prediction("tunnel", jk, jp, omega_c=omega_c, omega_adj=omega_adj,
                          rot_k2=rot_p)
    pred_rot = rotation_from_windings(K) - rot_p + omega_adj
    return _finish(d, pred, pred_rot, "tunnel-interior-sum", flipped=not flip,
                   omega_c=omega_c, omega_adj=omega_adj)


def _band(K, arc1, P, arc2, reverse_p, s1):
    host = _Oriented(K, "K")
    guest = _Oriented(P, "P", reverse=reverse_p)
    tour = guest.tour_after(guest.arc_start(arc2))
    seq = _splice(host, host.arc_start(arc1), tour)
    rot = dict(host.rot)
    rot.update(guest.rot)
    outer = (None, s1) if not seq else _host_outer(host, seq)
    return assemble(seq, rot, outer), seq


def connected_sum(k1, arc1, k2, arc2, mode="strict") -> PredictedResult:
    """Join two curves along arcs on their unbounded faces by a parallel band.

    The band needs the unbounded face on the same side of both arcs.  When
    it is not, ``mode`` decides: "strict" raises, "flip" reverses k2 and
    "bridge" puts a figure eight between the two curves.
    """
    K, P = as_diagram(k1), as_diagram(k2)
    _check_arc(K, arc1)
    _check_arc(P, arc2)
    s1 = _outer_dart_side(K, arc1)
    s2 = _outer_dart_side(P, arc2, want=s1)
    jk, jp = jplus_viro(K), jplus_viro(P)
    rk, rp = rotation_from_windings(K), rotation_from_windings(P)
    pred = sum_prediction("connected", jk, jp)
    if s1 == s2:
        d, _ = _band(K, arc1, P, arc2, False, s1)
        return _finish(d, pred, rk + rp + s1, "connected-sum")
    if mode == "strict":
        raise OrientationMismatch(
            "the unbounded face lies on opposite sides of the two arcs; "
            "use mode 'flip' or 'bridge'")
    if mode == "flip":
        d, _ = _band(K, arc1, P, arc2, True, s1)
        return _finish(d, pred, rk - rp + s1, "connected-sum", flipped=True)
    if mode == "bridge":
        eight = trace_diagram(templates.figure_eight())
        lobe = {s: k for k in range(eight.num_arcs) for s in (LEFT, RIGHT)
                if eight.face_of[(k, s)] == eight.outer_face}
        first, seq = _band(K, arc1, eight, lobe[s1], False, s1)
        # locate the other lobe of the eight inside the first sum
        other = ("P", eight.word[lobe[s2]], _visit_number(eight, lobe[s2]))
        d, _ = _band(first, seq.index(other), P, arc2, False, s2)
        return _finish(d, pred, rk + rp, "connected-sum+figure-eight")
    raise ValueError(f"unknown mode {mode!r}")


def _visit_number(d: CurveDiagram, k):
    c = d.word[k]
    return d.occurrences[c].index(k)


def add_interior_loop(k, face: int, arc: int, m: int = 0) -> PredictedResult:
    """Add an (m+1)-fold interior loop on ``arc`` reaching into ``face``.

    m = 0 adds a single loop.  The unbounded face is accepted and flagged.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    K = as_diagram(k)
    P = trace_diagram(templates.inner_loop_curve(m + 1))
    a2 = P.faces[P.outer_face][0][0]
    res = interior_sum(SumSpec(K, face, arc, P, a2), allow_unbounded=True)
    pred = sum_prediction("loop", jplus_viro(K), omega_c=res.omega_c,
                          omega_adj=res.omega_adj, m=m)
    assert pred == res.predicted_jplus
    tag = f"interior-loop({m + 1})" + (" into unbounded face" if res.unbounded_face else "")
    return PredictedResult(res.curve, res.diagram, pred, res.predicted_rot, tag,
                           flipped=res.flipped, omega_c=res.omega_c,
                           omega_adj=res.omega_adj, unbounded_face=res.unbounded_face)
