"""Combinatorial curve diagrams.

A diagram with n crossings is stored as its signed Gauss word: the cyclic
sequence of 2n crossing labels met along the curve, one sign per crossing,
and a marker for the unbounded face.  Everything else (the rotation system,
faces, winding numbers and indices) is derived.

Conventions
-----------
* Visit ``i`` is the i-th entry of the word; arc ``i`` runs from visit ``i``
  to visit ``i + 1``.  A diagram without crossings has a single arc 0.
* A dart is ``(arc, side)`` with side +1 for the left of the arc and -1 for
  the right.  Walking the boundary of a face keeps the face on the left, so
  the face on the right of arc k is walked by traversing k backwards.
* A crossing has sign +1 when its second visit crosses the first from right
  to left.  Around the crossing the strand ends then read, counter-clockwise,
  ``out(first), out(second), in(first), in(second)``; sign -1 swaps the
  roles of the second strand's ends.
* Winding numbers rise by one from the right of an arc to its left.
"""
from __future__ import annotations

import re
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

from .errors import (BadMultiplicity, CornerPatternViolation, InconsistentWinding,
                     UnrealizableCode)
from .geometry import ValidatedCurve, offset_point, validate_curve

LEFT, RIGHT = 1, -1


@dataclass(frozen=True)
class DiagramGeometry:
    curve: object           # PolylineCurve
    arc_paths: tuple        # per arc: points from its start to its end
    arc_edges: tuple        # per arc: curve edge index hosting each path segment
    crossing_points: tuple


@dataclass(frozen=True, eq=False)
class CurveDiagram:
    word: tuple
    signs: tuple
    outer: tuple                        # a dart bounding the unbounded face
    geometry: Optional[DiagramGeometry] = field(default=None, repr=False)

    # -- structure ---------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.signs)

    @property
    def num_arcs(self) -> int:
        return max(len(self.word), 1)

    @cached_property
    def occurrences(self):
        occ = [[] for _ in range(self.n)]
        for i, c in enumerate(self.word):
            occ[c].append(i)
        return tuple(tuple(o) for o in occ)

    def rotation(self, c):
        """Strand ends at crossing c in counter-clockwise order.

        An end is ``(arc, is_out)``: the tail of ``arc`` if ``is_out`` else
        its head.
        """
        i1, i2 = self.occurrences[c]
        m = len(self.word)
        out1, out2 = (i1, True), (i2, True)
        in1, in2 = ((i1 - 1) % m, False), ((i2 - 1) % m, False)
        if self.signs[c] > 0:
            return (out1, out2, in1, in2)
        return (out1, in2, in1, out2)

    @cached_property
    def _rotations(self):
        return tuple(self.rotation(c) for c in range(self.n))

    def next_dart(self, dart):
        """Next dart along the boundary of the face on the left of ``dart``."""
        if self.n == 0:
            return dart
        k, s = dart
        m = len(self.word)
        if s > 0:
            c, end = self.word[(k + 1) % m], (k, False)
        else:
            c, end = self.word[k], (k, True)
        rot = self._rotations[c]
        j, out = rot[(rot.index(end) - 1) % 4]
        return (j, LEFT) if out else (j, RIGHT)

    @cached_property
    def faces(self):
        """Face boundaries as tuples of darts, in discovery order."""
        seen = set()
        faces = []
        for k in range(self.num_arcs):
            for s in (LEFT, RIGHT):
                d = (k, s)
                if d in seen:
                    continue
                cycle = []
                while d not in seen:
                    seen.add(d)
                    cycle.append(d)
                    d = self.next_dart(d)
                if d != cycle[0]:
                    raise UnrealizableCode("face tracing did not close up")
                faces.append(tuple(cycle))
        return tuple(faces)

    @cached_property
    def face_of(self):
        return {d: f for f, cyc in enumerate(self.faces) for d in cyc}

    @property
    def outer_face(self) -> int:
        return self.face_of[self.outer]

    def euler_counts(self):
        return self.n, (2 * self.n if self.n else 1), len(self.faces)

    def check_planar(self):
        v, e, f = self.euler_counts()
        if self.n == 0:
            ok = f == 2
        else:
            ok = v - e + f == 2
        if not ok:
            raise UnrealizableCode(
                f"not a plane curve: V={v}, E={e}, F={f} (expected F={self.n + 2})")
        return self

    def corner_faces(self, c):
        """Faces in the four corners of crossing c, counter-clockwise.

        Corner i lies between rotation ends i and i+1.
        """
        rot = self._rotations[c]
        out = []
        for i in range(4):
            arc, is_out = rot[(i + 1) % 4]
            out.append(self.face_of[(arc, RIGHT) if is_out else (arc, LEFT)])
        return tuple(out)

    def arc_ends(self, k):
        """Crossings at the start and end of arc k (None when n == 0)."""
        if self.n == 0:
            return None, None
        m = len(self.word)
        return self.word[k], self.word[(k + 1) % m]

    # -- labels ------------------------------------------------------------

    @cached_property
    def windings(self):
        return _propagate_windings(self)

    @cached_property
    def indices(self):
        return _crossing_indices(self)

    def face_winding(self, dart):
        return self.windings[self.face_of[dart]]


# -- labels -----------------------------------------------------------------

def _propagate_windings(d: CurveDiagram):
    faces = d.faces
    w = [None] * len(faces)
    start = d.face_of[d.outer]
    w[start] = 0
    queue = deque([start])
    while queue:
        f = queue.popleft()
        for k, s in faces[f]:
            g = d.face_of[(k, -s)]
            # left = right + 1
            val = w[f] - 1 if s == LEFT else w[f] + 1
            if w[g] is None:
                w[g] = val
                queue.append(g)
            elif w[g] != val:
                raise InconsistentWinding(
                    f"faces {f} and {g} across arc {k} give conflicting windings")
    if any(x is None for x in w):
        raise InconsistentWinding("face adjacency graph is disconnected")
    return tuple(w)


def _crossing_indices(d: CurveDiagram):
    w = d.windings
    out = []
    for c in range(d.n):
        corners = sorted(w[f] for f in d.corner_faces(c))
        a = corners[0]
        if corners != [a, a + 1, a + 1, a + 2]:
            raise CornerPatternViolation(
                f"crossing {c} has corner windings {corners}")
        total = sum(corners)
        assert total % 4 == 0 and total // 4 == a + 1
        out.append(a + 1)
    return tuple(out)


def label_windings(d: CurveDiagram) -> CurveDiagram:
    """Label every face with its winding number (outer face 0)."""
    d.windings
    return d


def crossing_indices(d: CurveDiagram) -> CurveDiagram:
    """Label every crossing with the mean of its four corner windings."""
    d.indices
    return d


# -- token surgery ----------------------------------------------------------
#
# Moves and sums are easiest to express on "tokens": one token per visit,
# with each crossing's rotation written in terms of its two tokens.  Tokens
# survive insertions and deletions elsewhere in the word, so the rotation
# of an untouched crossing never needs rewriting.

def tokens(d: CurveDiagram, tag=None):
    """Per-visit tokens and token-level rotations of ``d``.

    Token for visit i is ``(tag, c, j)`` where visit i is the j-th visit of
    crossing c.
    """
    seq = []
    seen = Counter()
    for c in d.word:
        seq.append((tag, c, seen[c]))
        seen[c] += 1
    rot = {}
    for c in range(d.n):
        t1, t2 = (tag, c, 0), (tag, c, 1)
        if d.signs[c] > 0:
            rot[(tag, c)] = ((t1, True), (t2, True), (t1, False), (t2, False))
        else:
            rot[(tag, c)] = ((t1, True), (t2, False), (t1, False), (t2, True))
    return seq, rot


def token_dart(d: CurveDiagram, dart, tag=None):
    """Express a dart as (start token or None, side)."""
    k, s = dart
    if d.n == 0:
        return (None, s)
    seq, _ = tokens(d, tag)
    return (seq[k], s)


def assemble(seq, rot, outer, geometry=None) -> CurveDiagram:
    """Build a diagram from a token sequence and token-level rotations.

    ``rot`` maps a crossing key to its four ``(token, is_out)`` ends in
    counter-clockwise order; a token's crossing key is ``token[:-1]``.
    ``outer`` is ``(token, side)`` naming the arc that leaves ``token``;
    token None means the lone arc of a crossing-free curve.
    """
    label = {}
    word = []
    first = {}
    pos = {}
    for i, t in enumerate(seq):
        key = t[:-1]
        if key not in label:
            label[key] = len(label)
            first[key] = t
        word.append(label[key])
        pos[t] = i
    signs = [0] * len(label)
    for key, lab in label.items():
        ends = rot[key]
        toks = {t for t, _ in ends}
        if len(toks) != 2 or any(t not in pos for t in toks):
            raise UnrealizableCode(f"crossing {key} is not visited exactly twice")
        t1 = first[key]
        (t2,) = toks - {t1}
        i = ends.index((t1, True))
        r = ends[i:] + ends[:i]
        if r == ((t1, True), (t2, True), (t1, False), (t2, False)):
            signs[lab] = 1
        elif r == ((t1, True), (t2, False), (t1, False), (t2, True)):
            signs[lab] = -1
        else:
            raise UnrealizableCode(f"crossing {key} is not transverse: {r}")
    tok, side = outer
    if not seq:
        arc = 0
    else:
        if tok is None:
            raise UnrealizableCode("outer marker needs a token")
        arc = pos[tok]
    d = CurveDiagram(tuple(word), tuple(signs), (arc, side), geometry)
    return d.check_planar()


# -- building diagrams ------------------------------------------------------

def _arc_geometry(curve, events):
    """Split the polyline into arcs between consecutive crossing visits.

    ``events`` lists (edge, t, location) in traversal order.
    """
    verts = curve.vertices
    m = len(verts)
    if not events:
        return (tuple(verts) + (verts[0],),), (tuple(range(m)),)
    paths, hosts = [], []
    total = len(events)
    for k in range(total):
        e0, t0, loc0 = events[k]
        e1, t1, loc1 = events[(k + 1) % total]
        if (e1, t1) > (e0, t0):
            steps = e1 - e0
        else:
            steps = (e1 - e0) % m or m
        path, host = [loc0], []
        e = e0
        for _ in range(steps):
            host.append(e)
            e = (e + 1) % m
            path.append(verts[e])
        host.append(e1)
        path.append(loc1)
        paths.append(tuple(path))
        hosts.append(tuple(host))
    return tuple(paths), tuple(hosts)


def trace_diagram(vc) -> CurveDiagram:
    """Combinatorial diagram of a validated (or raw) polyline curve."""
    if not isinstance(vc, ValidatedCurve):
        vc = validate_curve(vc)
    curve = vc.curve
    verts = curve.vertices
    m = len(verts)
    dps = vc.double_points
    events = []
    for c, r in enumerate(dps):
        events.append((r.first_visit[0], r.first_visit[1], r.location, c))
        events.append((r.second_visit[0], r.second_visit[1], r.location, c))
    events.sort(key=lambda ev: (ev[0], ev[1]))
    word = tuple(ev[3] for ev in events)
    signs = []
    for r in dps:
        a0, a1 = curve.edge(r.first_visit[0])
        b0, b1 = curve.edge(r.second_visit[0])
        d1 = (a1[0] - a0[0], a1[1] - a0[1])
        d2 = (b1[0] - b0[0], b1[1] - b0[1])
        signs.append(1 if d1[0] * d2[1] - d1[1] * d2[0] > 0 else -1)

    # the lowest of the leftmost vertices lies on the unbounded face
    i = min(range(m), key=lambda k: (verts[k][0], verts[k][1]))
    p, v, q = verts[i - 1], verts[i], verts[(i + 1) % m]
    turn = (v[0] - p[0]) * (q[1] - v[1]) - (v[1] - p[1]) * (q[0] - v[0])
    side = LEFT if turn < 0 else RIGHT
    if events:
        before = sum(1 for ev in events if (ev[0], ev[1]) < (i, 0))
        arc = (before - 1) % len(events)
    else:
        arc = 0
    paths, hosts = _arc_geometry(curve, [ev[:3] for ev in events])
    geom = DiagramGeometry(curve, paths, hosts, tuple(r.location for r in dps))
    d = CurveDiagram(word, tuple(signs), (arc, side), geom)
    return d.check_planar()


def face_sample_point(d: CurveDiagram, f: int):
    """An exact point strictly inside face f (geometric diagrams only)."""
    from .errors import NoGeometry
    g = d.geometry
    if g is None:
        raise NoGeometry("diagram has no embedding coordinates")
    k, s = d.faces[f][0]
    path, host = g.arc_paths[k], g.arc_edges[k]
    # longest piece of the arc keeps the sample away from crossings
    best = max(range(len(path) - 1),
               key=lambda j: (path[j + 1][0] - path[j][0]) ** 2 + (path[j + 1][1] - path[j][1]) ** 2)
    return offset_point(g.curve, path[best], path[best + 1], s, skip=(host[best],))


# -- orientation ------------------------------------------------------------

def reverse_orientation(d: CurveDiagram) -> CurveDiagram:
    """Same curve traversed the other way; windings and indices negate."""
    if d.geometry is not None:
        return trace_diagram(d.geometry.curve.reversed())
    seq, rot = tokens(d)
    m = len(seq)
    new_rot = {key: tuple((t, not out) for t, out in ends) for key, ends in rot.items()}
    k, s = d.outer
    # old arc k runs seq[k] -> seq[k+1]; reversed, it leaves seq[k+1]
    outer = (None, -s) if m == 0 else (seq[(k + 1) % m], -s)
    return assemble(list(reversed(seq)), new_rot, outer)


# -- canonical form ---------------------------------------------------------

def rotate_start(d: CurveDiagram, shift: int) -> CurveDiagram:
    """Same diagram with the word read from visit ``shift``."""
    if d.n == 0:
        return d
    seq, rot = tokens(d)
    m = len(seq)
    new_seq = seq[shift:] + seq[:shift]
    k, s = d.outer
    return assemble(new_seq, rot, (seq[k], s))


def canonical_form(d: CurveDiagram):
    """Hashable invariant of the oriented plane diagram up to relabeling.

    Two diagrams have equal canonical forms iff they describe the same
    oriented curve in the plane up to isotopy.
    """
    if d.n == 0:
        return ((), (), (d.faces[d.outer_face][0][1],))
    best = None
    seq, _ = tokens(d)
    m = len(seq)
    outer_darts = d.faces[d.outer_face]
    for shift in range(m):
        new_seq = seq[shift:] + seq[:shift]
        label, first = {}, {}
        word = []
        for t in new_seq:
            key = t[:-1]
            if key not in label:
                label[key] = len(label)
                first[key] = t[-1]
            word.append(label[key])
        signs = [0] * len(label)
        for key, lab in label.items():
            sgn = d.signs[key[1]]
            signs[lab] = sgn if first[key] == 0 else -sgn
        outer = tuple(sorted(((k - shift) % m, s) for k, s in outer_darts))
        cand = (tuple(word), tuple(signs), outer)
        if best is None or cand < best:
            best = cand
    return best


def is_isomorphic(d1: CurveDiagram, d2: CurveDiagram) -> bool:
    return canonical_form(d1) == canonical_form(d2)


# -- Gauss codes ------------------------------------------------------------

@dataclass(frozen=True)
class GaussCode:
    labels: tuple           # 2n crossing labels (1-based) in traversal order
    signs: tuple            # sign per entry; both visits of a crossing agree
    outer_arc: int
    outer_side: int = RIGHT

    def __str__(self):
        parts = [f"{lab}{'+' if s > 0 else '-'}" for lab, s in zip(self.labels, self.signs)]
        marker = f"@{self.outer_arc}" + ("" if self.outer_side == RIGHT else "L")
        parts.append(marker)
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str) -> "GaussCode":
        text = text.replace("⁺", "+").replace("⁻", "-").replace("−", "-")
        labels, signs = [], []
        outer = None
        for tok in text.split():
            m = re.fullmatch(r"@(\d+)([LR]?)", tok)
            if m:
                if outer is not None:
                    raise UnrealizableCode("more than one outer-face marker")
                outer = (int(m.group(1)), LEFT if m.group(2) == "L" else RIGHT)
                continue
            m = re.fullmatch(r"(\d+)([+-])", tok)
            if not m:
                raise UnrealizableCode(f"cannot read token {tok!r}")
            labels.append(int(m.group(1)))
            signs.append(1 if m.group(2) == "+" else -1)
        if outer is None:
            raise UnrealizableCode("missing outer-face marker '@k'")
        return cls(tuple(labels), tuple(signs), outer[0], outer[1])


def to_gauss_code(d: CurveDiagram) -> GaussCode:
    """Gauss code with the outer face marked, preferring an arc with it on the right."""
    darts = d.faces[d.outer_face]
    right = [dt for dt in darts if dt[1] == RIGHT]
    k, s = min(right) if right else min(darts)
    labels = tuple(c + 1 for c in d.word)
    signs = tuple(d.signs[c] for c in d.word)
    return GaussCode(labels, signs, k, s)


def from_gauss_code(g) -> CurveDiagram:
    """Rebuild a diagram from a GaussCode (or its text form) and check it."""
    if isinstance(g, str):
        g = GaussCode.parse(g)
    count = Counter(g.labels)
    bad = sorted(lab for lab, c in count.items() if c != 2)
    if bad:
        raise BadMultiplicity(f"labels {bad} do not appear exactly twice")
    relabel = {}
    for lab in g.labels:
        relabel.setdefault(lab, len(relabel))
    signs = [0] * len(relabel)
    for lab, s in zip(g.labels, g.signs):
        c = relabel[lab]
        if signs[c] not in (0, s):
            raise UnrealizableCode(f"crossing {lab} carries two different signs")
        signs[c] = s
    word = tuple(relabel[lab] for lab in g.labels)
    arcs = max(len(word), 1)
    if not 0 <= g.outer_arc < arcs:
        raise UnrealizableCode(f"outer marker @{g.outer_arc} is not an arc")
    d = CurveDiagram(word, tuple(signs), (g.outer_arc, g.outer_side))
    d.check_planar()
    d.indices  # winding propagation and corner law double as realizability checks
    return d
