"""Perestroikas on combinatorial diagrams.

Three kinds of generic events change a diagram during a regular homotopy:

* positive self-tangency: two boundary stretches of one face are pushed
  through each other, adding two crossings, a bigon and splitting the face;
* negative self-tangency: a bounded bigon is pulled apart;
* triple point: one strand is pushed across the crossing of the other two,
  turning a bounded triangle inside out.

A tangency is direct when the two strands run the same way as seen from
the face between them (the face lies on opposite sides of the two arcs) and
inverse otherwise.  Only direct tangencies change J⁺, by +2 or -2.

All surgery happens on visit tokens (see ``diagram.tokens``): untouched
crossings keep their token-level rotations, so only the new or edited
crossings need explicit rotations.
"""
from __future__ import annotations

import os
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from .diagram import LEFT, RIGHT, CurveDiagram, assemble, tokens
from .errors import IdentityViolation, IllegalSite
from .invariants import arnold_slack, jplus_viro, rotation_from_windings

DIRECT_POS = "DirectTangencyPositive"
DIRECT_NEG = "DirectTangencyNegative"
INVERSE_POS = "InverseTangencyPositive"
INVERSE_NEG = "InverseTangencyNegative"
TRIPLE = "TriplePoint"
KINDS = (DIRECT_POS, DIRECT_NEG, INVERSE_POS, INVERSE_NEG, TRIPLE)

DELTA_J = {DIRECT_POS: 2, DIRECT_NEG: -2, INVERSE_POS: 0, INVERSE_NEG: 0, TRIPLE: 0}

# triangle case by the number of sides that have the triangle on their left
_TRIPLE_CASE = {1: 1, 2: 2, 0: 3, 3: 4}


@dataclass(frozen=True)
class MoveSite:
    kind: str
    face: int
    darts: tuple                  # boundary darts involved (1 or 2 for tangencies)
    variant: Optional[str] = None  # "pre"/"post" when a tangency splits the outer face
    case: Optional[int] = None     # triple-point case 1-4

    def describe(self) -> str:
        extra = ""
        if self.variant:
            extra += f" [{self.variant}]"
        if self.case:
            extra += f" case {self.case}"
        darts = ", ".join(f"{k}{'L' if s > 0 else 'R'}" for k, s in self.darts)
        return f"{self.kind} face {self.face} arcs {darts}{extra}"


@dataclass(frozen=True)
class MoveResult:
    diagram: CurveDiagram
    delta_jplus: int
    added_windings: Counter = field(default_factory=Counter)
    removed_windings: Counter = field(default_factory=Counter)
    added_indices: Counter = field(default_factory=Counter)
    removed_indices: Counter = field(default_factory=Counter)
    created_bigon: Optional[int] = None


# -- site discovery ---------------------------------------------------------

def _polygon_sites(d: CurveDiagram, sides: int):
    """Bounded faces with ``sides`` boundary arcs through distinct crossings."""
    out = []
    if d.n == 0:
        return out
    for f, cyc in enumerate(d.faces):
        if f == d.outer_face or len(cyc) != sides:
            continue
        arcs = {k for k, _ in cyc}
        if len(arcs) != sides:
            continue
        corners = set()
        for k, s in cyc:
            corners.update(d.arc_ends(k))
        if len(corners) != sides:
            continue
        out.append((f, cyc))
    return out


def _tangency_kind(d1, d2, positive=True):
    direct = d1[1] != d2[1]
    if positive:
        return DIRECT_POS if direct else INVERSE_POS
    return DIRECT_NEG if direct else INVERSE_NEG


def positive_sites(d: CurveDiagram, face=None):
    sites = []
    faces = range(len(d.faces)) if face is None else [face]
    for f in faces:
        cyc = sorted(d.faces[f])
        variants = ("pre", "post") if f == d.outer_face else (None,)
        for i, d1 in enumerate(cyc):
            for d2 in cyc[i:]:
                kind = _tangency_kind(d1, d2)
                for v in variants:
                    sites.append(MoveSite(kind, f, (d1, d2), v))
    return sites


def negative_sites(d: CurveDiagram):
    return [MoveSite(_tangency_kind(*sorted(cyc), positive=False), f, tuple(sorted(cyc)))
            for f, cyc in _polygon_sites(d, 2)]


def triple_sites(d: CurveDiagram):
    sites = []
    for f, cyc in _polygon_sites(d, 3):
        k = sum(1 for _, s in cyc if s == LEFT)
        sites.append(MoveSite(TRIPLE, f, tuple(sorted(cyc)), case=_TRIPLE_CASE[k]))
    return sites


def enumerate_moves(d: CurveDiagram):
    """Every legal move site: tangency pairs, bounded bigons, bounded triangles."""
    return positive_sites(d) + negative_sites(d) + triple_sites(d)


# -- surgery ----------------------------------------------------------------

def _new(name, which):
    return ("new", name, which)


def _positive(d: CurveDiagram, site: MoveSite) -> MoveResult:
    d1, d2 = site.darts
    direct = d1[1] != d2[1]
    if direct:
        a, b = (d1, d2) if d1[1] == RIGHT else (d2, d1)
        mirror = False
    else:
        a, b = d1, d2
        mirror = d1[1] == RIGHT
    seq, rot = tokens(d)
    xa, ya, xb, yb = _new("X", 0), _new("Y", 0), _new("X", 1), _new("Y", 1)
    b_toks = [xb, yb] if direct else [yb, xb]
    if d.n == 0:
        new_seq = [xa, ya] + b_toks
    else:
        new_seq = []
        for i, t in enumerate(seq):
            new_seq.append(t)
            if i == a[0]:
                new_seq += [xa, ya]
            if i == b[0]:
                new_seq += b_toks
    rx = ((xb, True), (xa, False), (xb, False), (xa, True))
    ry = ((yb, True), (ya, True), (yb, False), (ya, False))
    if mirror:
        rx, ry = rx[::-1], ry[::-1]
    rot = dict(rot)
    rot[("new", "X")] = rx
    rot[("new", "Y")] = ry

    def start_of(k):
        return new_seq[-1] if d.n == 0 else seq[k]

    f = site.face
    if f != d.outer_face:
        k, s = d.outer
        outer = (start_of(k), s)
    elif site.variant == "post":
        outer = (ya, a[1])
    else:
        outer = (start_of(a[0]), a[1])
    nd = assemble(new_seq, rot, outer)

    wf = d.windings[f]
    if direct:
        added_w, added_i = Counter([wf, wf]), Counter([wf, wf])
    else:
        g = d.face_winding((a[0], -a[1]))
        added_w, added_i = Counter([wf, 2 * g - wf]), Counter([g, g])
    # the finger stretch of a runs from X_a to Y_a with the bigon beside it
    bigon_side = LEFT if direct else RIGHT
    if mirror:
        bigon_side = -bigon_side
    bigon = nd.face_of[(new_seq.index(xa), bigon_side)]
    return MoveResult(nd, DELTA_J[site.kind], added_windings=added_w,
                      added_indices=added_i, created_bigon=bigon)


def _merged_start(seq, k, dead):
    m = len(seq)
    for step in range(m):
        t = seq[(k - step) % m]
        if t[:-1] not in dead:
            return t
    return None


def _negative(d: CurveDiagram, site: MoveSite) -> MoveResult:
    (p, sp), (q, sq) = site.darts
    x, y = d.arc_ends(p)
    seq, rot = tokens(d)
    dead = {(None, x), (None, y)}
    new_seq = [t for t in seq if t[:-1] not in dead]
    rot = {key: r for key, r in rot.items() if key not in dead}

    bigon = site.face
    opposite = set()
    for c in (x, y):
        corners = d.corner_faces(c)
        opposite.add(corners[(corners.index(bigon) + 2) % 4])
    g = d.face_of[(q, -sq)]
    h = d.face_of[(p, -sp)]
    outer_face = d.outer_face
    if outer_face in opposite:
        outer = (_merged_start(seq, p, dead), -sp)
    elif outer_face == g:
        outer = (_merged_start(seq, p, dead), sp)
    elif outer_face == h:
        outer = (_merged_start(seq, q, dead), sq)
    else:
        for k, s in d.faces[outer_face]:
            if not set(d.arc_ends(k)) & {x, y}:
                outer = (seq[k], s)
                break
        else:  # pragma: no cover - the outer face always has such an arc
            raise IllegalSite("cannot locate the unbounded face after the move")
    nd = assemble(new_seq, rot, outer)

    wb = d.windings[bigon]
    wf = d.windings[next(iter(opposite))]
    removed_w = Counter([wf, wb])
    removed_i = Counter([(wf + wb) // 2] * 2)
    return MoveResult(nd, DELTA_J[site.kind], removed_windings=removed_w,
                      removed_indices=removed_i)


def _triple(d: CurveDiagram, site: MoveSite) -> MoveResult:
    seq, rot = tokens(d)
    m = len(seq)
    new_seq = list(seq)
    second_to_first = {}
    tri_arcs = set()
    for k, _ in site.darts:
        i, j = k, (k + 1) % m
        new_seq[i], new_seq[j] = seq[j], seq[i]
        second_to_first[seq[j]] = seq[i]
        tri_arcs.add(k)
    for k, s in d.faces[d.outer_face]:
        if k not in tri_arcs:
            t = seq[k]
            outer = (second_to_first.get(t, t), s)
            break
    else:  # pragma: no cover
        raise IllegalSite("unbounded face touches only the triangle")
    nd = assemble(new_seq, rot, outer)

    wt = d.windings[site.face]
    cyc = d.faces[site.face]
    wt2 = wt - sum(s for _, s in cyc)
    removed_i, added_i = Counter(), Counter()
    for i in range(3):
        si, sj = cyc[i][1], cyc[(i + 1) % 3][1]
        removed_i[wt - (si + sj) // 2] += 1
        added_i[wt2 + (si + sj) // 2] += 1
    return MoveResult(nd, 0, added_windings=Counter([wt2]),
                      removed_windings=Counter([wt]), added_indices=added_i,
                      removed_indices=removed_i)


def _check_site(d: CurveDiagram, site: MoveSite):
    if site.kind not in KINDS or not 0 <= site.face < len(d.faces):
        raise IllegalSite(f"no such site: {site}")
    cyc = set(d.faces[site.face])
    if site.kind in (DIRECT_POS, INVERSE_POS):
        if len(site.darts) != 2 or not set(site.darts) <= cyc:
            raise IllegalSite("tangency darts must lie on the site face")
        if _tangency_kind(*site.darts) != site.kind:
            raise IllegalSite(f"darts {site.darts} do not form a {site.kind} site")
        want = ("pre", "post") if site.face == d.outer_face else (None,)
        if site.variant not in want:
            raise IllegalSite(f"variant must be one of {want}")
        return
    pool = negative_sites(d) if site.kind in (DIRECT_NEG, INVERSE_NEG) else triple_sites(d)
    if site not in pool:
        raise IllegalSite(f"face {site.face} is not a {site.kind} site")


def apply_move(d: CurveDiagram, site: MoveSite) -> MoveResult:
    """Perform the move; the result unpacks as ``(diagram, delta_jplus)``."""
    _check_site(d, site)
    if site.kind in (DIRECT_POS, INVERSE_POS):
        return _positive(d, site)
    if site.kind in (DIRECT_NEG, INVERSE_NEG):
        return _negative(d, site)
    return _triple(d, site)


MoveResult.__iter__ = lambda self: iter((self.diagram, self.delta_jplus))


# -- random walks -----------------------------------------------------------

def max_crossings_default() -> int:
    return int(os.environ.get("JPLUS_MAX_CROSSINGS", "64"))


@dataclass(frozen=True)
class TraceStep:
    site: MoveSite
    delta_jplus: int
    running_jplus: int
    n: int


@dataclass
class HomotopyTrace:
    initial: CurveDiagram
    seed: int
    steps: list = field(default_factory=list)
    final: Optional[CurveDiagram] = None

    @property
    def d_plus(self):
        return sum(1 for s in self.steps if s.site.kind == DIRECT_POS)

    @property
    def d_minus(self):
        return sum(1 for s in self.steps if s.site.kind == DIRECT_NEG)

    @property
    def final_jplus(self):
        return self.steps[-1].running_jplus if self.steps else jplus_viro(self.initial)


def _sample_positive(d, rng, kinds):
    weights = []
    for f, cyc in enumerate(d.faces):
        left = sum(1 for _, s in cyc if s == LEFT)
        right = len(cyc) - left
        w = 0
        if DIRECT_POS in kinds:
            w += left * right
        if INVERSE_POS in kinds:
            w += left * (left + 1) // 2 + right * (right + 1) // 2
        weights.append(w)
    if not any(weights):
        return None
    f = rng.choices(range(len(weights)), weights=weights)[0]
    sites = [s for s in positive_sites(d, f) if s.kind in kinds]
    return rng.choice(sites)


def random_homotopy(d: CurveDiagram, steps: int, seed=0, kinds=None,
                    max_crossings=None) -> HomotopyTrace:
    """Seeded random sequence of moves with a per-step J⁺ ledger check.

    ``kinds`` restricts the move kinds; positive tangencies are skipped
    when they would exceed ``max_crossings``.
    """
    kinds = set(KINDS if kinds is None else kinds)
    cap = max_crossings_default() if max_crossings is None else max_crossings
    rng = random.Random(seed)
    trace = HomotopyTrace(initial=d, seed=seed)
    running = jplus_viro(d)
    rot0 = rotation_from_windings(d)
    cur = d
    for _ in range(steps):
        choices = []
        if cur.n + 2 <= cap and kinds & {DIRECT_POS, INVERSE_POS}:
            choices.append("positive")
        neg = [s for s in negative_sites(cur) if s.kind in kinds]
        if neg:
            choices.append("negative")
        tri = triple_sites(cur) if TRIPLE in kinds else []
        if tri:
            choices.append("triple")
        site = None
        while choices and site is None:
            cat = rng.choice(choices)
            if cat == "positive":
                site = _sample_positive(cur, rng, kinds)
                if site is None:
                    choices.remove(cat)
            else:
                site = rng.choice(neg if cat == "negative" else tri)
        if site is None:
            break
        res = apply_move(cur, site)
        cur = res.diagram
        running += res.delta_jplus
        j = jplus_viro(cur)
        if j != running:
            raise IdentityViolation(f"ledger J+ {running} != Viro J+ {j}", running, j)
        if arnold_slack(cur, j) < 0:
            raise IdentityViolation("Arnold bound violated", j, -cur.n * cur.n - cur.n)
        rot = rotation_from_windings(cur)
        if rot != rot0:
            raise IdentityViolation("rotation changed along the homotopy", rot0, rot)
        if len(cur.faces) != cur.n + 2:
            raise IdentityViolation("face count is not n + 2", len(cur.faces), cur.n + 2)
        trace.steps.append(TraceStep(site, res.delta_jplus, running, cur.n))
    trace.final = cur
    return trace
