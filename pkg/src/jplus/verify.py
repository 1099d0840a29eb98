"""Self-verification against recorded golden values.

Each check recomputes a value from scratch and compares it with the entry
of the same name in ``goldens.json``.  Names look like ``group/item``;
``--filter`` selects checks whose name contains the filter string.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from importlib import resources

from . import gallery, templates
from .constructions import (SumSpec, add_interior_loop, connected_sum, interior_sum,
                            tunnel_interior_sum)
from .diagram import CurveDiagram, from_gauss_code, reverse_orientation, to_gauss_code, trace_diagram
from .errors import JPlusInputError
from .geometry import point_winding, turning_number
from .invariants import (arnold_slack, jplus_viro, report, rotation_from_windings,
                         verify_sum_identity)
from .moves import INVERSE_NEG, INVERSE_POS, TRIPLE, random_homotopy


def load_goldens(path=None) -> dict:
    if path is None:
        text = resources.files("jplus").joinpath("goldens.json").read_text(encoding="utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return json.loads(text)


def _strip(d):
    return CurveDiagram(d.word, d.signs, d.outer)


def _jr(d):
    r = report(d)
    return [r.jplus, r.rot_combinatorial]


# -- checks -----------------------------------------------------------------

def _standard(j):
    return lambda: _jr(templates.standard_curve(j))


def _inner(j):
    def run():
        d = trace_diagram(templates.inner_loop_curve(j))
        return [jplus_viro(d), arnold_slack(d)]
    return run


def _worked_example():
    d = gallery.worked_example()
    return [d.n, sum(w * w for w in d.windings), sum(i * i for i in d.indices), jplus_viro(d)]


def _walk_rotation():
    for seed in range(20):
        start = _strip(trace_diagram(templates.standard_curve(seed % 7 - 3)))
        t = random_homotopy(start, 40, seed=seed)
        if rotation_from_windings(t.final) != rotation_from_windings(start):
            return False
    return True


def _pair_sum(kind):
    def run():
        _, _, spec = gallery.interior_sum_pair()
        r = (interior_sum if kind == "interior" else tunnel_interior_sum)(spec)
        return _jr(r.diagram)
    return run


def _random_sums(kind, count=12, seed=7):
    def run():
        rng = random.Random(seed)
        pool = [templates.standard_curve(j) for j in (1, -1, 2, 3, -2)]
        pool += [templates.inner_loop_curve(3), templates.figure_eight()]
        fn = interior_sum if kind == "interior" else tunnel_interior_sum
        for _ in range(count):
            K = trace_diagram(rng.choice(pool))
            P = trace_diagram(rng.choice(pool))
            f = rng.choice([f for f in range(len(K.faces)) if f != K.outer_face])
            arc = rng.choice(K.faces[f])[0]
            a2 = rng.choice(P.faces[P.outer_face])[0]
            r = fn(SumSpec(K, f, arc, P, a2))
            if _jr(r.diagram) != [r.predicted_jplus, r.predicted_rot]:
                return False
        return True
    return run


def _replacement():
    # two rot-3 pieces with J+ -2 and -6 inserted into the same circle
    piece = gallery.with_direct_tangencies(templates.standard_curve(3), 1)
    piece_tr = trace_diagram(templates.inner_loop_curve(3))
    circle = trace_diagram(templates.standard_curve(1))
    sums = [interior_sum(SumSpec(circle, 1 - circle.outer_face, 0, p,
                                 p.faces[p.outer_face][0][0])) for p in (piece, piece_tr)]
    verify_sum_identity("replacement", {"K2": piece, "K2_tr": piece_tr,
                                        "sum_tr": sums[1].curve}, sums[0].curve)
    return [jplus_viro(trace_diagram(r.curve)) for r in sums]


def _loop_triple():
    circle = trace_diagram(templates.standard_curve(1))
    f = 1 - circle.outer_face
    r = add_interior_loop(circle, f, 0, m=2)
    return jplus_viro(r.diagram)


def _loop_grid():
    for j in (1, 2, -2, 3):
        K = trace_diagram(templates.inner_loop_curve(j))
        for f in range(len(K.faces)):
            for m in range(3):
                r = add_interior_loop(K, f, K.faces[f][0][0], m)
                if jplus_viro(r.diagram) != r.predicted_jplus:
                    return False
    return True


def _ledger_walk():
    t = random_homotopy(_strip(trace_diagram(templates.standard_curve(3))), 300, seed=3)
    return [t.final_jplus == jplus_viro(t.final), rotation_from_windings(t.final)]


def _inverse_only():
    start = _strip(trace_diagram(templates.standard_curve(2)))
    t = random_homotopy(start, 200, seed=5, kinds={INVERSE_POS, INVERSE_NEG, TRIPLE})
    return jplus_viro(t.final)


def _recon(fn):
    return lambda: jplus_viro(fn())


def _connected_pair():
    a = gallery.worked_example()
    b = gallery.with_direct_tangencies(templates.figure_eight(), 1)
    r = connected_sum(a, a.faces[a.outer_face][0][0], b, b.faces[b.outer_face][0][0], mode="flip")
    return [jplus_viro(a), jplus_viro(b), jplus_viro(r.diagram)]


def _winding_oracle():
    curves = [templates.standard_curve(j) for j in (-3, 0, 2, 5)]
    curves += [templates.inner_loop_curve(4), templates.single_and_double_loop()]
    from .diagram import face_sample_point
    for c in curves:
        d = trace_diagram(c)
        for f in range(len(d.faces)):
            if point_winding(c, face_sample_point(d, f)) != d.windings[f]:
                return False
        if turning_number(c) != rotation_from_windings(d):
            return False
    return True


def _round_trips():
    for j in (-3, 0, 1, 4):
        d = trace_diagram(templates.standard_curve(j))
        if from_gauss_code(str(to_gauss_code(d))).word != d.word:
            return False
        r = reverse_orientation(d)
        if jplus_viro(r) != jplus_viro(d):
            return False
        if reverse_orientation(r).geometry.curve != d.geometry.curve:
            return False
    return True


def checks():
    out = {}
    for j in range(-10, 11):
        out[f"standard-curves/K{j}"] = _standard(j)
    out["worked-example/single-and-double-loop"] = _worked_example
    for n in range(0, 21):
        out[f"inner-loop/A{n + 1}"] = _inner(n + 1)
    out["rotation/random-walks"] = _walk_rotation
    out["rotation/winding-oracle"] = _winding_oracle
    out["interior-sum/example"] = _pair_sum("interior")
    out["interior-sum/random"] = _random_sums("interior")
    out["interior-sum/replacement"] = _replacement
    out["tunnel-sum/example"] = _pair_sum("tunnel")
    out["tunnel-sum/random"] = _random_sums("tunnel")
    out["interior-loop/triple-on-circle"] = _loop_triple
    out["interior-loop/grid"] = _loop_grid
    out["moves/ledger-walk"] = _ledger_walk
    out["moves/inverse-and-triple-only"] = _inverse_only
    out["reconstructions/k4-loops-touching-circle"] = _recon(gallery.loops_touching_circle)
    out["reconstructions/circle-12-tangencies"] = _recon(gallery.circle_with_tangencies)
    out["reconstructions/k2-5-tangencies"] = _recon(gallery.k2_with_tangencies)
    out["reconstructions/eight-chain"] = _recon(gallery.eight_chain)
    out["connected-sum/additivity"] = _connected_pair
    out["round-trip/gauss-and-reversal"] = _round_trips
    return out


@dataclass(frozen=True)
class CheckResult:
    name: str
    expected: object
    actual: object
    error: str = ""

    @property
    def passed(self):
        return not self.error and self.expected == self.actual


def verify_corpus(filter=None, goldens=None) -> list:
    """Run every check (or those whose name contains ``filter``)."""
    gold = load_goldens() if goldens is None else goldens
    results = []
    for name, fn in checks().items():
        if filter and filter not in name:
            continue
        expected = gold.get(name)
        try:
            actual = fn()
            err = "" if name in gold else "no golden value"
        except (JPlusInputError, AssertionError) as e:
            actual, err = None, f"{type(e).__name__}: {e}"
        results.append(CheckResult(name, expected, actual, err))
    return results


def summary(results) -> dict:
    return {
        "passed": all(r.passed for r in results),
        "total": len(results),
        "failures": [r.name for r in results if not r.passed],
        "checks": [{"name": r.name, "expected": r.expected, "actual": r.actual,
                    "passed": r.passed, "error": r.error} for r in results],
    }
