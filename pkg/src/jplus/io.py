"""JSON and text formats.

Every JSON document is an object with a ``"type"`` field.  Coordinates are
written as exact rational strings ("3/2"), so round trips are lossless.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .constructions import SumSpec
from .diagram import CurveDiagram, GaussCode, from_gauss_code, to_gauss_code, trace_diagram
from .errors import JPlusInputError
from .geometry import PolylineCurve, to_fraction
from .invariants import InvariantReport
from .moves import HomotopyTrace, MoveSite, TraceStep


def _q(x: Fraction) -> str:
    return str(x)


# -- encoders ---------------------------------------------------------------

def curve_to_json(c: PolylineCurve) -> dict:
    return {"type": "curve", "vertices": [[_q(x), _q(y)] for x, y in c.vertices]}


def diagram_to_json(d: CurveDiagram) -> dict:
    out = {"type": "diagram", "word": list(d.word), "signs": list(d.signs),
           "outer": list(d.outer), "gauss": str(to_gauss_code(d))}
    if d.geometry is not None:
        out["curve"] = curve_to_json(d.geometry.curve)
    return out


def report_to_json(r: InvariantReport) -> dict:
    return {
        "type": "report",
        "n": r.n,
        "rot_combinatorial": r.rot_combinatorial,
        "rot_geometric": r.rot_geometric,
        "jplus": r.jplus,
        "winding_multiset": [[k, v] for k, v in sorted(r.winding_multiset.items())],
        "index_multiset": [[k, v] for k, v in sorted(r.index_multiset.items())],
        "arnold_slack": r.arnold_slack,
    }


def site_to_json(s: MoveSite) -> dict:
    return {"kind": s.kind, "face": s.face, "darts": [list(x) for x in s.darts],
            "variant": s.variant, "case": s.case}


def trace_to_json(t: HomotopyTrace) -> dict:
    return {
        "type": "trace",
        "seed": t.seed,
        "initial": diagram_to_json(t.initial),
        "steps": [{"site": site_to_json(s.site), "delta_jplus": s.delta_jplus,
                   "running_jplus": s.running_jplus, "n": s.n} for s in t.steps],
        "final": diagram_to_json(t.final) if t.final is not None else None,
    }


def _shape_to_json(obj):
    if isinstance(obj, PolylineCurve):
        return curve_to_json(obj)
    return diagram_to_json(obj)


def sumspec_to_json(s: SumSpec) -> dict:
    return {"type": "sumspec", "base": _shape_to_json(s.base), "face": s.face,
            "arc": s.arc, "inserted": _shape_to_json(s.inserted),
            "inserted_arc": s.inserted_arc, "omega_adj": s.omega_adj}


def to_json(obj) -> dict:
    for cls, fn in ((PolylineCurve, curve_to_json), (CurveDiagram, diagram_to_json),
                    (InvariantReport, report_to_json), (HomotopyTrace, trace_to_json),
                    (SumSpec, sumspec_to_json), (MoveSite, site_to_json)):
        if isinstance(obj, cls):
            return fn(obj)
    raise TypeError(f"no JSON form for {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(to_json(obj), indent=1, ensure_ascii=False)


# -- decoders ---------------------------------------------------------------

def _need(doc, kind):
    if not isinstance(doc, dict) or doc.get("type") != kind:
        raise JPlusInputError(f"expected a JSON object of type {kind!r}")


def curve_from_json(doc) -> PolylineCurve:
    _need(doc, "curve")
    try:
        return PolylineCurve(tuple((to_fraction(x), to_fraction(y)) for x, y in doc["vertices"]))
    except (TypeError, ValueError, KeyError, ZeroDivisionError) as e:
        raise JPlusInputError(f"bad vertex list: {e}") from None


def diagram_from_json(doc) -> CurveDiagram:
    _need(doc, "diagram")
    if doc.get("curve") is not None:
        d = trace_diagram(curve_from_json(doc["curve"]))
        if list(d.word) != list(doc["word"]) or list(d.signs) != list(doc["signs"]):
            raise JPlusInputError("stored word does not match the stored curve")
        return d
    d = CurveDiagram(tuple(doc["word"]), tuple(doc["signs"]), tuple(doc["outer"]))
    d.check_planar()
    d.indices
    return d


def report_from_json(doc) -> InvariantReport:
    _need(doc, "report")
    return InvariantReport(
        n=doc["n"], rot_combinatorial=doc["rot_combinatorial"],
        rot_geometric=doc["rot_geometric"], jplus=doc["jplus"],
        winding_multiset={k: v for k, v in doc["winding_multiset"]},
        index_multiset={k: v for k, v in doc["index_multiset"]},
        arnold_slack=doc["arnold_slack"])


def site_from_json(doc) -> MoveSite:
    return MoveSite(doc["kind"], doc["face"], tuple(tuple(x) for x in doc["darts"]),
                    doc.get("variant"), doc.get("case"))


def trace_from_json(doc) -> HomotopyTrace:
    _need(doc, "trace")
    t = HomotopyTrace(initial=diagram_from_json(doc["initial"]), seed=doc["seed"])
    t.steps = [TraceStep(site_from_json(s["site"]), s["delta_jplus"],
                         s["running_jplus"], s["n"]) for s in doc["steps"]]
    if doc.get("final") is not None:
        t.final = diagram_from_json(doc["final"])
    return t


def _shape_from_json(doc):
    return curve_from_json(doc) if doc.get("type") == "curve" else diagram_from_json(doc)


def sumspec_from_json(doc) -> SumSpec:
    _need(doc, "sumspec")
    return SumSpec(_shape_from_json(doc["base"]), doc["face"], doc["arc"],
                   _shape_from_json(doc["inserted"]), doc["inserted_arc"],
                   doc.get("omega_adj"))


_DECODERS = {"curve": curve_from_json, "diagram": diagram_from_json,
             "report": report_from_json, "trace": trace_from_json,
             "sumspec": sumspec_from_json}


def from_json(doc):
    kind = doc.get("type") if isinstance(doc, dict) else None
    if kind not in _DECODERS:
        raise JPlusInputError(f"unknown document type {kind!r}")
    return _DECODERS[kind](doc)


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise JPlusInputError(f"invalid JSON: {e}") from None
    return from_json(doc)


def read_shape(text: str):
    """Curve or diagram from JSON, a Gauss code, or whitespace-separated "x y" lines."""
    s = text.strip()
    if s.startswith("{"):
        obj = loads(s)
        if isinstance(obj, (PolylineCurve, CurveDiagram)):
            return obj
        raise JPlusInputError("expected a curve or a diagram")
    if "@" in s:
        return from_gauss_code(GaussCode.parse(s))
    pts = []
    for line in s.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.replace(",", " ").split()
        if len(parts) != 2:
            raise JPlusInputError(f"cannot read vertex line {line!r}")
        try:
            pts.append((to_fraction(parts[0]), to_fraction(parts[1])))
        except (ValueError, ZeroDivisionError):
            raise JPlusInputError(f"cannot read vertex line {line!r}") from None
    return PolylineCurve(tuple(pts))
