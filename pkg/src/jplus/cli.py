"""Command-line interface.

Exit codes: 0 success, 1 invalid input, 2 a violated internal identity.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import io as jio
from .constructions import (SumSpec, add_interior_loop, as_diagram, connected_sum,
                            interior_sum, tunnel_interior_sum)
from .diagram import CurveDiagram, to_gauss_code
from .errors import IdentityViolation, JPlusInputError
from .geometry import PolylineCurve
from .invariants import report
from .moves import KINDS, apply_move, enumerate_moves, random_homotopy
from .svg import LAYERS, RenderSpec, render_svg
from .templates import inner_loop_curve, standard_curve
from .verify import load_goldens, summary, verify_corpus


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _shape(path):
    return jio.read_shape(_read(path))


def _emit(args, text):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _diagram_text(d: CurveDiagram) -> str:
    lines = [f"gauss     {to_gauss_code(d)}", f"crossings {d.n}", f"faces     {len(d.faces)}"]
    for f, cyc in enumerate(d.faces):
        darts = " ".join(f"{k}{'L' if s > 0 else 'R'}" for k, s in cyc)
        tag = "  (unbounded)" if f == d.outer_face else ""
        lines.append(f"  face {f}: winding {d.windings[f]:>3}  arcs {darts}{tag}")
    return "\n".join(lines)


def _out_shape(args, obj, extra_text=""):
    if args.format == "json":
        _emit(args, jio.dumps(obj))
    else:
        d = as_diagram(obj)
        _emit(args, _diagram_text(d) + ("\n" + extra_text if extra_text else ""))


# -- verbs ------------------------------------------------------------------

def cmd_ingest(args):
    obj = _shape(args.input)
    d = as_diagram(obj)
    d.indices
    _out_shape(args, d)


def cmd_invariants(args):
    r = report(_shape(args.input))
    _emit(args, jio.dumps(r) if args.format == "json" else r.to_text())


def cmd_construct(args):
    curve = standard_curve(args.j) if args.family == "standard" else inner_loop_curve(args.j)
    if args.format == "json":
        _emit(args, jio.dumps(curve))
    else:
        _emit(args, report(curve).to_text())


def _result_out(args, res):
    d = res.diagram
    r = report(d)
    if args.format == "json":
        doc = {"type": "sum-result", "formula": res.formula_tag, "flipped": res.flipped,
               "omega_c": res.omega_c, "omega_adj": res.omega_adj,
               "unbounded_face": res.unbounded_face,
               "predicted_jplus": res.predicted_jplus, "predicted_rot": res.predicted_rot,
               "report": jio.report_to_json(r), "curve": jio.curve_to_json(res.curve)}
        _emit(args, json.dumps(doc, indent=1, ensure_ascii=False))
    else:
        head = [f"formula        {res.formula_tag}" + (" (inserted curve reversed)" if res.flipped else ""),
                f"predicted J+   {res.predicted_jplus}",
                f"predicted rot  {res.predicted_rot}"]
        _emit(args, "\n".join(head) + "\n" + r.to_text())
    if r.jplus != res.predicted_jplus or r.rot_combinatorial != res.predicted_rot:
        raise IdentityViolation("realized sum disagrees with its prediction",
                                (r.jplus, r.rot_combinatorial),
                                (res.predicted_jplus, res.predicted_rot))


def cmd_sum(args):
    if args.kind in ("interior", "tunnel"):
        if args.spec:
            spec = jio.sumspec_from_json(json.loads(_read(args.spec)))
        else:
            if args.second is None or None in (args.face, args.arc, args.arc2):
                raise JPlusInputError("need --spec, or BASE INSERTED --face --arc --arc2")
            spec = SumSpec(_shape(args.first), args.face, args.arc, _shape(args.second), args.arc2)
        res = (interior_sum if args.kind == "interior" else tunnel_interior_sum)(spec)
    elif args.kind == "connected":
        if args.second is None or args.arc is None or args.arc2 is None:
            raise JPlusInputError("need K1 K2 --arc --arc2")
        res = connected_sum(_shape(args.first), args.arc, _shape(args.second), args.arc2,
                            mode=args.mode)
    else:
        if args.face is None or args.arc is None:
            raise JPlusInputError("need K --face --arc [--m]")
        res = add_interior_loop(_shape(args.first), args.face, args.arc, args.m)
    _result_out(args, res)


def _combinatorial(obj):
    d = as_diagram(obj)
    return CurveDiagram(d.word, d.signs, d.outer)


def cmd_move(args):
    d = _combinatorial(_shape(args.input))
    if args.action == "list":
        sites = enumerate_moves(d)
        if args.format == "json":
            _emit(args, json.dumps([jio.site_to_json(s) for s in sites], indent=1))
        else:
            _emit(args, "\n".join(f"{i:>4}  {s.describe()}" for i, s in enumerate(sites)))
    elif args.action == "apply":
        sites = enumerate_moves(d)
        if args.site is None or not 0 <= args.site < len(sites):
            raise JPlusInputError(f"--site must be in 0..{len(sites) - 1}")
        res = apply_move(d, sites[args.site])
        extra = f"move      {sites[args.site].describe()}\ndelta J+  {res.delta_jplus}"
        _out_shape(args, res.diagram, extra)
    else:
        kinds = set(args.kinds.split(",")) if args.kinds else None
        if kinds and not kinds <= set(KINDS):
            raise JPlusInputError(f"unknown kinds {sorted(kinds - set(KINDS))}")
        t = random_homotopy(d, args.steps, seed=args.seed, kinds=kinds)
        if args.format == "json":
            _emit(args, jio.dumps(t))
        else:
            lines = [f"seed {t.seed}"]
            lines += [f"{i:>5}  {s.site.describe():<60} dJ={s.delta_jplus:+d}  J+={s.running_jplus}  n={s.n}"
                      for i, s in enumerate(t.steps)]
            lines.append(f"final J+ {t.final_jplus}, d+ {t.d_plus}, d- {t.d_minus}")
            _emit(args, "\n".join(lines))


def cmd_render(args):
    obj = _shape(args.input)
    if not isinstance(obj, (PolylineCurve, CurveDiagram)):
        raise JPlusInputError("render needs a curve")
    layers = frozenset(x for x in (args.labels or "").split(",") if x)
    if not layers <= set(LAYERS):
        raise JPlusInputError(f"unknown label layers {sorted(layers - set(LAYERS))}")
    _emit(args, render_svg(RenderSpec(obj, layers)))


def cmd_verify(args):
    gold = load_goldens(args.goldens) if args.goldens else None
    results = verify_corpus(filter=args.filter, goldens=gold)
    s = summary(results)
    if args.format == "json":
        _emit(args, json.dumps(s, indent=1))
    else:
        lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.name}" +
                 ("" if r.passed else f"  expected {r.expected!r} got {r.actual!r} {r.error}")
                 for r in results]
        lines.append(f"{s['total'] - len(s['failures'])}/{s['total']} checks passed")
        _emit(args, "\n".join(lines))
    return 0 if s["passed"] else 2


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="write output to this file")
    p = argparse.ArgumentParser(prog="jplus", description="Arnold's J+ invariant of plane curves")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("ingest", parents=[common], help="validate a curve and show its diagram")
    s.add_argument("input", help="curve file (vertex lines, JSON or Gauss code); - for stdin")
    s.set_defaults(func=cmd_ingest)

    s = sub.add_parser("invariants", parents=[common], help="n, rot, J+, windings, indices")
    s.add_argument("input")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("construct", parents=[common], help="standard or inner-loop curve")
    s.add_argument("family", choices=("standard", "innerloop"))
    s.add_argument("j", type=int)
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("sum", parents=[common], help="connected, interior, tunnel or loop sum")
    s.add_argument("kind", choices=("connected", "interior", "tunnel", "loop"))
    s.add_argument("first", nargs="?", help="base curve K")
    s.add_argument("second", nargs="?", help="inserted or second curve")
    s.add_argument("--spec", help="SumSpec JSON (interior/tunnel)")
    s.add_argument("--face", type=int)
    s.add_argument("--arc", type=int)
    s.add_argument("--arc2", type=int)
    s.add_argument("--m", type=int, default=0, help="loop depth minus one")
    s.add_argument("--mode", choices=("strict", "flip", "bridge"), default="strict")
    s.set_defaults(func=cmd_sum)

    s = sub.add_parser("move", parents=[common], help="list, apply or walk perestroikas")
    s.add_argument("action", choices=("list", "apply", "walk"))
    s.add_argument("input")
    s.add_argument("--site", type=int, help="index from 'move list'")
    s.add_argument("--steps", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--kinds", help="comma-separated move kinds to allow")
    s.set_defaults(func=cmd_move)

    s = sub.add_parser("render", parents=[common], help="SVG drawing")
    s.add_argument("input")
    s.add_argument("--labels", help=",".join(LAYERS))
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("verify", parents=[common], help="recompute all golden values")
    s.add_argument("--filter")
    s.add_argument("--goldens", help="alternative golden-value file")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args)
    except IdentityViolation as e:
        print(f"identity violation: {e}", file=sys.stderr)
        return 2
    except (JPlusInputError, OSError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return code or 0
