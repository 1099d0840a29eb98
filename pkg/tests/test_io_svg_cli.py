import json
import subprocess
import sys

import pytest

from jplus import io as jio
from jplus.cli import main
from jplus.constructions import SumSpec
from jplus.diagram import CurveDiagram, canonical_form, trace_diagram
from jplus.errors import JPlusInputError, NoGeometry
from jplus.invariants import report
from jplus.moves import random_homotopy
from jplus.svg import RenderSpec, render_svg
from jplus.templates import figure_eight, inner_loop_curve, single_and_double_loop, standard_curve
from jplus.verify import load_goldens, verify_corpus


def test_json_round_trips():
    c = single_and_double_loop()
    assert jio.loads(jio.dumps(c)) == c
    d = trace_diagram(c)
    back = jio.loads(jio.dumps(d))
    assert back.word == d.word and back.geometry.curve == c
    bare = CurveDiagram(d.word, d.signs, d.outer)
    assert canonical_form(jio.loads(jio.dumps(bare))) == canonical_form(d)
    r = report(c)
    assert jio.loads(jio.dumps(r)) == r
    t = random_homotopy(bare, 20, seed=1)
    t2 = jio.loads(jio.dumps(t))
    assert t2.steps == t.steps and canonical_form(t2.final) == canonical_form(t.final)
    spec = SumSpec(standard_curve(2), 1, 0, figure_eight(), 0, omega_adj=None)
    assert jio.loads(jio.dumps(spec)) == spec


def test_bad_documents():
    with pytest.raises(JPlusInputError):
        jio.loads("{not json")
    with pytest.raises(JPlusInputError):
        jio.loads('{"type": "banana"}')
    with pytest.raises(JPlusInputError):
        jio.read_shape("1 2 3\n4 5 6")
    doc = jio.diagram_to_json(trace_diagram(standard_curve(2)))
    doc["word"] = doc["word"][::-1] + [0]
    with pytest.raises(JPlusInputError):
        jio.diagram_from_json(doc)


def test_read_shape_formats():
    assert isinstance(jio.read_shape("0 0\n4 0\n4 4 # comment\n0 4\n"), type(standard_curve(1)))
    assert jio.read_shape("1+ 1+ @0").n == 1
    assert jio.read_shape("0.5, 0\n1 1\n0 1").vertices[0][0] == jio.to_fraction("1/2")


def test_svg_deterministic_and_labeled():
    spec = RenderSpec(inner_loop_curve(3), frozenset({"winding", "index", "rotation",
                                                      "orientation-arrows"}))
    a, b = render_svg(spec), render_svg(spec)
    assert a == b
    assert a.startswith("<?xml") and a.rstrip().endswith("</svg>")
    assert 'id="windings"' in a and 'id="indices"' in a and "rot = 3" in a
    neg = render_svg(RenderSpec(standard_curve(-2), frozenset({"winding"})))
    assert "−1" in neg
    d = trace_diagram(figure_eight())
    with pytest.raises(NoGeometry):
        render_svg(RenderSpec(CurveDiagram(d.word, d.signs, d.outer)))


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_invariants(tmp_path, capsys):
    f = tmp_path / "c.json"
    f.write_text(jio.dumps(single_and_double_loop()))
    code, out, _ = run(["invariants", str(f), "--format", "json"], capsys)
    assert code == 0 and json.loads(out)["jplus"] == -8
    code, out, _ = run(["ingest", str(f)], capsys)
    assert code == 0 and "crossings 3" in out


def test_cli_construct_sum_move(tmp_path, capsys):
    code, out, _ = run(["construct", "innerloop", "4", "--format", "json"], capsys)
    assert code == 0
    f = tmp_path / "a4.json"
    f.write_text(out)
    code, out, _ = run(["sum", "loop", str(f), "--face", "1", "--arc", "0", "--m", "1"], capsys)
    assert code == 0 and "predicted J+" in out
    code, out, _ = run(["move", "list", str(f)], capsys)
    assert code == 0 and "Tangency" in out
    code, out, _ = run(["move", "apply", str(f), "--site", "0"], capsys)
    assert code == 0 and "delta J+" in out
    code, out, _ = run(["move", "walk", str(f), "--steps", "30", "--seed", "3"], capsys)
    assert code == 0 and "final J+" in out
    svg = tmp_path / "a4.svg"
    code, _, _ = run(["render", str(f), "--labels", "winding,index", "--out", str(svg)], capsys)
    assert code == 0 and svg.read_text().startswith("<?xml")


def test_cli_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("0 0\n4 0\n4 4\n2 0\n0 4\n")  # vertex on an edge
    code, _, err = run(["invariants", str(bad)], capsys)
    assert code == 1 and err.startswith("error:")
    code, _, _ = run(["invariants", str(tmp_path / "missing")], capsys)
    assert code == 1
    code, _, _ = run(["move", "apply", str(bad), "--site", "0"], capsys)
    assert code == 1
    with pytest.raises(SystemExit):
        main(["nonsense"])


def test_verify_filter_and_corrupted_golden(tmp_path, capsys):
    results = verify_corpus(filter="standard-curves")
    assert len(results) == 21 and all(r.passed for r in results)
    gold = load_goldens()
    gold["standard-curves/K5"] = [0, 0]
    path = tmp_path / "gold.json"
    path.write_text(json.dumps(gold))
    code, out, _ = run(["verify", "--filter", "standard-curves", "--goldens", str(path)], capsys)
    assert code == 2
    assert sum(1 for line in out.splitlines() if line.startswith("FAIL")) == 1
    assert "FAIL  standard-curves/K5" in out


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "jplus", "construct", "standard", "-3"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and "-4" in p.stdout.replace("−", "-")
