#!/usr/bin/env python3
"""
Test CLI
End-to-end runs of the dinterval subcommands with their exit codes
"""

import io
import json
import os
import sys
import tempfile
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

# Add the project directory to Python path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from main import run
from services.file_service import file_service
from services.generators_service import generators_service
from services.interval_service import interval_service

COUNTEREXAMPLE = generators_service.counterexample_graph(0)


def _run(*argv: str):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = run(list(argv))
    return code, out.getvalue()


def _workspace() -> Path:
    path = Path(tempfile.mkdtemp(prefix="dinterval-cli-"))
    file_service.write_text(path / "g.el", file_service.write_graph(COUNTEREXAMPLE))
    return path


# =============================================================================
# GENERATION AND RECOGNITION
# =============================================================================

def test_gen_writes_edge_list():
    tmp = _workspace()
    code, _ = _run("gen", "counterexample:1", "-o", str(tmp / "v1.el"))
    assert code == 0
    assert file_service.read_graph_file(tmp / "v1.el") == generators_service.counterexample_graph(1)


def test_gen_representation_json():
    code, out = _run("gen", "counterexample-rep", "--json")
    assert code == 0
    assert file_service.load_representation(out) == generators_service.counterexample_interval_rep()


def test_gen_rejects_unknown_names():
    assert _run("gen", "dodecahedron")[0] == 2
    assert _run("gen", "kbip:5")[0] == 2


def test_recognize_interval():
    tmp = _workspace()
    code, out = _run("recognize-interval", str(tmp / "g.el"))
    assert code == 0
    assert interval_service.d_intersection_graph(file_service.load_representation(out)) == COUNTEREXAMPLE

    file_service.write_text(tmp / "c4.el", file_service.write_graph(generators_service.cycle(4)))
    assert _run("recognize-interval", str(tmp / "c4.el"))[0] == 1


def test_claw_check():
    tmp = _workspace()
    assert _run("claw-check", str(tmp / "g.el"), "-t", "5")[0] == 0
    code, out = _run("claw-check", str(tmp / "g.el"), "-t", "4", "--json")
    assert code == 1
    payload = json.loads(out)
    assert payload["free"] is False and len(payload["witness"]) == 5

    code, out = _run("claw-check", str(tmp / "g.el"), "--e-claw", "--json")
    assert code == 1 and len(json.loads(out)["witness"]) == 6


# =============================================================================
# CONSTRUCTIONS
# =============================================================================

def test_build_unit_then_verify():
    tmp = _workspace()
    code, _ = _run("build-unit", str(tmp / "g.el"), "-d", "2", "-o", str(tmp / "unit.json"))
    assert code == 0
    rep = file_service.read_representation_file(tmp / "unit.json")
    assert rep.d == 2

    code, out = _run("verify", str(tmp / "unit.json"), str(tmp / "g.el"), "--unit")
    assert code == 0 and out.strip() == "ok"

    code, out = _run("verify", str(tmp / "unit.json"), str(tmp / "g.el"), "--unit", "--json")
    assert code == 0 and json.loads(out) == {"ok": True, "violations": []}

    file_service.write_text(tmp / "p3.el", file_service.write_graph(generators_service.path(3)))
    code, out = _run("verify", str(tmp / "unit.json"), str(tmp / "p3.el"), "--json")
    assert code == 1 and json.loads(out)["ok"] is False


def test_build_unit_from_representation_file():
    tmp = _workspace()
    file_service.write_text(tmp / "alg.json", file_service.dump_representation(generators_service.alg_figure_rep()[0]))
    assert _run("build-unit", str(tmp / "alg.json"), "-d", "3")[0] == 1
    code, out = _run("build-unit", str(tmp / "alg.json"), "-d", "4", "--json", "--no-pad")
    assert code == 0
    assert file_service.load_representation(out).d == 4


def test_build_unit_exit_codes():
    tmp = _workspace()
    assert _run("build-unit", str(tmp / "g.el"), "-d", "1")[0] == 1
    assert _run("build-disjoint-unit", str(tmp / "g.el"), "-d", "2")[0] == 1
    assert _run("build-unit", str(tmp / "missing.el"), "-d", "2")[0] == 2
    file_service.write_text(tmp / "bad.el", "p 2\ne 1 1\n")
    assert _run("build-unit", str(tmp / "bad.el"), "-d", "2")[0] == 2
    file_service.write_text(tmp / "reversed.el", "p 2\ne 2 1\n")
    assert _run("build-unit", str(tmp / "reversed.el"), "-d", "2")[0] == 2
    file_service.write_text(tmp / "zero.json", '{"d": 1, "vertices": {"1": [["1/0", "2"]]}}')
    assert _run("verify", str(tmp / "zero.json"), str(tmp / "g.el"))[0] == 2
    assert _run("build-unit", str(tmp / "g.el"))[0] == 2


def test_render_svg():
    tmp = _workspace()
    file_service.write_text(tmp / "unit.json", file_service.dump_representation(generators_service.counterexample_unit_rep()))
    code, _ = _run("render", str(tmp / "unit.json"), "-o", str(tmp / "unit.svg"))
    assert code == 0
    assert (tmp / "unit.svg").read_text(encoding="utf-8").count('class="segment"') == 19


# =============================================================================
# SPLIT SEARCH
# =============================================================================

def test_check_split_verdicts():
    tmp = _workspace()
    assert _run("check-split", str(tmp / "g.el"), "--mode", "disjoint", "--threads", "1")[0] == 1

    code, out = _run(
        "check-split", str(tmp / "g.el"), "--mode", "nondisjoint", "--threads", "1",
        "--json", "--out", str(tmp / "split.json"),
    )
    assert code == 0
    assert json.loads(out)["verdict"] == "yes"
    rep = file_service.read_representation_file(tmp / "split.json")
    assert interval_service.verify_representation(rep, COUNTEREXAMPLE, require_unit=True).ok


def test_check_split_exhausted():
    tmp = _workspace()
    code, out = _run("check-split", str(tmp / "g.el"), "--node-budget", "1", "--threads", "1", "--json")
    assert code == 3
    assert json.loads(out)["verdict"] == "exhausted"


def test_bench_json():
    code, out = _run("bench", "--sizes", "200,400", "--json")
    assert code == 0
    rows = json.loads(out)
    assert [row["intervals"] for row in rows] == [200, 400]
    assert rows[0]["ratio"] is None


if __name__ == "__main__":
    print("🧪 Testing CLI...")
    tests = [(name, obj) for name, obj in list(globals().items()) if name.startswith("test_") and callable(obj)]
    failed = 0
    for name, test in tests:
        try:
            test()
            print(f"✅ {name}")
        except Exception as e:
            failed += 1
            print(f"❌ {name}: {e!r}")
    print(f"\n{len(tests) - failed}/{len(tests)} passed")
    sys.exit(1 if failed else 0)
