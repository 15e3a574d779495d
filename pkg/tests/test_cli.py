import json
import subprocess
import sys
from fractions import Fraction as F
from pathlib import Path

import pytest

GOLDEN = Path(__file__).parent / "golden"


def run(*args, cwd=None):
    proc = subprocess.run([sys.executable, "-m", "auxetica", *map(str, args)],
                          capture_output=True, text=True, cwd=cwd)
    return proc.returncode, proc.stdout, proc.stderr


@pytest.fixture(scope="module")
def files(tmp_path_factory):
    d = tmp_path_factory.mktemp("fam")
    out = {}
    for lam, name in (("1/6", "1_6"), ("1/3", "1_3"), ("5/12", "5_12")):
        path = d / f"family_{name}.json"
        code, _, _ = run("family", lam, path)
        assert code == 0
        out[name] = path
    return out


def close(a, b):
    """Rational strings compare exactly, floats to 1e-9 relative."""
    if isinstance(a, dict):
        return a.keys() == b.keys() and all(close(a[k], b[k]) for k in a)
    if isinstance(a, list):
        return len(a) == len(b) and all(close(x, y) for x, y in zip(a, b))
    if isinstance(a, float) or isinstance(b, float):
        return abs(a - b) <= 1e-9 * max(1.0, abs(a))
    return a == b


@pytest.mark.parametrize("name, code", [("1_6", 0), ("1_3", 2), ("5_12", 1)])
def test_decide_golden(files, name, code):
    rc, out, _ = run("decide", "--json", files[name])
    assert rc == code
    report = json.loads(out)
    report.pop("path")
    assert close(report, json.loads((GOLDEN / f"decide_fam_{name}.json").read_text()))


def test_decide_text(files):
    rc, out, _ = run("decide", files["1_6"])
    assert rc == 0 and "S = -2287/4000752" in out and "k = 25.6407" in out
    rc, out, _ = run("decide", files["1_3"])
    assert rc == 2 and "cubic is singular" in out


def test_decide_k_field(files):
    rc, out, _ = run("decide", "--json", files["5_12"])
    assert rc == 1
    assert json.loads(out)["invariants"]["k"] == pytest.approx(10.6042, abs=5e-5)


def test_decide_batch_parallel(files):
    rc, out, _ = run("decide", "--json", "--jobs", "2", files["1_6"], files["5_12"])
    assert rc == 1
    assert [r["verdict"] for r in json.loads(out)] == ["AUXETIC", "NOT_AUXETIC"]


def test_decide_float_mode(files):
    rc, out, _ = run("decide", "--float", "--json", files["1_6"])
    assert rc == 0 and json.loads(out)["mode"] == "float"


def test_invariants_command(files, tmp_path):
    rc, out, _ = run("invariants", "--json", files["1_6"])
    data = json.loads(out)
    assert rc == 0 and data["delta"] == "1000000/22067482534159923" and data["k_4dp"] == "25.6407"
    rc, out, _ = run("invariants", files["1_3"])
    assert rc == 2 and "delta = 0" in out and "cubic is singular" in out
    fermat = tmp_path / "fermat.json"
    # pencil whose determinant is X^3 + Y^3 + Z^3 is awkward; a cubic document is direct
    fermat.write_text(json.dumps({"cubic": [1, 1, 1, 0, 0, 0, 0, 0, 0, 0]}))
    rc, out, _ = run("invariants", "--json", fermat)
    assert rc == 0 and json.loads(out)["J"] == "0"


def test_invariants_pencil_document(tmp_path):
    diag = tmp_path / "diag.json"
    diag.write_text(json.dumps({"pencil": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, 0], [0, 0, 0], [0, 0, 0]]}))
    rc, out, _ = run("invariants", "--json", diag)
    # XYZ is a triangle of lines: singular
    assert rc == 2 and json.loads(out)["singular"] is True


def test_deform(files):
    rc, out, _ = run("deform", files["1_6"])
    assert rc == 0
    assert "[1, 5/14, 5/14]" in out and "qdot_1 = [4/7, 4/7, 4/7]" in out and "residual = 0" in out
    rc, _, _ = run("deform", files["5_12"])
    assert rc == 1


def test_simulate(files, tmp_path):
    out = tmp_path / "traj.jsonl"
    rc, _, _ = run("simulate", files["1_6"], "--steps", "50", "--tau", "1e-3", "--out", out)
    assert rc == 0
    records = [json.loads(line) for line in out.read_text().splitlines()]
    assert len(records) == 51
    assert all(len(r["gram"]) == 9 and len(r["coords"]) == 3 for r in records)
    assert max(r["drift"] for r in records) < 1e-8
    rc, _, err = run("simulate", files["5_12"], "--steps", "2")
    assert rc == 4 and "NOT_AUXETIC_AT_START" in err


def test_plot(files, tmp_path):
    out = tmp_path / "curve.json"
    rc, _, _ = run("plot", files["1_6"], out, "--samples", "81")
    assert rc == 0
    data = json.loads(out.read_text())
    assert data["polylines"] and all(len(pt) == 2 for line in data["polylines"] for pt in line)


def test_family_then_decide_roundtrip(tmp_path):
    path = tmp_path / "f.json"
    assert run("family", "--", "-1/2", path)[0] == 0  # negative rationals need "--"
    assert run("decide", path)[0] == 0


def test_input_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": [[0, 0, 0]], "edges": [], ')
    rc, _, err = run("decide", bad)
    assert rc == 3 and "line 1" in err
    bad.write_text(json.dumps({"vertices": [["0", "0", "x"]], "edges": [], "gram": [1, 1, 1, 0, 0, 0]}))
    rc, _, err = run("decide", bad)
    assert rc == 3 and "vertices[0][2]" in err
    rc, _, _ = run("decide", tmp_path / "missing.json")
    assert rc == 3
    rc, _, _ = run("decide", "--exact", "--float", bad)
    assert rc == 3


def test_reports_deterministic(files):
    a = run("decide", "--json", files["1_6"])[1]
    b = run("decide", "--json", files["1_6"])[1]
    assert a == b
