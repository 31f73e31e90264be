import json
import subprocess
import sys

import pytest

from algplane.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def square_curve(kind):
    one = {"x": "1", "y": "0"}
    zero = {"x": "0", "y": "0"}
    return {"kind": kind, "degree": 2, "coeffs": {"F1": [zero, one], "F2": [zero, zero, one]}}


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["--kind", "dual", "mul", "0,1", "0,1"], {"x": "0", "y": "0"}),
        (["--kind", "complex", "mul", "0,1", "0,1"], {"x": "-1", "y": "0"}),
        (["--kind", "double", "mul", "0,1", "0,1"], {"x": "1", "y": "0"}),
        (["--kind", "dual", "inverse", "2,3"], {"x": "1/2", "y": "-3/4"}),
        (["--kind", "double", "zero-divisor", "1,1"], {"zero_divisor": True}),
        (["--kind", "complex", "matrix", "3,4"], {"matrix": [["3", "-4"], ["4", "3"]], "det": "25"}),
        (["--kind", "double", "cone-ruling", "2,4,1,2"], {"lambda": "2", "mu": "1/2"}),
    ],
)
def test_algebra(capsys, argv, expected):
    code, out, _ = run(capsys, "algebra", *argv)
    assert code == 0
    assert json.loads(out) == expected


def test_algebra_negative_operands(capsys):
    code, out, _ = run(capsys, "algebra", "--kind", "complex", "add", "--", "-1,2", "3,-4")
    assert code == 0 and json.loads(out) == {"x": "2", "y": "-2"}


def test_algebra_errors(capsys):
    code, out, _ = run(capsys, "algebra", "--kind", "double", "inverse", "1,1")
    assert code == 2
    assert json.loads(out)["error"] == "DivisorError"
    code, _, _ = run(capsys, "algebra", "--kind", "double", "cone-ruling", "1,0,0,1")
    assert code == 2
    assert run(capsys, "algebra", "--kind", "dual", "mul", "a,b", "1,0")[0] == 64
    assert run(capsys, "algebra", "--kind", "dual", "mul", "1,0")[0] == 64
    with pytest.raises(SystemExit) as exc:
        main(["algebra", "--kind", "quaternion", "mul", "1,0", "1,0"])
    assert exc.value.code == 64
    with pytest.raises(SystemExit) as exc:
        main(["congruence", "--kind", "dual", "--grid", "5by5"])
    assert exc.value.code == 64


@pytest.mark.parametrize(
    "kind, cls, real",
    [("double", "hyperbolic", 2), ("dual", "parabolic", 1), ("complex", "elliptic", 0)],
)
def test_congruence(capsys, kind, cls, real):
    code, out, _ = run(capsys, "congruence", "--kind", kind, "--samples", "100", "--seed", "42")
    assert code == 0
    rep = json.loads(out)
    assert rep["schema"] == "1"
    assert rep["class"] == cls and rep["real_foci"] == real
    assert rep["failures"] == [] and rep["derived_polynomial_mismatches"] == 0
    if kind == "dual":
        basis = rep["focal_planes"][0]["basis"]
        assert basis == [[str(int(i == k)) for i in range(6)] for k in (1, 3, 5)]


def test_congruence_float_mode(capsys):
    code, out, _ = run(capsys, "congruence", "--kind", "double", "--samples", "20", "--mode", "float")
    assert code == 0 and json.loads(out)["failures"] == []


@pytest.mark.parametrize(
    "kind, cls", [("double", "join"), ("dual", "plane-curve-family"), ("complex", "no-real-singularities")]
)
def test_curve(capsys, tmp_path, kind, cls):
    path = tmp_path / "c.json"
    path.write_text(json.dumps(square_curve(kind)))
    code, out, _ = run(capsys, "curve", str(path))
    rep = json.loads(out)
    assert code == 0
    assert rep["classification"] == cls
    assert len(rep["per_sample"]) == 25
    if kind == "double":
        assert set(rep["focal_curves"]) == {"gamma1", "gamma2"}


def test_curve_degenerate_exit(capsys, tmp_path):
    const = square_curve("double")
    const["coeffs"] = {"F1": [{"x": "1", "y": "0"}], "F2": [{"x": "2", "y": "1"}]}
    const["degree"] = 0
    path = tmp_path / "c.json"
    path.write_text(json.dumps(const))
    assert run(capsys, "curve", str(path))[0] == 4


def test_curve_bad_input(capsys, tmp_path):
    path = tmp_path / "c.json"
    path.write_text("{not json")
    assert run(capsys, "curve", str(path))[0] == 64
    path.write_text(json.dumps({"kind": "double"}))
    assert run(capsys, "curve", str(path))[0] == 64
    assert run(capsys, "curve")[0] == 64


def test_join(capsys, tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps(square_curve("double")))
    out_path = tmp_path / "report.json"
    code, _, _ = run(capsys, "curve", str(path), "--out", str(out_path))
    assert code == 0
    code, out, _ = run(capsys, "join", str(out_path))
    rep = json.loads(out)
    assert code == 0 and rep["reproduced"] == rep["generators"] == 25
    curves = json.loads(out_path.read_text())["focal_curves"]
    pair = tmp_path / "g.json"
    pair.write_text(
        json.dumps({"gamma1": [p["point"] for p in curves["gamma1"]], "gamma2": [p["point"] for p in curves["gamma2"]]})
    )
    code, out, _ = run(capsys, "join", str(pair))
    assert code == 0 and len(json.loads(out)["lines"]) == 25
    path.write_text(json.dumps(square_curve("dual")))
    assert run(capsys, "join", str(path))[0] == 2


def test_reports_are_deterministic(tmp_path):
    outputs = []
    for name in ("a", "b"):
        out = tmp_path / f"{name}.json"
        main(["congruence", "--kind", "double", "--samples", "30", "--seed", "7", "--out", str(out)])
        outputs.append(out.read_bytes())
        out = tmp_path / f"{name}-curve.json"
        main(["curve", "--kind", "dual", "--random-degree", "3", "--seed", "7", "--grid", "3x3", "--out", str(out)])
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[2] and outputs[1] == outputs[3]
    other = tmp_path / "c.json"
    main(["congruence", "--kind", "double", "--samples", "30", "--seed", "8", "--out", str(other)])
    assert other.read_bytes() != outputs[0]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "algplane", "algebra", "--kind", "dual", "mul", "0,1", "0,1"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"x": "0", "y": "0"}
