import json

import pytest

from metric_complements.cli import main, parse_params
from metric_complements.shapes import save_shape
from metric_complements import HPolytope, SandwichSet, VPolytope


@pytest.fixture
def square(tmp_path):
    path = tmp_path / "square.json"
    save_shape(HPolytope.box_from_bounds([0, 0], [1, 1]), path)
    return str(path)


@pytest.fixture
def sandwich(tmp_path):
    path = tmp_path / "sandwich.json"
    save_shape(SandwichSet(VPolytope([[0.0], [1.0]]), VPolytope([[0.0], [2.0]])), path)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_params():
    p = parse_params(["x=0.5,0.5", "r=2", "x0=1"])
    assert list(p["x"]) == [0.5, 0.5] and p["r"] == 2.0 and list(p["x0"]) == [1.0]
    with pytest.raises(ValueError):
        parse_params(["nonsense"])


@pytest.mark.parametrize("point, status", [("1.5", "Inside"), ("0", "Undetermined"), ("2.5", "Outside")])
def test_classify_sandwich(capsys, sandwich, point, status):
    code, out, _ = run(capsys, "oracle", "classify", "--shape", sandwich, "--point", point)
    assert code == 0 and json.loads(out)["status"] == status


def test_oracle_build(capsys, square, tmp_path):
    npz = tmp_path / "grid.npz"
    code, out, _ = run(capsys, "oracle", "build", "--shape", square, "--step", "0.05",
                       "--eps", "0.1", "--point", "0.5,0.5", "--out", str(npz))
    data = json.loads(out)
    assert code == 0 and data["double_complement"] is True and npz.exists()
    assert sum(data["counts"].values()) == data["points"]


def test_witness_density(capsys, square):
    code, out, _ = run(capsys, "witness", "density", "--shape", square, "--params",
                       "x0=0.5,0.5", "r=0.5", "y=1,0.5", "eps=0.5")
    data = json.loads(out)
    assert code == 0 and data["z"] == [0.75, 0.5] and data["verified"]


def test_witness_transport(capsys):
    code, out, _ = run(capsys, "witness", "transport", "--params", "x=0,0", "y=2,0", "lam=0.5",
                       "r=1", "zeta=1,0.5")
    assert code == 0 and json.loads(out)["xi"] == [0.0, 0.5]


def test_witness_precondition_exit(capsys, square):
    code, _, err = run(capsys, "witness", "segment", "--shape", square, "--params",
                       "x=0.5,0.5", "r=0.5", "y=5,0.5", "lam=0.5")
    assert code == 2 and "PreconditionFailed" in err


def test_simplex(capsys):
    code, out, _ = run(capsys, "simplex", "--dim", "3", "--check", "--trials", "500",
                       "--scale", "2", "--center", "1,1,1")
    data = json.loads(out)
    assert code == 0 and data["report"]["max_norm_error"] < 1e-9
    assert data["report"]["inradius"] == pytest.approx(2 / 3)
    assert data["perturbation"]["failures"] == 0


def test_verify_pass_and_report(capsys, square, tmp_path):
    out_file = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--theorem", "located-interior", "--shape", square,
                       "--samples", "2000", "--out", str(out_file))
    assert code == 0 and out.startswith("PASS")
    assert json.loads(out_file.read_text())["passed"] is True


def test_verify_random(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "double-complement-convex",
                       "--random", "ball,2,0", "--samples", "200")
    assert code == 0 and "PASS" in out


def test_verify_failure_exit(capsys, square):
    code, out, _ = run(capsys, "verify", "--theorem", "degenerate-empty", "--shape", square,
                       "--samples", "500")
    assert code == 1 and out.startswith("FAIL")


def test_verify_needs_one_source(capsys, square):
    code, _, err = run(capsys, "verify", "--theorem", "located-interior")
    assert code == 2 and "exactly one" in err
