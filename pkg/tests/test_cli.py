import csv
import io
import json
import subprocess
import sys

import pytest

from spiralsearch.cli import main

from .conftest import COST_STAR, KAPPA_STAR


def run(args, capsys):
    status = main(args)
    out, err = capsys.readouterr()
    return status, out, err


def test_figure1(capsys):
    status, out, _ = run(["figure1"], capsys)
    assert status == 0
    data = json.loads(out)
    assert data["theta0_deg"] == pytest.approx(348.4, abs=0.1)
    assert data["theta1_deg"] == pytest.approx(641.5, abs=0.1)
    assert data["circle_touch_deg"] == pytest.approx(339.1, abs=0.1)


def test_optimize_defaults(capsys):
    status, out, _ = run(["optimize"], capsys)
    assert status == 0
    data = json.loads(out)
    assert data["kappa_star"] == pytest.approx(KAPPA_STAR, abs=1e-6)
    assert data["cost_star"] == pytest.approx(COST_STAR, abs=1e-6)
    assert len(data["bracket"]) == 2


def test_negative_radius_is_usage_error(capsys):
    status, out, err = run(["analyze", "--spiral", "arch:kappa=1", "--radius", "-3"], capsys)
    assert status == 2
    assert json.loads(out)["error"]["code"] == "usage"
    assert "usage" in err


@pytest.mark.parametrize(
    "args",
    [
        ["analyze", "--spiral", "bogus:x=1", "--radius", "1"],
        ["analyze", "--spiral", "arch:kappa=1,zz=2", "--radius", "1"],
        ["nope"],
        ["optimize", "--format", "csv"],
        ["optimize", "--kappa-min", "0.9", "--kappa-max", "0.1"],
        ["sweep", "--spiral", "arch:kappa=1", "--radius-start", "10", "--radius-end", "1"],
        ["analyze", "--spiral", "arch:kappa=1", "--radius", "1", "--root-interval", "0.5"],
    ],
)
def test_usage_errors(args, capsys):
    status, out, _ = run(args, capsys)
    assert status == 2
    assert "error" in json.loads(out)


def test_numeric_failure_exit_1(capsys):
    status, out, _ = run(["optimize", "--kappa-min", "0.5", "--kappa-max", "1"], capsys)
    assert status == 1
    assert json.loads(out)["error"]["code"] == "minimum_on_boundary"


def test_analyze_json(capsys):
    status, out, _ = run(["analyze", "--spiral", "log:kappa=0.2124695594,C=1", "--radius", "10"], capsys)
    assert status == 0
    data = json.loads(out)
    assert data["normalized_cost"] == pytest.approx(COST_STAR, abs=1e-6)
    assert set(data["tangency"]["critical_line"]) == {"a", "b", "c"}


def test_analyze_csv(capsys):
    status, out, _ = run(["analyze", "--spiral", "arch:kappa=1", "--radius", "6", "--format", "csv"], capsys)
    assert status == 0
    assert out.splitlines()[0] == "radius,theta0_rad,theta1_rad,lambda,normalized_cost"


def test_sweep_csv(capsys):
    status, out, _ = run(
        ["sweep", "--spiral", "arch:kappa=1", "--radius-start", "10", "--radius-end", "1e4",
         "--points", "4", "--log-spacing", "--format", "csv"],
        capsys,
    )
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == "radius,theta0_rad,theta1_rad,lambda,normalized_cost"
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [float(r["radius"]) for r in rows] == [10, 100, 1000, 10000]
    costs = [float(r["normalized_cost"]) for r in rows]
    assert costs == sorted(costs)


def test_sweep_json_classification(capsys):
    status, out, _ = run(
        ["sweep", "--spiral", "log:kappa=0.3", "--radius-start", "1", "--radius-end", "100",
         "--points", "3", "--angle-unit", "deg"],
        capsys,
    )
    data = json.loads(out)
    assert data["classification"] == "bounded"
    assert "theta0_deg" in data["rows"][0]


def test_bounds(capsys):
    status, out, _ = run(["bounds", "--bound", "pexp", "--theta0", "1e4", "--b", "1"], capsys)
    assert status == 0
    assert json.loads(out)["value"] == pytest.approx(46.2813853, rel=5e-3)
    status, out, _ = run(["bounds", "--bound", "pexp", "--theta0", "1e4", "--a", "1"], capsys)
    assert status == 1


def test_seventeen_digits(capsys):
    _, out, _ = run(["figure1"], capsys)
    assert '"theta0_rad": 6.0805975003290' in out
    digits = out.split('"theta0_rad": ')[1].split(",")[0]
    assert len(digits.replace(".", "")) == 17


def test_deterministic_subprocess():
    cmd = [sys.executable, "-m", "spiralsearch", "sweep", "--spiral", "sexp:a=0.5",
           "--radius-start", "1", "--radius-end", "1000", "--points", "4", "--log-spacing"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
