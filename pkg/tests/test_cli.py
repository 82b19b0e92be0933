import json

import pytest

from bordcat.cli import main
from bordcat.manifolds import library
from bordcat.serialization import manifold_to_file


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cohomology_torus(capsys):
    code, out, _ = run(capsys, "cohomology", "torus2", "--deg", "1", "--coeff", "Z2")
    assert code == 0
    assert out.strip() == "Z2 x Z2"


def test_cohomology_sphere_trivial_group(capsys):
    code, out, _ = run(capsys, "cohomology", "sphere2", "--deg", "1", "--coeff", "Z2")
    assert code == 0
    assert out.strip() == "0"


def test_cohomology_torus3(capsys):
    code, out, _ = run(capsys, "cohomology", "torus3", "--deg", "1", "--coeff", "Z2")
    assert code == 0
    assert out.strip() == "Z2 x Z2 x Z2"


def test_cohomology_from_file(tmp_path, capsys):
    path = tmp_path / "m.json"
    path.write_text(json.dumps(manifold_to_file(library("torus2"))))
    code, out, _ = run(capsys, "cohomology", str(path), "--deg", "1", "--coeff", "Z3")
    assert code == 0
    assert out.strip() == "Z3 x Z3"


def test_gauge_value_line(capsys):
    code, out, _ = run(
        capsys, "gauge", "trivial", "--manifold", "torus2", "--q", "0", "--coeff", "Z2"
    )
    assert code == 0
    assert "value 2, c=1/2, 4 backgrounds" in out


def test_gauge_refined(capsys):
    code, out, _ = run(
        capsys,
        "gauge",
        "trivial",
        "--manifold",
        "sphere2",
        "--q",
        "0",
        "--coeff",
        "Z2",
        "--refined",
        "A=0",
    )
    assert code == 0
    assert "value 1/2" in out


def test_gauge_json_report(capsys):
    code, out, _ = run(
        capsys, "gauge", "trivial", "--manifold", "torus2", "--q", "0", "--json"
    )
    assert code == 0
    body = out[out.index("{") :]
    data = json.loads(body)
    assert data["value"]["exact"] == "2"
    assert data["backgrounds"] == 4


def test_verify_passes_and_prints_lines(capsys):
    code, out, _ = run(capsys, "verify", "delta")
    assert code == 0
    assert "[ok]" in out


def test_verify_csv(capsys):
    code, out, _ = run(capsys, "verify", "delta", "--csv")
    assert code == 0
    assert "key,value" in out


def test_invalid_manifold_exits_2(capsys):
    code, _, err = run(capsys, "cohomology", "nope", "--deg", "1")
    assert code == 2
    assert "error" in err


def test_unknown_suite_exits_2(capsys):
    code, _, _ = run(capsys, "verify", "nope")
    assert code == 2


def test_cap_exceeded_exits_3(capsys):
    code, _, err = run(
        capsys, "gauge", "trivial", "--manifold", "torus2", "--q", "0", "--cap", "2"
    )
    assert code == 3
    assert "cap" in err


def test_env_cap_override(capsys, monkeypatch):
    monkeypatch.setenv("BORDCAT_CAP", "2")
    code, _, _ = run(capsys, "gauge", "trivial", "--manifold", "torus2", "--q", "0")
    assert code == 3


def test_bad_env_cap_exits_2(capsys, monkeypatch):
    monkeypatch.setenv("BORDCAT_CAP", "many")
    code, _, _ = run(capsys, "gauge", "trivial", "--manifold", "torus2", "--q", "0")
    assert code == 2
