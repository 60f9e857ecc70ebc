import json

import pytest

from cmccheck.cli import TERM_CAP, _clip, main
from cmccheck.ring import Polynomial, RingContext

SPHERE = "x1^2 + x2^2 + x3^2 - 1"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_sphere_affirmative(capsys):
    code, out, err = run(capsys, "check", SPHERE, "--vars", "3", "--hsq", "1")
    assert code == 0
    assert "verdict: divisible" in out
    assert "certificate:" in out
    assert err == ""


def test_check_wrong_curvature_negative(capsys):
    code, out, _ = run(capsys, "check", SPHERE, "--vars", "3", "--hsq", "2")
    assert code == 1
    assert "verdict: not divisible" in out
    assert "witness remainder:" in out


def test_check_solve_finds_sphere_curvature(capsys):
    code, out, _ = run(capsys, "check", SPHERE, "--vars", "3", "--hsq", "solve")
    assert code == 0
    assert "hsq: 1 (solved)" in out


def test_check_solve_reports_inadmissible(capsys):
    code, out, _ = run(
        capsys, "check", "x1^3 + x2^2 + x3", "--vars", "3", "--hsq", "solve"
    )
    assert code == 1
    assert "no admissible squared curvature" in out


def test_check_rejects_nonpositive_and_float_curvature(capsys):
    code, _, err = run(capsys, "check", "x1", "--vars", "3", "--hsq", "0")
    assert code == 2
    assert "error:" in err
    code, _, err = run(capsys, "check", SPHERE, "--vars", "3", "--hsq", "0.5")
    assert code == 2
    assert "not an exact rational" in err


def test_check_rejects_bad_polynomial_with_position(capsys):
    code, _, err = run(capsys, "check", "x1 + + x2", "--vars", "3", "--hsq", "1")
    assert code == 2
    assert "error:" in err
    code, _, err = run(capsys, "check", "x9", "--vars", "3", "--hsq", "1")
    assert code == 2
    assert "x9" in err


def test_check_json_envelope(capsys):
    code, out, _ = run(
        capsys, "check", SPHERE, "--vars", "3", "--hsq", "1", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"schema_version", "command", "inputs", "result"}
    assert payload["schema_version"] == "1"
    assert payload["command"] == "check"
    assert payload["inputs"]["vars"] == 3
    assert payload["result"]["divisible"] is True
    assert payload["result"]["hsq"] == "1"
    assert payload["result"]["witness_remainder"] is None
    assert isinstance(payload["result"]["warnings"], list)


def test_json_output_is_byte_deterministic(capsys):
    args = ("check", SPHERE, "--vars", "3", "--hsq", "1/4", "--json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    args = ("sweep", "--n", "3", "--count", "5", "--seed", "42", "--json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_defect_command(capsys):
    code, out, _ = run(capsys, "defect", "x1", "--vars", "2", "--hsq", "1")
    assert code == 0
    assert "defect: 4" in out
    code, out, _ = run(
        capsys, "defect", "x1", "--vars", "2", "--hsq", "1", "--json"
    )
    payload = json.loads(out)
    assert payload["result"] == {"defect": "4", "terms": 1, "total_degree": 0}


def test_decompose_command(capsys):
    code, out, _ = run(capsys, "decompose", "x1^3 + x1*x2 + x2", "--vars", "3")
    assert code == 0
    assert "degree 1: x2" in out
    assert "degree 2: x1*x2" in out
    assert "degree 3: x1^3" in out
    code, out, _ = run(
        capsys, "decompose", "x1^3 + x1*x2 + x2", "--vars", "3", "--json"
    )
    payload = json.loads(out)
    assert payload["result"]["parts"] == {
        "1": "x2",
        "2": "x1*x2",
        "3": "x1^3",
    }


def test_cube_test_command(capsys):
    code, out, _ = run(
        capsys,
        "cube-test",
        "x1^3 + 6*x1^2*x2 + 12*x1*x2^2 + 8*x2^3",
        "--vars",
        "2",
    )
    assert code == 0
    assert "cube root: x1 + 2*x2" in out
    code, out, _ = run(capsys, "cube-test", "x1^3 + x2^3", "--vars", "2")
    assert code == 1
    assert "not the cube" in out
    code, _, err = run(capsys, "cube-test", "x1^2", "--vars", "2")
    assert code == 2


def test_surface_command(capsys):
    code, out, _ = run(capsys, "surface", "sphere", "--n", "3", "--rsq", "4")
    assert code == 0
    assert "hsq: 1/4" in out
    assert "verified: yes" in out
    code, out, _ = run(capsys, "surface", "plane", "--n", "3")
    assert code == 0
    assert "none admissible" in out
    code, _, err = run(capsys, "surface", "sphere", "--n", "3", "--rsq", "0")
    assert code == 2
    code, out, _ = run(capsys, "surface", "cylinder", "--n", "4", "--json")
    payload = json.loads(out)
    assert payload["result"]["verified"] is True
    assert payload["result"]["hsq"] == "1/9"


def test_replay_command(capsys):
    code, out, _ = run(capsys, "replay", "--n", "3")
    assert code == 0
    assert "overall: pass" in out
    for i in range(1, 10):
        assert f"step {i} " in out
    code, _, err = run(capsys, "replay", "--n", "2")
    assert code == 2
    assert "error:" in err


def test_replay_json_shape(capsys):
    code, out, _ = run(capsys, "replay", "--n", "3", "--json")
    assert code == 0
    payload = json.loads(out)
    result = payload["result"]
    assert result["overall"] == "pass"
    assert len(result["steps"]) == 9
    assert result["steps"][5]["name"] == "cascade-division"
    assert result["steps"][5]["witness"] == "729*x1^9*Ht^2"
    assert result["delta1_expansion"]["matches"] is True


def test_sweep_command(capsys):
    code, out, _ = run(capsys, "sweep", "--n", "3", "--count", "5", "--seed", "42")
    assert code == 0
    assert "admissible: 0 of 5" in out
    code, out, _ = run(
        capsys, "sweep", "--n", "3", "--count", "5", "--seed", "42", "--degree", "2"
    )
    assert code == 0
    assert "admissible: 5 of 5" in out
    code, out, _ = run(
        capsys, "sweep", "--n", "3", "--count", "4", "--seed", "1", "--json"
    )
    payload = json.loads(out)
    assert payload["result"]["admissible_count"] == 0
    assert payload["result"]["admissible"] == []
    assert payload["inputs"]["seed"] == 1


def test_sweep_rejects_bad_dimension(capsys):
    code, _, err = run(capsys, "sweep", "--n", "2", "--count", "5")
    assert code == 2
    assert "error:" in err


def test_argparse_rejects_unknown_subcommand(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_clip_respects_term_cap():
    ctx = RingContext.geometric(1)
    x = Polynomial.variable(ctx, "x1")
    big = sum((x**k for k in range(TERM_CAP + 1)), Polynomial.zero(ctx))
    assert len(big) == TERM_CAP + 1
    clipped = _clip(big, full=False)
    assert clipped == f"<{TERM_CAP + 1} terms; rerun with --full to print>"
    assert _clip(big, full=True).count("+") == TERM_CAP
    small = x + 1
    assert _clip(small, full=False) == "x1 + 1"
    assert _clip(None, full=False) is None
