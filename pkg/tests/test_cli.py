import json

import pytest

from glci.algebra import canonical_interval, i_canonical_quiver
from glci.cli import (
    main,
    parse_element,
    parse_weights,
    quiver_from_json,
    quiver_to_dot,
    quiver_to_json,
)
from glci.grading import WeightSystem, normalize_weights


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_weights():
    assert parse_weights("2,3,5") == (2, 3, 5)
    assert parse_weights("-") == ()
    with pytest.raises(Exception):
        parse_weights("2,x")


def test_parse_element():
    ws = WeightSystem(1, (2, 3, 5))
    x = parse_element(ws, "1,2,0;-1")
    assert x.torsion == (1, 2, 0) and x.free == -1
    ws0 = WeightSystem(2, ())
    assert parse_element(ws0, "2").free == 2


def test_info_text(capsys):
    code, out, _ = run_cli(capsys, "info", "--dim", "1", "--weights", "2,3,5")
    assert code == 0
    assert "trichotomy: Fano" in out
    assert "cm_finite: True" in out
    assert "k0_rank: 9" in out


def test_info_json(capsys):
    code, out, _ = run_cli(
        capsys, "info", "--dim", "2", "--weights", "2,3", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["k0_rank"] == 11
    assert payload["cm_rank"] == 0
    assert payload["frac_cy"] == "zero"


def test_coxeter_text_matches_printed_form(capsys):
    code, out, _ = run_cli(
        capsys, "coxeter", "--dim", "2", "--weights", "2,3", "--format", "text"
    )
    assert code == 0
    assert out.splitlines()[0] == "(1-t)^3 (1+t)^2 (1+t+t^2)^2 (1-t+t^2)"


def test_coxeter_matrix_check(capsys):
    code, out, _ = run_cli(
        capsys, "coxeter", "--dim", "1", "--weights", "2,3,5", "--check-matrix"
    )
    assert code == 0
    assert "matrix route agrees: True" in out


def test_mf_verify_summary(capsys):
    code, out, _ = run_cli(
        capsys, "mf", "--dim", "1", "--weights", "2,3,5", "--verify"
    )
    assert code == 0
    assert "8 factorizations, all identities verified" in out


def test_mf_requires_hypersurface(capsys):
    code, _, err = run_cli(capsys, "mf", "--dim", "2", "--weights", "2,3")
    assert code == 2
    assert "error" in err


def test_atilde_text(capsys):
    code, out, _ = run_cli(capsys, "atilde", "--dim", "2", "--weights", "2,3,4")
    assert code == 0
    assert "vertices: 26" in out
    assert "cut axioms hold: True" in out


def test_atilde_dot_marks_cut_arrows(capsys):
    code, out, _ = run_cli(
        capsys, "atilde", "--dim", "1", "--weights", "-", "--format", "dot"
    )
    assert code == 0
    assert out.count("style=dashed") == 2


def test_quiver_json_round_trip(capsys):
    code, out, _ = run_cli(
        capsys, "quiver", "--dim", "1", "--weights", "2,3,5", "--format", "json"
    )
    assert code == 0
    ws = normalize_weights(WeightSystem(1, (2, 3, 5)))
    reference = i_canonical_quiver(ws, canonical_interval(ws))
    parsed = quiver_from_json(json.loads(out))
    assert parsed == reference


def test_quiver_round_trip_direct():
    ws = WeightSystem(1, (2, 2, 2))
    q = i_canonical_quiver(ws, canonical_interval(ws))
    assert quiver_from_json(json.loads(json.dumps(quiver_to_json(q)))) == q


def test_quiver_custom_interval(capsys):
    code, out, _ = run_cli(
        capsys,
        "quiver",
        "--dim",
        "1",
        "--weights",
        "2,3,3",
        "--interval",
        "0,0,0;0..0,1,1;0",
        "--format",
        "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert len(payload["vertices"]) == 4


def test_quiver_cm_interval_empty_is_ok(capsys):
    code, out, _ = run_cli(
        capsys, "quiver", "--dim", "2", "--weights", "2,3,4", "--interval", "cm", "--format", "dot"
    )
    assert code == 0
    assert "digraph" in out


def test_enumerate_text(capsys):
    code, out, _ = run_cli(
        capsys, "enumerate", "--dim", "2", "-n", "6", "--class", "calabiyau"
    )
    assert code == 0
    assert "(2,2,2,2,2,2)" in out


def test_deterministic_output(capsys):
    args = ("info", "--dim", "2", "--weights", "2,2,3,4", "--format", "json")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2
    args = ("quiver", "--dim", "1", "--weights", "2,3,5", "--format", "json")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2


def test_invalid_weights_exit_code(capsys):
    code, _, err = run_cli(capsys, "info", "--dim", "1", "--weights", "2,zz")
    assert code == 2


def test_suite_filter(capsys):
    code, out, _ = run_cli(capsys, "suite", "--only", "gldim")
    assert code == 0
    assert "PASS" in out and "checks passed" in out


def test_suite_narrowed_to_one_system(capsys):
    code, out, _ = run_cli(
        capsys, "suite", "--only", "mf", "--dim", "2", "--weights", "2,2,3,4"
    )
    assert code == 0
    assert "6 factorizations verified" in out
    assert "1/1 checks passed" in out


def test_suite_narrowing_needs_both_flags(capsys):
    code, _, err = run_cli(capsys, "suite", "--only", "mf", "--dim", "2")
    assert code == 2
    assert "error" in err


def test_cm_cube_dot_export(capsys):
    code, out, _ = run_cli(
        capsys, "quiver", "--dim", "1", "--weights", "3,3,3",
        "--interval", "cm", "--format", "dot",
    )
    assert code == 0
    assert out.count("[label=") - out.count("->") == 8  # 8 vertices
    assert out.count("->") == 12  # edges of the commuting cube


def test_dot_export_plain_quiver():
    ws = WeightSystem(1, ())
    q = i_canonical_quiver(ws, canonical_interval(ws))
    dot = quiver_to_dot(q)
    assert dot.startswith("digraph") and dot.count("->") == 2
