"""Command-line interface: parsing, rendering, subcommands, exit codes."""

import json
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cl3 import Multivector, MVParseError, Signature
from cl3.cli import main, parse_mv, render_mv
from reference_values import EXACT, REF_COEFFS, TABLE_TOL

CL30 = Signature.CL30
REF_LITERAL = "4,1,3,-5,10,9,-9,-4 / 17"


def test_parse_comma_form_with_scale():
    mv = parse_mv(REF_LITERAL, CL30)
    assert mv == Multivector(CL30, np.array(REF_COEFFS) / 17.0)


def test_parse_zero_mv():
    assert parse_mv("0,0,0,0,0,0,0,0", CL30) == Multivector.zero(CL30)


def test_parse_term_form_matches_comma_form():
    text = "4 + 1*e1 + 3*e2 - 5*e3 + 10*e12 + 9*e13 - 9*e23 - 4*e123"
    assert parse_mv(text, CL30) == Multivector(CL30, REF_COEFFS)


def test_parse_duplicate_blades_sum():
    mv = parse_mv("1*e13 + 2*e13", CL30)
    assert mv.c[5] == 3.0
    assert np.count_nonzero(mv.c) == 1


def test_parse_bare_blades_and_signs():
    mv = parse_mv("-e3 + e12 - 2.5", CL30)
    assert mv.c[0] == -2.5
    assert mv.c[3] == -1.0
    assert mv.c[4] == 1.0


def test_parse_rejects_descending_blade():
    with pytest.raises(MVParseError) as exc:
        parse_mv("1*e31", CL30)
    assert "e13" in str(exc.value)
    assert exc.value.column == 3


def test_parse_error_columns():
    with pytest.raises(MVParseError) as exc:
        parse_mv("1 + 2*e1 + $", CL30)
    assert exc.value.column == 12
    with pytest.raises(MVParseError):
        parse_mv("1,2,3", CL30)
    with pytest.raises(MVParseError):
        parse_mv("1,2,3,x,5,6,7,8", CL30)
    with pytest.raises(MVParseError):
        parse_mv("1 + 2*e1 +", CL30)
    with pytest.raises(MVParseError):
        parse_mv("1 2", CL30)
    with pytest.raises(MVParseError):
        parse_mv("3*e7", CL30)


def test_render_examples():
    mv = Multivector(CL30, [0.5, 0, 0, -1.25, 0, 0, 0, 2])
    assert render_mv(mv) == "0.5 - 1.25*e3 + 2*e123"
    assert render_mv(Multivector.zero(CL30)) == "0"
    assert render_mv(Multivector(CL30, [0, -3, 0, 0, 0, 0, 0, 0])) == "-3*e1"


finite = st.floats(allow_nan=False, allow_infinity=False, width=64)


@given(coeffs=st.lists(finite, min_size=8, max_size=8))
@settings(max_examples=150, deadline=None)
def test_parse_render_roundtrip(coeffs):
    mv = Multivector(CL30, coeffs)
    assert parse_mv(render_mv(mv, digits=17), CL30) == mv


def _run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_matches_reference_table(capsys):
    code, out, err = _run(capsys, [
        "eval", "--algebra", "cl30", "--fn", "sinh", "--mv", REF_LITERAL,
    ])
    assert code == 0
    got = parse_mv(out.strip(), CL30)
    assert np.abs(got.c - np.array(EXACT["sinh"])).max() < TABLE_TOL


def test_eval_json_schema(capsys):
    code, out, _ = _run(capsys, [
        "eval", "--fn", "cosh", "--mv", REF_LITERAL, "--format", "json",
    ])
    assert code == 0
    payload = json.loads(out)
    assert payload["algebra"] == "cl30"
    assert payload["basis"] == ["1", "e1", "e2", "e3", "e12", "e13", "e23", "e123"]
    assert len(payload["coeffs"]) == 8
    assert abs(payload["coeffs"][0] - EXACT["cosh"][0]) < TABLE_TOL


def test_eval_digits_control(capsys):
    _, out8, _ = _run(capsys, ["eval", "--fn", "exp", "--mv", "0.5,0,0,0,0,0,0,0"])
    _, out3, _ = _run(capsys, ["eval", "--fn", "exp", "--mv", "0.5,0,0,0,0,0,0,0", "--digits", "3"])
    assert out8.strip() == "1.6487213"
    assert out3.strip() == "1.65"


def test_eval_scalar_functions(capsys):
    code, out, _ = _run(capsys, ["eval", "--fn", "det", "--mv", "4,1,3,-5,10,9,-9,-4"])
    assert code == 0 and out.strip() == "71129"
    code, out, _ = _run(capsys, ["eval", "--fn", "det-norm", "--mv", "4,1,3,-5,10,9,-9,-4"])
    assert code == 0 and abs(float(out) - 71129.0 ** 0.25) < 1e-6


def test_eval_inverse(capsys):
    code, out, _ = _run(capsys, ["eval", "--fn", "inv", "--mv", "2,0,0,0,0,0,0,0"])
    assert code == 0 and out.strip() == "0.5"


def test_eval_sqrt_center_and_factors(capsys):
    code, out, _ = _run(capsys, [
        "eval", "--fn", "sqrt-center", "--mv", "0,2,0,0,0,0,0,0", "--format", "json",
    ])
    assert code == 0
    payload = json.loads(out)
    assert payload["center"] == [4.0, 0.0]
    assert sorted(r[0] for r in payload["roots"]) == [-2.0, 2.0]

    code, out, _ = _run(capsys, [
        "eval", "--fn", "exp-factors", "--mv", "0,1,0,0,1,0,0,0", "--format", "json",
    ])
    assert code == 0
    payload = json.loads(out)
    assert payload["branch"] == "both-degenerate"


def test_trig_needs_series_flag_on_split_algebras(capsys):
    code, _, err = _run(capsys, [
        "eval", "--algebra", "cl21", "--fn", "sin", "--mv", "1,0,0,0,0,0,0,0",
    ])
    assert code == 1
    assert "series" in err
    code, out, _ = _run(capsys, [
        "eval", "--algebra", "cl21", "--fn", "sin", "--mv", "1,0,0,0,0,0,0,0",
        "--series", "--terms", "21",
    ])
    assert code == 0
    assert abs(float(out) - np.sin(1.0)) < 1e-7


def test_series_flag_rejected_for_non_series_fn(capsys):
    code, _, err = _run(capsys, [
        "eval", "--fn", "det", "--mv", "1,0,0,0,0,0,0,0", "--series",
    ])
    assert code == 1 and "series" in err


def test_compare_reports_scalar_gap(capsys):
    code, out, err = _run(capsys, [
        "compare", "--algebra", "cl30", "--fn", "tanh", "--terms", "6", "--mv", REF_LITERAL,
    ])
    assert code == 0
    closed_line, series_line, delta_line = out.strip().split("\n")
    closed = parse_mv(closed_line.split(": ", 1)[1], CL30)
    series = parse_mv(series_line.split(": ", 1)[1], CL30)
    scalar_gap = series.c[0] - closed.c[0]
    assert abs(scalar_gap - (0.7629316 - 0.6231177)) < 1e-5
    assert float(delta_line.split(": ")[1]) > 0.1
    assert "may not have converged" in err


def test_compare_json(capsys):
    code, out, _ = _run(capsys, [
        "compare", "--fn", "sinh", "--terms", "11", "--mv", REF_LITERAL, "--format", "json",
    ])
    assert code == 0
    payload = json.loads(out)
    assert payload["terms"] == 11
    assert payload["max_delta"] < 1e-6


def test_spin_csv_written(tmp_path, capsys):
    out_path = tmp_path / "trace.csv"
    code, _, _ = _run(capsys, [
        "spin", "--omega", "1", "--omega1", "0.05", "--b0-start", "-2",
        "--b0-end", "2", "--T", "500", "--sigma", "-1", "--samples", "801",
        "--out", str(out_path),
    ])
    assert code == 0
    raw = out_path.read_bytes()
    assert b"\r" not in raw
    lines = raw.decode().strip().split("\n")
    assert lines[0] == "t,b0,p_down"
    assert len(lines) == 802
    rows = np.array([[float(v) for v in line.split(",")] for line in lines[1:]])
    peak_b0 = rows[rows[:, 2].argmax(), 1]
    assert abs(peak_b0 - 1.0) <= 0.1


def test_spin_stdout_and_stepped(capsys):
    code, out, _ = _run(capsys, [
        "spin", "--omega", "1", "--omega1", "0.2", "--b0-start", "0",
        "--b0-end", "1", "--T", "20", "--sigma", "1", "--samples", "5",
        "--method", "stepped",
    ])
    assert code == 0
    assert out.startswith("t,b0,p_down\n")
    assert len(out.strip().split("\n")) == 6


def test_error_exit_codes(capsys):
    code, _, err = _run(capsys, ["eval", "--fn", "exp", "--mv", "1*e31"])
    assert code == 1 and "e13" in err
    code, _, err = _run(capsys, [
        "eval", "--fn", "tan", "--algebra", "cl30",
        "--mv", f"{np.pi / 4},{np.pi / 4},0,0,0,0,0,0",
    ])
    assert code == 1 and "determinant" in err


def test_ga_eps_env_changes_branch(capsys, monkeypatch):
    literal = "0,1,0,0,1,0,0.0001,0"
    _, out_default, _ = _run(capsys, ["eval", "--fn", "exp-factors", "--mv", literal, "--format", "json"])
    monkeypatch.setenv("GA_EPS", "1e-2")
    _, out_loose, _ = _run(capsys, ["eval", "--fn", "exp-factors", "--mv", literal, "--format", "json"])
    assert json.loads(out_default)["branch"] == "generic"
    assert json.loads(out_loose)["branch"] == "both-degenerate"


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "cl3.cli", "eval", "--fn", "exp", "--mv", "0,0,0,0,0,0,0,0"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1"
