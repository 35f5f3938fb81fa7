"""End-to-end CLI behavior: payload shapes, exit codes, determinism.

Most tests drive qspivey.cli.main in process and capture stdout; a couple
spawn real subprocesses where that is the thing under test.
"""

import csv
import io
import json
import subprocess
import sys

from qspivey import QPoly, cli, opexpr, triangles
from qspivey.report import VerificationReport


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_triangle_q_stirling_golden(capsys):
    code, out, err = run_cli(
        capsys, "triangle", "--kind", "q-stirling2", "--n", "3"
    )
    assert code == 0 and err == ""
    payload = json.loads(out)
    assert payload == {
        "kind": "q-stirling2",
        "m": None,
        "r": None,
        "n_max": 3,
        "rows": [
            [["1"]],
            [[], ["1"]],
            [[], ["1"], ["0", "1"]],
            [[], ["1"], ["0", "2", "1"], ["0", "0", "0", "1"]],
        ],
    }


def test_triangle_stirling_row_zero(capsys):
    code, out, _ = run_cli(capsys, "triangle", "--kind", "stirling2", "--n", "0")
    assert code == 0
    assert json.loads(out)["rows"] == [["1"]]


def test_triangle_whitney_golden(capsys):
    code, out, _ = run_cli(
        capsys,
        "triangle", "--kind", "qr-whitney", "--n", "2", "--m", "2", "--r", "1",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["m"] == 2 and payload["r"] == 1
    assert payload["rows"] == [
        [["1"]],
        [["1"], ["1"]],
        [["1"], ["4"], ["0", "1"]],
    ]


def test_triangle_csv_round_trip(capsys):
    code, out_json, _ = run_cli(
        capsys,
        "triangle", "--kind", "qr-whitney", "--n", "3", "--m", "2", "--r", "1",
    )
    rows_json = json.loads(out_json)["rows"]
    code2, out_csv, _ = run_cli(
        capsys,
        "triangle", "--kind", "qr-whitney", "--n", "3", "--m", "2", "--r", "1",
        "--format", "csv",
    )
    assert code == 0 and code2 == 0
    records = list(csv.reader(io.StringIO(out_csv)))
    assert records[0] == ["kind", "m", "r", "n_max"]
    assert records[1] == ["qr-whitney", "2", "1", "3"]
    decoded = [[json.loads(cell) for cell in rec] for rec in records[2:]]
    assert decoded == rows_json


def test_triangle_usage_errors(capsys):
    # missing --m for a Whitney kind
    code, out, err = run_cli(capsys, "triangle", "--kind", "qr-whitney", "--n", "2")
    assert code == 2 and out == "" and "error" in err
    # --m offered to a kind that has no weight
    code, out, err = run_cli(
        capsys, "triangle", "--kind", "stirling2", "--n", "2", "--m", "2"
    )
    assert code == 2 and out == ""
    # missing --n
    code, out, err = run_cli(capsys, "triangle", "--kind", "stirling2")
    assert code == 2 and out == ""


def test_poly_payloads(capsys):
    code, out, _ = run_cli(capsys, "poly", "--kind", "q-bell", "--n", "3")
    assert code == 0
    assert json.loads(out) == {
        "kind": "q-bell",
        "n": 3,
        "coeffs": [[], ["1"], ["0", "2", "1"], ["0", "0", "0", "1"]],
    }
    code, out, _ = run_cli(
        capsys, "poly", "--kind", "qr-dowling", "--n", "2", "--m", "2", "--r", "1"
    )
    assert json.loads(out)["coeffs"] == [["1"], ["4"], ["0", "1"]]


def test_numbers_payloads(capsys):
    code, out, _ = run_cli(capsys, "numbers", "--kind", "bell", "--n", "7")
    assert code == 0
    assert json.loads(out)["values"] == ["1", "1", "2", "5", "15", "52", "203", "877"]
    code, out, _ = run_cli(
        capsys, "numbers", "--kind", "r-dowling", "--n", "3", "--m", "2", "--r", "1"
    )
    assert json.loads(out)["values"] == ["1", "2", "6", "24"]
    code, out, _ = run_cli(capsys, "numbers", "--kind", "q-bell", "--n", "2")
    assert json.loads(out)["values"] == [["1"], ["1"], ["1", "1"]]


def test_normal_order_golden(capsys):
    code, out, _ = run_cli(capsys, "normal-order", "--expr", "a*ad")
    assert code == 0
    assert json.loads(out) == [
        {"coeff": ["1"], "k": 0, "l": 0},
        {"coeff": ["0", "1"], "k": 1, "l": 1},
    ]
    code, out, _ = run_cli(
        capsys, "normal-order", "--expr", "(m*N + r)^2", "--m", "2", "--r", "1"
    )
    assert json.loads(out) == [
        {"coeff": ["1"], "k": 0, "l": 0},
        {"coeff": ["8"], "k": 1, "l": 1},
        {"coeff": ["0", "4"], "k": 2, "l": 2},
    ]


def test_normal_order_parse_error_exit_two(capsys):
    code, out, err = run_cli(capsys, "normal-order", "--expr", "a*ad - q*ad*a")
    assert code == 2
    assert out == ""
    assert "position" in err


def test_verify_pass_exit_zero_and_line_shape(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--identity", "spivey", "--n", "0..3", "--mshift", "0..3"
    )
    assert code == 0
    lines = out.strip().split("\n")
    summary = json.loads(lines[-1])
    assert summary == {"total": 16, "passed": 16, "failed": 0}
    for line in lines[:-1]:
        d = json.loads(line)
        rep = VerificationReport.from_json(d)
        assert rep.passed
        assert rep.to_json_line() == line


def test_verify_literal_failure_exit_one(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify", "--identity", "result3", "--variant", "literal",
        "--n", "1", "--l", "1", "--m", "2", "--r", "1",
    )
    assert code == 1
    lines = out.strip().split("\n")
    rep = json.loads(lines[0])
    assert rep["passed"] is False
    assert rep["lhs"] == "6" and rep["rhs"] == "10"
    assert json.loads(lines[-1])["failed"] == 1


def test_verify_axis_ordering_is_documented_product_order(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--identity", "katriel", "--n", "0..1", "--l", "0..1"
    )
    assert code == 0
    params = [json.loads(l)["params"] for l in out.strip().split("\n")[:-1]]
    assert params == [
        {"l": 0, "n": 0},
        {"l": 1, "n": 0},
        {"l": 0, "n": 1},
        {"l": 1, "n": 1},
    ]


def test_verify_usage_errors(capsys):
    cases = [
        ("verify", "--identity", "spivey", "--x", "1"),
        ("verify", "--identity", "katriel", "--variant", "literal"),
        ("verify", "--identity", "spivey", "--n", "5..2"),
        ("verify", "--identity", "spivey", "--n", "two"),
        ("verify", "--identity", "result2", "--m", "0..2"),
        ("verify", "--identity", "lem1", "--k", "0..3"),
        ("verify", "--identity", "lem2", "--k", "0..5", "--cap", "4"),
        ("verify", "--identity", "spivey", "--jobs", "0"),
        ("verify", "--identity", "spivey", "--kind", "q-stirling"),
    ]
    for argv in cases:
        code, out, err = run_cli(capsys, *argv)
        assert code == 2, argv
        assert out == "", argv


def test_unknown_identity_and_missing_subcommand(capsys):
    code, out, err = run_cli(capsys, "verify", "--identity", "fermat")
    assert code == 2 and out == ""
    code, out, err = run_cli(capsys)
    assert code == 2 and out == ""


def test_verify_jobs_byte_identical(capsys):
    argv = [
        "verify", "--identity", "result2",
        "--n", "0..2", "--l", "0..2", "--m", "1..2", "--r", "0..1", "--x", "0..1",
    ]
    code1, out1, _ = run_cli(capsys, *argv)
    code2, out2, _ = run_cli(capsys, *argv, "--jobs", "3")
    assert code1 == code2 == 0
    assert out1 == out2


def test_out_flag_writes_the_same_bytes(tmp_path, capsys):
    target = tmp_path / "rows.json"
    code, out, _ = run_cli(capsys, "poly", "--kind", "q-bell", "--n", "4")
    code2, out2, _ = run_cli(
        capsys, "poly", "--kind", "q-bell", "--n", "4", "--out", str(target)
    )
    assert code == code2 == 0
    assert out2 == ""
    assert target.read_text() == out


def test_triangle_oracle_verify_kinds(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--identity", "triangle-oracle", "--n", "0..4"
    )
    assert code == 0
    first = json.loads(out.strip().split("\n")[0])
    assert first["params"]["kind"] == "q-stirling"
    code, out, _ = run_cli(
        capsys,
        "verify", "--identity", "triangle-oracle", "--kind", "qr-whitney",
        "--n", "0..3", "--m", "1..2", "--r", "0..1",
    )
    assert code == 0
    # --kind is rejected anywhere else
    code, _, _ = run_cli(
        capsys, "verify", "--identity", "spivey", "--kind", "qr-whitney"
    )
    assert code == 2


def test_sweep_catches_a_corrupted_triangle(capsys, monkeypatch):
    """Corrupt one q-Stirling cell and the sweep must go red."""
    real = triangles.q_stirling2

    def corrupted(n_max):
        rows = [list(row) for row in real(n_max)]
        if n_max >= 3:
            rows[3] = list(rows[3])
            rows[3][2] = rows[3][2] + QPoly.one()
        return tuple(tuple(row) for row in rows)

    monkeypatch.setattr(triangles, "q_stirling2", corrupted)
    code, out, _ = run_cli(capsys, "sweep", "--jobs", "1")
    assert code == 1
    summary = json.loads(out.strip().split("\n")[-1])
    assert summary["failed"] > 0


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "qspivey", "numbers", "--kind", "bell", "--n", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["values"] == ["1", "1", "2", "5"]


def test_help_exits_zero():
    proc = subprocess.run(
        [sys.executable, "-m", "qspivey", "--help"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "triangle" in proc.stdout and "sweep" in proc.stdout
