import json

import numpy as np

from slrc.cli import main
from slrc.matrixio import (load_matrix, load_matrix_csv, matrix_to_dict,
                           save_matrix, save_matrix_csv)
from slrc.reference import golden, reference_code


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_matrix_file_round_trip(tmp_path):
    code = reference_code()
    path = tmp_path / "h.json"
    save_matrix(code, path)
    fld, H, roles, params = load_matrix(path)
    assert fld == code.field
    assert (H == code.H).all()
    assert roles == list(code.coordinate_roles)
    assert params["k"] == 6 and params["mu"] == 8
    # byte-exact re-export
    save_matrix(code, tmp_path / "h2.json")
    assert (tmp_path / "h.json").read_bytes() == (tmp_path / "h2.json").read_bytes()


def test_csv_round_trip(tmp_path):
    code = reference_code()
    path = tmp_path / "h.csv"
    save_matrix_csv(code, path)
    assert (load_matrix_csv(path) == code.H).all()


def test_construct_reference(tmp_path, capsys):
    out = tmp_path / "code.json"
    rc, stdout, _ = run(capsys, "construct", "--r", "3", "--delta", "3",
                        "--ti", "2", "--q", "4",
                        "--design", "complete-graph",
                        "--mds", "vandermonde", "--out", str(out))
    assert rc == 0
    doc = json.loads(stdout)
    assert doc["n"] == 16 and doc["k"] == 6 and doc["rate"] == "3/8"
    _, H, _, _ = load_matrix(out)
    assert (H == golden("h")).all()


def test_construct_delta2(tmp_path, capsys):
    out = tmp_path / "code.json"
    rc, stdout, _ = run(capsys, "construct", "--r", "3", "--delta", "2",
                        "--ti", "2", "--q", "4", "--out", str(out))
    assert rc == 0
    _, H, _, _ = load_matrix(out)
    assert H.shape == (5, 11)


def test_construct_bad_field(capsys):
    rc, _, err = run(capsys, "construct", "--r", "3", "--delta", "3",
                     "--ti", "2", "--q", "2")
    assert rc == 2
    assert "r + delta - 2" in err


def test_verify_t4(tmp_path, capsys):
    out = tmp_path / "code.json"
    run(capsys, "construct", "--r", "3", "--delta", "3", "--ti", "2",
        "--q", "4", "--out", str(out))
    rc, stdout, _ = run(capsys, "verify", "--in", str(out), "--t", "4")
    assert rc == 0
    report = json.loads(stdout)
    assert report["pass"] is True


def test_verify_max_t(tmp_path, capsys):
    out = tmp_path / "code.json"
    run(capsys, "construct", "--r", "3", "--delta", "3", "--ti", "2",
        "--q", "4", "--out", str(out))
    report_path = tmp_path / "report.json"
    rc, stdout, _ = run(capsys, "verify", "--in", str(out),
                        "--max-t", "9", "--report", str(report_path))
    assert rc == 0
    assert "t* = 4" in stdout
    assert report_path.exists()


def test_verify_sabotaged_fails(tmp_path, capsys):
    code = reference_code()
    doc = matrix_to_dict(code)
    col = 6
    for row in range(code.H.shape[0]):
        doc["entries"][row * 16 + col] = 0
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    rc, stdout, _ = run(capsys, "verify", "--in", str(bad), "--t", "1")
    assert rc == 1
    report = json.loads(stdout)
    seq = next(c for c in report["checks"] if c["name"].startswith("check_seq"))
    assert seq["witness"]["failing_pattern"] == [col + 1]


def test_simulate_deterministic(tmp_path, capsys):
    out = tmp_path / "code.json"
    run(capsys, "construct", "--r", "3", "--delta", "3", "--ti", "2",
        "--q", "4", "--out", str(out))
    rc1, out1, _ = run(capsys, "simulate", "--in", str(out), "--t", "4",
                       "--trials", "50", "--seed", "7")
    rc2, out2, _ = run(capsys, "simulate", "--in", str(out), "--t", "4",
                       "--trials", "50", "--seed", "7")
    assert rc1 == rc2 == 0
    assert out1 == out2
    assert json.loads(out1)["success_rate"] == 1.0


def test_simulate_trace(tmp_path, capsys):
    out = tmp_path / "code.json"
    run(capsys, "construct", "--r", "3", "--delta", "3", "--ti", "2",
        "--q", "4", "--out", str(out))
    rc, stdout, _ = run(capsys, "simulate", "--in", str(out), "--t", "2",
                        "--trials", "5", "--seed", "1", "--trace")
    assert rc == 0
    assert "repair c" in stdout


def test_bounds_table(capsys):
    rc, stdout, _ = run(capsys, "bounds", "--r", "3", "--ti", "2",
                        "--delta", "3")
    assert rc == 0
    assert "1/5" in stdout


def test_export_csv(tmp_path, capsys):
    out = tmp_path / "code.json"
    run(capsys, "construct", "--r", "3", "--delta", "3", "--ti", "2",
        "--q", "4", "--out", str(out))
    csv_path = tmp_path / "h.csv"
    rc, _, _ = run(capsys, "export", "--in", str(out), "--csv", str(csv_path))
    assert rc == 0
    assert (load_matrix_csv(csv_path) == golden("h")).all()


def test_demo_paper(capsys):
    rc, stdout, _ = run(capsys, "demo-paper")
    assert rc == 0
    assert "matches golden" in stdout
    assert "rank 10, dimension 6" in stdout
    assert "t* = 4" in stdout


def test_construct_design_from_file(tmp_path, capsys):
    # drive the construction from a CSV incidence matrix
    csv_path = tmp_path / "design.csv"
    np.savetxt(csv_path, golden("design"), fmt="%d", delimiter=",")
    out = tmp_path / "code.json"
    rc, stdout, _ = run(capsys, "construct", "--r", "3", "--delta", "3",
                        "--ti", "2", "--q", "4",
                        "--design", f"file:{csv_path}", "--out", str(out))
    assert rc == 0
    _, H, _, _ = load_matrix(out)
    assert (H == golden("h")).all()
