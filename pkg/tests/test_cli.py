import csv
import io

import pytest

from hyperexp.cli import main
from hyperexp.linrep import format_rep, stern_rep


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_compute(capsys):
    assert run(capsys, "compute", "--base", "2", "19")[:2] == (0, "7\n")
    assert run(capsys, "compute", "--base", "3", "1")[:2] == (0, "1\n")
    assert run(capsys, "compute", "--base", "2", "0")[:2] == (0, "0\n")
    for method in ("recurrence", "matrix", "oracle"):
        assert run(capsys, "compute", "--base", "5", "--method", method, "631")[1] == "7\n"  # b^4+b+1 -> s_2(19)


def test_compute_default_cross_check(capsys, monkeypatch):
    from hyperexp import cli
    monkeypatch.setattr(cli.linrep, "evaluate_at", lambda rep, n: -1)
    code, out, err = run(capsys, "compute", "--base", "2", "19")
    assert code == 1 and out == "" and "mismatch" in err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--base", "2", "4")
    assert code == 0
    assert out == "0,0,1\n0,2\n2,1\ncount 3\n"
    assert run(capsys, "enumerate", "--base", "2", "0")[1] == "\ncount 1\n"
    assert run(capsys, "enumerate", "--base", "3", "3")[1] == "0,1\n3\ncount 2\n"


def test_enumerate_truncation(capsys):
    code, out, err = run(capsys, "enumerate", "--base", "2", "18", "--cap", "2")
    assert code == 0
    assert out.splitlines() == ["0,1,0,0,1", "0,1,0,2", "count 7"]
    assert "truncated" in err


def test_records(capsys, tmp_path):
    path = tmp_path / "rec.csv"
    code, _, _ = run(capsys, "records", "--base", "2", "--kmax", "20", "--out", str(path))
    assert code == 0
    data = path.read_bytes()
    assert b"\r" not in data
    rows = list(csv.DictReader(io.StringIO(data.decode("ascii"))))
    assert list(rows[0]) == ["k", "a_k", "F_k", "ratio_to_H", "h_minus_H"]
    by_k = {int(r["k"]): r for r in rows}
    assert (by_k[5]["a_k"], by_k[5]["F_k"]) == ("11", "5")
    assert (by_k[2]["a_k"], by_k[2]["F_k"]) == ("1", "1")
    assert abs(float(by_k[20]["ratio_to_H"]) - 1) < 1e-5


def test_records_other_base_stdout(capsys):
    code, out, _ = run(capsys, "records", "--base", "7", "--kmax", "3")
    assert code == 0
    assert out.splitlines()[1].startswith("2,1,1,")
    assert out.splitlines()[2].startswith("3,8,2,")


def test_records_failure_exit(capsys, monkeypatch):
    from hyperexp import envelope
    real = envelope.record_position
    monkeypatch.setattr(envelope, "record_position", lambda b, k: real(b, k) + (k == 6))
    code, _, err = run(capsys, "records", "--base", "2", "--kmax", "8")
    assert code == 1 and "k=6" in err


@pytest.mark.parametrize("argv", [
    ("verify", "--base", "2", "--suite", "envelope", "--max", "100000"),
    ("verify", "--base", "5", "--suite", "oracle", "--max", "20000"),
    ("verify", "--base", "4", "--suite", "embedding", "--max", "32768"),
    ("verify", "--base", "3", "--suite", "strengthening", "--max", "50000"),
    ("verify", "--base", "3", "--suite", "identities", "--max", "2000"),
    ("verify", "--base", "10", "--suite", "h-recurrence", "--max", "1000000",
     "--trials", "200", "--seed", "11"),
])
def test_verify_suites_pass(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 0, err
    assert "PASS" in err


def test_verify_csv_deterministic(capsys, tmp_path):
    outs = []
    for i in range(2):
        path = tmp_path / f"v{i}.csv"
        code, _, _ = run(capsys, "verify", "--base", "3", "--suite", "h-recurrence",
                         "--max", "5000", "--trials", "100", "--seed", "42", "--out", str(path))
        assert code == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    assert outs[0] == (b"suite,base,check,checked,violations,first_violation\n"
                       b"h-recurrence,3,knots,10,0,\n"
                       b"h-recurrence,3,random,100,0,\n")


@pytest.mark.parametrize("argv", [
    ("constant", "--base", "1"),
    ("constant", "--base", "2", "--digits", "0"),
    ("constant", "--base", "2", "--digits", "51"),
    ("compute", "--base", "2"),
    ("compute", "--base", "2", "-4"),
    ("compute", "--base", "2", "--method", "magic", "4"),
    ("verify", "--base", "2", "--suite", "nope", "--max", "10"),
    ("verify", "--base", "2", "--suite", "h-recurrence", "--max", "10"),
    ("records", "--base", "2", "--kmax", "1"),
    ("scan", "--base", "2", "--max", "0"),
    ("frobnicate",),
    (),
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_constant(capsys):
    assert run(capsys, "constant", "--base", "2", "--digits", "6")[1] == "0.958854\n"
    assert run(capsys, "constant", "--base", "2", "--digits", "15")[1] == "0.958854190824767\n"
    code, out, _ = run(capsys, "constant", "--base", "10", "--digits", "10")
    assert code == 0 and out.startswith("1.")


def test_scan_small(capsys):
    code, out, err = run(capsys, "scan", "--base", "2", "--max", "10")
    lines = out.splitlines()
    assert lines[0] == "m,s_b,h_num,h_den,ratio_to_H"
    exact = [",".join(line.split(",")[:4]) for line in lines[1:11]]
    assert exact == ["1,1,1,1", "2,1,7,4", "3,2,9,4", "4,1,21,8", "5,3,3,1",
                     "6,2,27,8", "7,3,15,4", "8,1,33,8", "9,4,9,2", "10,3,39,8"]
    assert lines[-1].startswith("summary,1,,,1.0429114348865")
    # s/H > 1 at m = 1 and m = 5: the ratio ceiling is reported
    assert code == 1 and "m=1" in err and "m=5" in err


def test_scan_deterministic(capsys, tmp_path):
    blobs = []
    for i in range(2):
        path = tmp_path / f"s{i}.csv"
        run(capsys, "scan", "--base", "3", "--max", "2000", "--out", str(path))
        blobs.append(path.read_bytes())
    assert blobs[0] == blobs[1]


def test_eval_rep(capsys, tmp_path):
    path = tmp_path / "stern2.rep"
    path.write_text(format_rep(stern_rep(2)))
    assert run(capsys, "eval-rep", str(path), "19")[:2] == (0, "7\n")
    assert run(capsys, "eval-rep", str(path), "19", "--max", "3000")[0] == 0


def test_eval_rep_corrupted_file_fails_verification(capsys, tmp_path):
    path = tmp_path / "bad.rep"
    path.write_text(format_rep(stern_rep(3)).replace("A2 0 1 0 1", "A2 0 1 1 1"))
    code, _, err = run(capsys, "eval-rep", str(path), "5", "--max", "100")
    assert code == 1 and "disagrees" in err


def test_eval_rep_malformed(capsys, tmp_path):
    path = tmp_path / "junk.rep"
    path.write_text("base 2\ndim 2\nA0 1 0\n")
    assert run(capsys, "eval-rep", str(path), "5")[0] == 2
    assert run(capsys, "eval-rep", str(tmp_path / "missing.rep"), "5")[0] == 2
