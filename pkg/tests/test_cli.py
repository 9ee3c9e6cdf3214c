import csv
import io
import json

import pytest

from mobius_partitions.cli import main
from mobius_partitions.identities import build_a, build_b
from mobius_partitions.arith import build_sieve


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_b_csv(capsys):
    code, out, _ = run(capsys, "table", "b", "--rmax", "2", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["r", "0", "1"]
    assert rows[1] == ["1", "1", ""]
    assert rows[2] == ["2", "1", "-1"]


def test_table_csv_round_trips(capsys):
    for which, rmax in (("b", 6), ("a", 7)):
        code, out, _ = run(capsys, "table", which, "--rmax", str(rmax), "--format", "csv")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        parsed = [[int(c) for c in row[1:] if c != ""] for row in rows[1:]]
        builder = build_b if which == "b" else (lambda r: build_a(r, build_sieve(r)))
        assert parsed == builder(rmax)


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "b", "--rmax", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "b"
    assert doc["params"] == {"rmax": 3}
    assert doc["rows"][2][:4] == [1, -1, -1, 1]


def test_table_p_text(capsys):
    code, out, _ = run(capsys, "table", "p", "--nmax", "4")
    assert code == 0
    assert out.strip() == "1,1,2,3,5"


def test_table_p_csv(capsys):
    code, out, _ = run(capsys, "table", "p", "--nmax", "6", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "p"]
    assert [int(r[1]) for r in rows[1:]] == [1, 1, 2, 3, 5, 7, 11]


def test_table_sr_contains_known_entry(capsys):
    code, out, _ = run(capsys, "table", "sr", "--r", "3", "--nmax", "9", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    header = rows[0]
    k_col = header.index("3")
    n_row = next(r for r in rows[1:] if r[0] == "9")
    assert n_row[k_col] == "4"


def test_table_text_format(capsys):
    code, out, _ = run(capsys, "table", "b", "--rmax", "4")
    assert code == 0
    assert "-1" in out


def test_table_out_file(tmp_path, capsys):
    path = tmp_path / "b.csv"
    code, out, _ = run(capsys, "table", "b", "--rmax", "3", "--format", "csv", "--out", str(path))
    assert code == 0 and out == ""
    assert path.read_text().startswith("r,0,1,2,3")


def test_table_missing_params(capsys):
    code, _, err = run(capsys, "table", "b")
    assert code == 2 and "rmax" in err
    code, _, err = run(capsys, "table", "sr", "--nmax", "5")
    assert code == 2


def test_verify_pass_and_json(capsys):
    code, out, _ = run(capsys, "verify", "lambert", "--nmax", "200")
    assert code == 0
    assert out.startswith("PASS lambert")
    code, out, _ = run(capsys, "verify", "thm1", "--r", "1", "--nmax", "50", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] and doc["checked"] == 51 and doc["failures"] == 0


def test_verify_each_identity(capsys):
    cases = [
        ("thm1", ["--r", "2", "--nmax", "30"]),
        ("thm2", ["--rmax", "5", "--nmax", "30"]),
        ("cor2", ["--nmax", "20"]),
        ("cor3", ["--nmax", "20"]),
        ("cor4", ["--nmax", "20"]),
        ("weighted", ["--r", "2", "--nmax", "15"]),
        ("phi", ["--nmax", "30"]),
        ("prime-alpha", ["--alpha", "3", "--nmax", "25", "--which", "ii"]),
        ("b-symmetry", ["--rmax", "8"]),
        ("lemma1", ["--nmax", "20", "--rmax", "3"]),
        ("lambert", ["--nmax", "100"]),
        ("oracle-sr", ["--nmax", "20", "--rmax", "3"]),
    ]
    for ident, extra in cases:
        code, out, err = run(capsys, "verify", ident, *extra)
        assert code == 0, (ident, err, out)
        assert out.startswith("PASS"), ident


def test_verify_unknown_identity(capsys):
    code, _, err = run(capsys, "verify", "fermat")
    assert code == 2
    assert "unknown identity" in err


def test_verify_bad_alpha(capsys):
    code, _, err = run(capsys, "verify", "prime-alpha", "--alpha", "6", "--nmax", "5")
    assert code == 2
    assert "prime" in err


def test_examples_all_pass(capsys):
    code, out, _ = run(capsys, "examples")
    assert code == 0
    lines = [l for l in out.strip().splitlines() if l]
    assert len(lines) == 5
    assert all(l.startswith("PASS") for l in lines)


def test_examples_json(capsys):
    code, out, _ = run(capsys, "examples", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc) == 5
    assert all(b["passed"] for b in doc)
    names = {b["name"] for b in doc}
    assert names == {"thm1-r1", "thm1-r2", "cor2-n6", "cor3-n8", "cor4-n12"}


def test_examples_only(capsys):
    code, out, _ = run(capsys, "examples", "--only", "cor3-n8")
    assert code == 0
    assert out.strip().startswith("PASS cor3-n8")
    code, _, err = run(capsys, "examples", "--only", "nope")
    assert code == 2


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["bogus-command"])
    assert exc.value.code == 2
