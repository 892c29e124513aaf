import json

import pytest

from octachar.cli import main
from octachar.partitions import parse_partition
from octachar.hyperoctahedral import parse_bipartition


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestChar:
    def test_value(self, capsys):
        code, out, _ = run(capsys, "char", "[2,1^6]", "[2^4]")
        assert code == 0
        assert out.strip() == "-1"

    def test_parse_error_exit_code(self, capsys):
        code, _, err = run(capsys, "char", "[2,3]", "[2^4]")
        assert code == 2
        assert "position" in err

    def test_size_mismatch_exit_code(self, capsys):
        code, _, err = run(capsys, "char", "[2,1]", "[2,2]")
        assert code == 2
        assert "size mismatch" in err


class TestChartable:
    def test_s3(self, capsys):
        code, out, _ = run(capsys, "chartable", "3")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].split("\t") == ["partition", "[1^3]", "[2,1]", "[3]"]
        body = {row.split("\t")[0]: row.split("\t")[1:] for row in lines[1:]}
        assert body["[2,1]"] == ["2", "0", "-1"]
        assert body["[3]"] == ["1", "1", "1"]

    def test_reparseable(self, capsys):
        code, out, _ = run(capsys, "chartable", "4")
        lines = out.strip().splitlines()
        for row in lines[1:]:
            parse_partition(row.split("\t")[0])


class TestBasechangeNorm:
    def test_basechange(self, capsys):
        code, out, _ = run(capsys, "basechange", "([]|[1^4])", "--target", "even")
        assert code == 0
        assert out.strip() == "[2,1^6]"
        code, out, _ = run(capsys, "basechange", "([]|[1^4])", "--target", "odd")
        assert out.strip() == "[3,2,1^4]"

    def test_norm(self, capsys):
        code, out, _ = run(capsys, "norm", "[8]")
        assert code == 0
        assert out.strip() == "([4]|[])"
        assert parse_bipartition(out.strip())

    def test_norm_undefined(self, capsys):
        code, _, err = run(capsys, "norm", "[3,2,1]")
        assert code == 2
        assert "norm undefined" in err


class TestSchur:
    def test_integer_point(self, capsys):
        code, out, _ = run(capsys, "schur", "[2,1]", "--at", "1,2,3")
        assert code == 0
        assert out.strip() == "60"

    def test_rational_point(self, capsys):
        code, out, _ = run(capsys, "schur", "[1,1]", "--at", "1/2,3")
        assert code == 0
        assert out.strip() == "3/2"

    def test_bad_point(self, capsys):
        code, _, err = run(capsys, "schur", "[1]", "--at", "1,zebra")
        assert code == 2


class TestVerifyCommands:
    def test_frobenius(self, capsys):
        code, out, _ = run(capsys, "verify", "frobenius", "--max-size", "3", "--seed", "7")
        assert code == 0
        assert "seed=7" in out
        assert "PASS" in out

    def test_even_fact(self, capsys):
        code, out, _ = run(capsys, "verify", "even-fact", "--max-size", "2", "--seed", "1")
        assert code == 0
        assert "PASS" in out

    def test_odd_fact(self, capsys):
        code, out, _ = run(capsys, "verify", "odd-fact", "--max-size", "1", "--seed", "1")
        assert code == 0
        assert "branches" in out and "PASS" in out


class TestTable:
    def test_plain_contains_exclusions(self, capsys):
        code, out, _ = run(capsys, "table", "--n", "4")
        assert code == 0
        assert "[2^2,1^4]\t4\t-4\t[3,1^6]" in out
        assert "# excluded S_8: [3,2,1^3],[5,2,1]" in out
        assert "# excluded S_9:" in out

    def test_json_rows_reparse(self, capsys):
        code, out, _ = run(capsys, "table", "--n", "2", "--json")
        assert code == 0
        lines = out.strip().splitlines()
        rows = [json.loads(line) for line in lines]
        assert len(rows) == 6  # 5 bipartitions of 2, plus the exclusion object
        for obj in rows[:-1]:
            assert parse_partition(obj["lambda_even"]).size == 4
            assert parse_partition(obj["lambda_odd"]).size == 5
            assert isinstance(obj["theta_even"], int)
        assert set(rows[-1]) == {"excluded_even", "excluded_odd"}

    def test_tsv_round_trips(self, capsys):
        code, out, _ = run(capsys, "table", "--n", "3", "--tsv")
        lines = [l for l in out.strip().splitlines() if not l.startswith("#")]
        header = lines[0].split("\t")
        assert header[0] == "lambda_even"
        for row in lines[1:]:
            fields = row.split("\t")
            assert parse_partition(fields[0]).size == 6
            assert int(fields[1]) == int(fields[4]) * int(fields[5])


class TestCensusSweepDims:
    def test_census_m8(self, capsys):
        code, out, _ = run(capsys, "census", "--m", "8")
        assert code == 0
        assert out.strip() == "22 total, 10 positive, 10 negative, 2 zero"

    def test_census_jobs_flag(self, capsys):
        code, out, _ = run(capsys, "census", "--m", "8", "--jobs", "2")
        assert code == 0
        assert out.strip() == "22 total, 10 positive, 10 negative, 2 zero"

    def test_census_env_fallback(self, capsys, monkeypatch):
        monkeypatch.setenv("OCTACHAR_JOBS", "2")
        code, out, _ = run(capsys, "census", "--m", "6")
        assert code == 0
        assert out.strip().startswith("11 total")

    def test_sweep(self, capsys):
        code, out, _ = run(capsys, "sweep", "--max", "2", "--seed", "5")
        assert code == 0
        assert "seed=5" in out
        assert "PASS" in out

    def test_dims(self, capsys):
        code, out, _ = run(capsys, "dims", "--n", "3", "--target", "odd")
        assert code == 0
        assert out.strip() == "ok: 10 dimensions match as multisets"


def test_unknown_command_fails():
    with pytest.raises(SystemExit):
        main(["frobnicate"])
