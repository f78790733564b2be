"""Tests for smallcovers.cli"""
import io
import json
import sys


import pytest


from smallcovers import cli
from smallcovers import counts
from smallcovers.schema.records import CheckResult, CountRecord, VerificationReport


def run(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


@pytest.fixture()
def mock_report():
    return VerificationReport.from_checks(
        "bijection",
        "cube(2)",
        [CheckResult.compare("labeled DAGs", 3, 3), CheckResult.compare("members of M(n)", 3, 4)],
        1.5,
    )


class TestCounts:
    @staticmethod
    def test_dj_cube():
        code, stdout, stderr = run("count", "dj", "--cube", "3")
        assert code == cli.EXIT_OK
        assert stderr == ""
        (line,) = stdout.splitlines()
        record = json.loads(line)
        assert record["quantity"] == "dj_classes"
        assert record["polytope"] == "cube(3)"
        assert record["value"] == "25"
        assert record["method"] == "recurrence"

    @staticmethod
    def test_dj_simplices():
        code, stdout, _ = run("count", "dj", "--simplices", "1,2", "--verify")
        assert code == cli.EXIT_OK
        assert [(json.loads(line)["method"], json.loads(line)["value"]) for line in stdout.splitlines()] == [
            ("formula", "5"),
            ("bruteforce", "5"),
        ]

    @staticmethod
    def test_big_values_are_exact():
        code, stdout, _ = run("count", "dj", "--cube", "30")
        assert code == cli.EXIT_OK
        assert json.loads(stdout)["value"] == str(counts.r_labeled(30))

    @staticmethod
    def test_csv():
        code, stdout, _ = run("--format", "csv", "count", "gl", "3")
        assert code == cli.EXIT_OK
        header, row = stdout.splitlines()
        assert header == "quantity,polytope,value,method,runtime_ms"
        assert row.startswith("gl_order,cube(3),168,formula,")

    @staticmethod
    def test_flags_after_the_command():
        code, stdout, _ = run("count", "gl", "4", "--format", "table")
        assert code == cli.EXIT_OK
        header, row = stdout.splitlines()
        assert header.split() == ["quantity", "polytope", "value", "method", "runtime_ms"]
        assert row.split()[:4] == ["gl_order", "cube(4)", "20160", "formula"]

    @staticmethod
    def test_verify_adds_the_table():
        code, stdout, _ = run("count", "equivariant", "3", "--verify")
        assert code == cli.EXIT_OK
        assert [json.loads(line)["method"] for line in stdout.splitlines()] == ["formula", "table"]

    @staticmethod
    def test_fixed():
        code, stdout, _ = run("count", "fixed", "3", "1", "--bruteforce", "--verify", "--format", "csv")
        assert code == cli.EXIT_OK
        rows = stdout.splitlines()[1:]
        assert [row.split(",")[2:4] for row in rows] == [["2016", "bruteforce"], ["2016", "formula"]]

    @staticmethod
    def test_unlabeled_bound():
        code, stdout, _ = run("count", "unlabeled-bound", "4", "--compute")
        assert code == cli.EXIT_OK
        assert json.loads(stdout)["value"] == "31"

    @staticmethod
    def test_disagreement(monkeypatch):
        monkeypatch.setattr(counts, "LABELED_DAG_TABLE", (1, 1, 3, 26))
        code, stdout, stderr = run("count", "dj", "--cube", "3", "--verify")
        assert code == cli.EXIT_FAILED
        assert len(stdout.splitlines()) == 2
        assert stderr == "smallcovers: error: values disagree: recurrence=25, table=26\n"


class TestErrors:
    @staticmethod
    def test_dimension_error():
        code, stdout, stderr = run("count", "fixed", "2", "3")
        assert code == cli.EXIT_USAGE
        assert stdout == ""
        assert stderr.startswith("smallcovers: error: ")

    @staticmethod
    def test_cap():
        code, stdout, stderr = run("count", "equivariant", "4", "--bruteforce")
        assert code == cli.EXIT_CAP
        assert stdout == ""
        assert "exceeds the cap of 3" in stderr

    @staticmethod
    def test_enumeration_cap():
        assert run("enumerate", "dags", "6")[0] == cli.EXIT_CAP

    @staticmethod
    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["count"],
            ["count", "dj"],
            ["count", "dj", "--cube", "2", "--simplices", "1"],
            ["count", "dj", "--simplices", "1,0"],
            ["count", "gl", "-1"],
            ["count", "gl", "x"],
            ["enumerate", "mn", "0"],
            ["--format", "xml", "count", "gl", "2"],
            ["--jobs", "0", "count", "gl", "2"],
        ],
    )
    def test_usage(argv, capsys):
        assert run(*argv)[0] == cli.EXIT_USAGE

    @staticmethod
    def test_version(capsys):
        assert run("--version")[0] == cli.EXIT_OK
        assert capsys.readouterr().out.startswith("smallcovers ")


class TestEnumerate:
    @staticmethod
    def test_mn(tmp_path):
        out = tmp_path / "mn.txt"
        code, stdout, _ = run("enumerate", "mn", "3", "--out", str(out))
        assert code == cli.EXIT_OK
        assert json.loads(stdout)["value"] == "25"
        lines = out.read_text(encoding="utf-8").splitlines()
        assert len(lines) == 26
        assert json.loads(lines[0][2:])["kind"] == "mn"

    @staticmethod
    def test_dags():
        code, stdout, _ = run("enumerate", "dags", "4")
        assert code == cli.EXIT_OK
        assert json.loads(stdout)["value"] == "543"


class TestVerify:
    @staticmethod
    def test_bijection():
        code, stdout, _ = run("verify", "bijection", "3")
        assert code == cli.EXIT_OK
        report = json.loads(stdout)
        assert report["passed"] is True
        assert report["verification"] == "bijection"
        assert len(report["checks"]) == 5

    @staticmethod
    def test_product_table():
        code, stdout, _ = run("verify", "product", "1,2", "--format", "table")
        assert code == cli.EXIT_OK
        assert stdout.endswith("PASS\n")

    @staticmethod
    def test_burnside_csv():
        code, stdout, _ = run("--format", "csv", "verify", "burnside", "2")
        assert code == cli.EXIT_OK
        header, *rows = stdout.splitlines()
        assert header == "verification,polytope,name,expected,actual,passed,runtime_ms"
        assert len(rows) == 5
        assert all(row.startswith("burnside,cube(2),") for row in rows)
        assert all(row.split(",")[5] == "true" for row in rows)

    @staticmethod
    @pytest.mark.parametrize(
        "argv", [["count", "equivariant", "0", "--bruteforce"], ["count", "fixed", "0", "0", "--bruteforce"]]
    )
    def test_zero_cube_counts(argv):
        code, stdout, _ = run(*argv)
        assert code == cli.EXIT_OK
        assert json.loads(stdout)["value"] == "1"

    @staticmethod
    def test_burnside_zero_cube():
        code, stdout, _ = run("verify", "burnside", "0")
        assert code == cli.EXIT_OK
        report = json.loads(stdout)
        assert report["polytope"] == "cube(0)"
        assert report["passed"] is True

    @staticmethod
    def test_failure(monkeypatch):
        monkeypatch.setattr(counts, "r_labeled", lambda n: 4)
        code, stdout, _ = run("verify", "bijection", "2", "--format", "table")
        assert code == cli.EXIT_FAILED
        assert stdout.endswith("FAIL\n")

    @staticmethod
    def test_cap():
        assert run("verify", "burnside", "4")[0] == cli.EXIT_CAP


class TestOutput:
    @staticmethod
    def test_json_report(mock_report):
        stream = io.StringIO()
        cli.write_output(mock_report, "json", stream)
        assert json.loads(stream.getvalue())["passed"] is False

    @staticmethod
    def test_csv_report(mock_report):
        stream = io.StringIO()
        cli.write_output(mock_report, "csv", stream)
        assert stream.getvalue().splitlines()[1:] == [
            "bijection,cube(2),labeled DAGs,3,3,true,1.500",
            "bijection,cube(2),members of M(n),3,4,false,1.500",
        ]

    @staticmethod
    def test_table_report(mock_report):
        stream = io.StringIO()
        cli.write_output(mock_report, "table", stream)
        lines = stream.getvalue().splitlines()
        assert lines[-1] == "FAIL"
        assert lines[0].split()[:3] == ["verification", "polytope", "name"]
        assert len({line.index("cube(2)") for line in lines[1:3]}) == 1

    @staticmethod
    def test_records():
        record = CountRecord(quantity="gl_order", polytope="cube(2)", value=6, method="formula", runtime_ms=0.0004)
        stream = io.StringIO()
        cli.write_output([record, record], "csv", stream)
        assert stream.getvalue() == (
            "quantity,polytope,value,method,runtime_ms\n"
            "gl_order,cube(2),6,formula,0.000\n"
            "gl_order,cube(2),6,formula,0.000\n"
        )


class TestLogging:
    @staticmethod
    def test_verbose():
        code, _, stderr = run("-v", "count", "gl", "2")
        assert code == cli.EXIT_OK
        assert "| INFO     | smallcovers.Runner | gl_order over cube(2) by formula: 6" in stderr

    @staticmethod
    def test_quiet():
        assert run("count", "gl", "2")[2] == ""


def test_main(monkeypatch):
    monkeypatch.setattr(sys, "argv", ["smallcovers", "count", "gl", "1"])
    monkeypatch.setattr(sys, "stdout", io.StringIO())
    with pytest.raises(SystemExit) as exc_info:
        cli.main()

    assert exc_info.value.code == cli.EXIT_OK
