import json
import subprocess
import sys

import pytest

from wronskian_appell.cli import main
from wronskian_appell.exactpoly import Poly


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCompute:
    @pytest.mark.parametrize(
        "seq, partition, expected",
        [("hermite", "2,1", "x^3"), ("monomial", "3,3,1", "x^7"), ("laguerre:2", "1", "x + 2"),
         ("hermite", "", "1"), ("laguerre:1/2", "1", "x + 1/2")],
    )
    def test_examples(self, capsys, seq, partition, expected):
        code, out, _ = run(capsys, "compute", "--seq", seq, "--partition", partition)
        assert code == 0 and out.strip() == expected

    @pytest.mark.parametrize("route", ["direct", "phi", "recurrence", "cross_checked"])
    def test_routes(self, capsys, route):
        # (x^2 - 1)(3x^2 - 3) - 2x(x^3 - 3x)
        code, out, _ = run(capsys, "compute", "--partition", "2,2", "--route", route)
        assert code == 0 and out.strip() == "x^4 + 3"

    def test_latex(self, capsys):
        code, out, _ = run(capsys, "compute", "--seq", "laguerre:1/2", "--partition", "1", "--format", "latex")
        assert code == 0 and out.strip() == r"x + \frac{1}{2}"

    def test_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "compute", "--partition", "1,1", "--format", "json")
        data = json.loads(out)
        assert code == 0 and data["partition"] == [1, 1]
        assert Poly.from_json(data["poly"]) == Poly([1, 0, 1])

    def test_explain(self, capsys):
        code, out, _ = run(capsys, "compute", "--partition", "2,1", "--explain", "--format", "json")
        data = json.loads(out)
        assert data["explain"] == [{"partition": [3], "coefficient": "-1"},
                                   {"partition": [1, 1, 1], "coefficient": "1"}]
        code, out, _ = run(capsys, "compute", "--partition", "2,1", "--explain")
        assert "p[3]: -1" in out and "p[1,1,1]: 1" in out

    def test_env_format(self, capsys, monkeypatch):
        monkeypatch.setenv("WRONSKIAN_APPELL_FORMAT", "json")
        code, out, _ = run(capsys, "compute", "--partition", "1")
        assert json.loads(out)["poly"] == ["0", "1"]


class TestTable:
    def test_hermite(self, capsys):
        code, out, _ = run(capsys, "table", "--seq", "hermite", "--max-size", "2")
        assert code == 0
        assert out.splitlines() == ["[]\t1", "[1]\tx", "[2]\tx^2 - 1", "[1,1]\tx^2 + 1"]

    def test_monomial(self, capsys):
        code, out, _ = run(capsys, "table", "--seq", "monomial", "--max-size", "3")
        rows = [line.split("\t") for line in out.splitlines()]
        assert len(rows) == 7
        for label, poly in rows:
            size = sum(int(v) for v in label.strip("[]").split(",") if v)
            assert poly == {0: "1", 1: "x"}.get(size, f"x^{size}")

    def test_zero(self, capsys):
        code, out, _ = run(capsys, "table", "--max-size", "0")
        assert out.splitlines() == ["[]\t1"]

    def test_deterministic(self, capsys):
        outputs = {run(capsys, "table", "--seq", "jacobi:1/3,1/5", "--max-size", "5", "--format", "json")[1]
                   for _ in range(3)}
        assert len(outputs) == 1

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "table", "--seq", "hermite", "--max-size", "3", "--format", "json")
        data = json.loads(out)
        assert [row["partition"] for row in data["rows"]][:4] == [[], [1], [2], [1, 1]]
        assert all(isinstance(c, str) for row in data["rows"] for c in row["poly"])

    def test_latex(self, capsys):
        code, out, _ = run(capsys, "table", "--max-size", "1", "--format", "latex")
        assert r"$\emptyset$ & $1$ \\" in out and out.startswith(r"\begin{tabular}")

    def test_warning_above_cap(self, capsys):
        # table at 17 would be slow, so use a cheap command that still parses --max-size
        code, _, err = run(capsys, "verify", "hook-formula", "--max-size", "17", "--seq", "monomial")
        assert code == 0 and "warning" in err


class TestVerify:
    def test_all_hermite(self, capsys):
        code, out, _ = run(capsys, "verify", "all", "--seq", "hermite", "--max-size", "6")
        assert code == 0
        assert out.splitlines()[-1].startswith("PASS: hermite, max size 6")

    def test_yablonskii_integrality(self, capsys):
        code, out, _ = run(capsys, "verify", "integrality", "--seq", "yablonskii", "--max-size", "7")
        assert code == 0 and out.startswith("PASS")

    def test_newton_schur(self, capsys):
        code, _, _ = run(capsys, "verify", "newton-schur", "--max-size", "6")
        assert code == 0

    def test_skip_is_not_failure(self, capsys):
        code, out, _ = run(capsys, "verify", "integrality", "rho-transform", "--seq", "laguerre:1/2", "--max-size", "4")
        assert code == 0 and out.count("SKIP") == 2

    def test_json(self, capsys):
        code, out, _ = run(capsys, "verify", "mean", "dual", "--seq", "laguerre:3", "--max-size", "4", "--format", "json")
        data = json.loads(out)
        assert code == 0 and data["status"] == "pass"
        assert [s["identity"] for s in data["suites"]] == ["mean", "dual"]

    @pytest.mark.parametrize("k", range(1, 7))
    def test_mutation(self, capsys, k):
        code, out, _ = run(capsys, "verify", "all", "--seq", "hermite", "--max-size", "6",
                           "--corrupt-cumulant", f"{k}=1")
        assert code == 1
        assert "FAIL" in out

    def test_witnesses_reported(self, capsys):
        code, out, _ = run(capsys, "verify", "routes", "--seq", "hermite", "--max-size", "3",
                           "--corrupt-cumulant", "2=1/3", "--format", "json")
        data = json.loads(out)
        assert code == 1 and data["status"] == "fail"
        witness = data["suites"][0]["witnesses"][0]
        assert "partition" in witness and "routes disagree" in witness["error"]


class TestStats:
    def test_hermite(self, capsys):
        code, out, _ = run(capsys, "stats", "--max-size", "2")
        line = out.splitlines()[2]
        assert line == "n=2\tmean=x^2\tsecond_moment=x^4 + 1\tvariance=1\tvariance_bound=ok"

    def test_monomial_variance(self, capsys):
        code, out, _ = run(capsys, "stats", "--seq", "monomial", "--max-size", "5", "--format", "json")
        assert json.loads(out)["reports"][5]["variance"] == []

    def test_laguerre_mean(self, capsys):
        code, out, _ = run(capsys, "stats", "--seq", "laguerre:1", "--max-size", "3", "--format", "json")
        mean = Poly.from_json(json.loads(out)["reports"][3]["mean"])
        assert mean == Poly([1, 1]) ** 3


class TestExitCodes:
    @pytest.mark.parametrize(
        "argv",
        [
            ["compute", "--seq", "bogus", "--partition", "1"],
            ["compute", "--seq", "laguerre:0.5", "--partition", "1"],
            ["compute", "--partition", "1,2"],
            ["compute", "--partition", "a"],
            ["compute", "--seq", "jacobi:1,-1", "--partition", "1"],
            ["verify", "all", "routes"],
            ["verify", "nonsense"],
            ["table", "--max-size", "-1"],
            ["compute", "--partition", "1", "--corrupt-cumulant", "x"],
            [],
        ],
    )
    def test_usage_errors(self, capsys, argv):
        try:
            code = main(argv)
        except SystemExit as exc:
            code = exc.code
        capsys.readouterr()
        assert code == 2

    def test_route_disagreement_exit_1(self, capsys):
        code, _, err = run(capsys, "compute", "--partition", "2", "--corrupt-cumulant", "2=1")
        assert code == 1 and "routes disagree" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "wronskian_appell", "compute", "--partition", "2,1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "x^3"
