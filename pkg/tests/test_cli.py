"""CLI behavior: formats, determinism, exit codes, file output."""
import json

import pytest
from click.testing import CliRunner

from refined_eulerian import identities
from refined_eulerian.cli import main
from refined_eulerian.triangles import a_row


@pytest.fixture()
def runner():
    return CliRunner()


TABLE_A_TEXT = (
    "1\n1\n1,2\n1,5\n1,13,16\n1,28,61\n1,60,297,272\n"
    "1,123,1011,1385\n1,251,3651,10841,7936\n1,506,11706,50666,50521\n"
)


class TestTriangle:
    def test_a_text_matches_reference_rows(self, runner):
        result = runner.invoke(main, ["triangle", "--kind", "a", "--n-max", "10"])
        assert result.exit_code == 0
        assert result.output == TABLE_A_TEXT

    def test_eulerian_single_row(self, runner):
        result = runner.invoke(main, ["triangle", "--kind", "eulerian", "--n-max", "1"])
        assert result.exit_code == 0
        assert result.output == "1\n"

    def test_c_rows_text(self, runner):
        result = runner.invoke(main, ["triangle", "--kind", "c", "--n-max", "4"])
        assert result.exit_code == 0
        assert result.output == "1\n1,1\n1,2\n1,6,5\n"

    def test_csv_has_n_column_and_padding(self, runner):
        result = runner.invoke(
            main, ["triangle", "--kind", "a", "--n-max", "5", "--format", "csv"]
        )
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0] == "1,1,,"
        assert lines[4] == "5,1,13,16"

    def test_json_round_trips_exact_integers(self, runner):
        result = runner.invoke(
            main, ["triangle", "--kind", "a", "--n-max", "10", "--format", "json"]
        )
        payload = json.loads(result.output)
        assert payload["kind"] == "a"
        assert payload["first_n"] == 1
        for offset, row in enumerate(payload["rows"]):
            assert tuple(int(v) for v in row) == a_row(offset + 1)

    def test_bfile_rejected(self, runner):
        result = runner.invoke(
            main, ["triangle", "--kind", "a", "--format", "bfile"]
        )
        assert result.exit_code == 2

    def test_invalid_kind_rejected(self, runner):
        result = runner.invoke(main, ["triangle", "--kind", "zigzag"])
        assert result.exit_code == 2

    def test_n_max_must_be_positive(self, runner):
        result = runner.invoke(main, ["triangle", "--kind", "a", "--n-max", "0"])
        assert result.exit_code == 2

    def test_byte_determinism(self, runner):
        args = ["triangle", "--kind", "eulerian", "--n-max", "8", "--format", "csv"]
        first = runner.invoke(main, args).output
        second = runner.invoke(main, args).output
        assert first == second


class TestPoly:
    def test_refined_text(self, runner):
        result = runner.invoke(main, ["poly", "--n", "3"])
        assert result.output == "1 + 2*p + 2*q + p*q\n"

    def test_n_zero(self, runner):
        result = runner.invoke(main, ["poly", "--n", "0"])
        assert result.output == "1\n"

    def test_row_0q(self, runner):
        result = runner.invoke(main, ["poly", "--n", "4", "--variant", "row_0q"])
        assert result.output == "1 + 5*q\n"

    def test_row_p0(self, runner):
        result = runner.invoke(main, ["poly", "--n", "4", "--variant", "row_p0"])
        assert result.output == "1 + 6*p + 5*p^2\n"

    def test_tilde(self, runner):
        result = runner.invoke(main, ["poly", "--n", "2", "--variant", "tilde"])
        assert result.output == "1 + p + q + p*q\n"

    def test_json_monomials(self, runner):
        result = runner.invoke(main, ["poly", "--n", "3", "--format", "json"])
        payload = json.loads(result.output)
        assert payload["monomials"][0] == {"i": 0, "j": 0, "coeff": "1"}
        assert {"i": 1, "j": 1, "coeff": "1"} in payload["monomials"]

    def test_invalid_variant(self, runner):
        result = runner.invoke(main, ["poly", "--n", "3", "--variant", "bogus"])
        assert result.exit_code == 2

    def test_negative_n(self, runner):
        result = runner.invoke(main, ["poly", "--n", "-1"])
        assert result.exit_code == 2


class TestSequence:
    def test_euler_bfile(self, runner):
        result = runner.invoke(
            main, ["sequence", "--kind", "euler", "--n-max", "8", "--format", "bfile"]
        )
        lines = result.output.splitlines()
        assert lines[-1] == "8 1385"
        # b-file lint: ascending indices, single space, no blank lines
        assert all(line and line.count(" ") == 1 for line in lines)
        indices = [int(line.split()[0]) for line in lines]
        assert indices == list(range(len(lines)))
        assert "\n\n" not in result.output
        assert result.output.endswith("\n")

    def test_catalan_text(self, runner):
        result = runner.invoke(main, ["sequence", "--kind", "catalan", "--n-max", "3"])
        assert result.output == "1,1,2,5\n"

    def test_euler_zero(self, runner):
        result = runner.invoke(main, ["sequence", "--kind", "euler", "--n-max", "0"])
        assert result.output == "1\n"

    def test_csv(self, runner):
        result = runner.invoke(
            main, ["sequence", "--kind", "catalan", "--n-max", "3", "--format", "csv"]
        )
        assert result.output == "0,1\n1,1\n2,2\n3,5\n"

    def test_json(self, runner):
        result = runner.invoke(
            main, ["sequence", "--kind", "euler", "--n-max", "10", "--format", "json"]
        )
        payload = json.loads(result.output)
        assert payload["values"][-1] == "50521"
        assert [int(v) for v in payload["values"]][:6] == [1, 1, 1, 2, 5, 16]

    def test_invalid_kind(self, runner):
        result = runner.invoke(main, ["sequence", "--kind", "fibonacci"])
        assert result.exit_code == 2


class TestVerify:
    def test_small_all_pass(self, runner):
        result = runner.invoke(
            main, ["verify", "--n-max", "5", "--oracle-cap", "5"]
        )
        assert result.exit_code == 0
        assert result.output.startswith(
            "verify: selection=all n_max=5 oracle_cap=5\n"
        )
        assert "result: PASS" in result.output

    def test_selection_json(self, runner):
        result = runner.invoke(
            main,
            [
                "verify", "palindromicity", "special-rows",
                "--n-max", "8", "--format", "json",
            ],
        )
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["status"] == "pass"
        assert payload["n_max"] == 8
        assert [r["id"] for r in payload["reports"]] == [
            "palindromicity",
            "special-rows",
        ]

    def test_unknown_id_exits_2_with_hint(self, runner):
        result = runner.invoke(main, ["verify", "nonsense"])
        assert result.exit_code == 2
        assert "nonsense" in result.output
        assert "known ids" in result.output

    def test_tampered_table_exits_1_with_witness(self, runner, monkeypatch):
        real = a_row

        def tampered(n):
            row = list(real(n))
            if n == 6:
                row[1] += 1
            return tuple(row)

        monkeypatch.setattr(identities, "a_row", tampered)
        result = runner.invoke(
            main, ["verify", "triangle-recurrences", "--n-max", "8", "--oracle-cap", "8"]
        )
        assert result.exit_code == 1
        assert "FAIL triangle-recurrences" in result.output
        assert "'n': 6" in result.output
        assert "lhs:" in result.output and "rhs:" in result.output

    def test_out_writes_file(self, runner, tmp_path):
        target = tmp_path / "report.json"
        result = runner.invoke(
            main,
            [
                "verify", "palindromicity", "--n-max", "4",
                "--format", "json", "--out", str(target),
            ],
        )
        assert result.exit_code == 0
        assert result.output == ""
        payload = json.loads(target.read_text())
        assert payload["status"] == "pass"


@pytest.mark.parametrize(
    "args",
    [
        ["triangle", "--kind", "a", "--n-max", "4", "--format", "csv"],
        ["sequence", "--kind", "euler", "--n-max", "6", "--format", "bfile"],
        ["poly", "--n", "5", "--format", "json"],
    ],
)
def test_out_matches_stdout(args, tmp_path):
    runner = CliRunner()
    direct = runner.invoke(main, args)
    assert direct.exit_code == 0
    target = tmp_path / "out.txt"
    to_file = runner.invoke(main, args + ["--out", str(target)])
    assert to_file.exit_code == 0
    assert target.read_text() == direct.output
