import json

import pytest

from famex import build_fam_graph, export_graph, load_csv
from famex.cli import run_cli


class TestScoreCommand:
    def test_json_happy_path(self, tiny_csv, capsys):
        assert run_cli(["score", str(tiny_csv), "--format", "json"]) == 0
        records = json.loads(capsys.readouterr().out)
        assert [r["rank"] for r in records] == [1, 2, 3]
        assert records[0]["name"] == "a"  # the planted signal column

    def test_table_output(self, tiny_csv, capsys):
        assert run_cli(["score", str(tiny_csv)]) == 0
        out = capsys.readouterr().out
        assert out.splitlines()[0].startswith("rank")
        assert "importance" in out

    def test_markdown_output(self, tiny_csv, capsys):
        assert run_cli(["score", str(tiny_csv), "--format", "markdown"]) == 0
        assert capsys.readouterr().out.startswith("| rank |")

    def test_identical_invocations_are_byte_identical(self, tiny_csv, capsys):
        run_cli(["score", str(tiny_csv), "--format", "json"])
        first = capsys.readouterr().out
        run_cli(["score", str(tiny_csv), "--format", "json"])
        assert capsys.readouterr().out == first

    def test_class_col_flag(self, tmp_path, capsys):
        (tmp_path / "d.csv").write_text("y,a,b\n0,1.0,2.0\n1,2.0,1.0\n0,1.5,2.5\n1,2.5,0.5\n")
        assert run_cli(["score", str(tmp_path / "d.csv"), "--class-col", "y", "--format", "json"]) == 0
        names = {r["name"] for r in json.loads(capsys.readouterr().out)}
        assert names == {"a", "b"}


class TestGraphCommand:
    def test_out_file_matches_direct_export(self, tiny_csv, tmp_path):
        out = tmp_path / "fam.dot"
        assert run_cli(["graph", str(tiny_csv), "--out", str(out)]) == 0
        want = export_graph(build_fam_graph(load_csv(tiny_csv)), "dot")
        assert out.read_text(encoding="utf-8") == want

    def test_json_format(self, tiny_csv, capsys):
        assert run_cli(["graph", str(tiny_csv), "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert {f["name"] for f in payload["features"]} == {"a", "b", "c"}

    def test_custom_thresholds(self, tiny_csv, capsys):
        assert run_cli(["graph", str(tiny_csv), "--format", "json", "--thresholds", "0.5,0.8"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["thresholds"] == {"low": 0.5, "high": 0.8}

    def test_bad_thresholds_exit_one(self, tiny_csv, capsys):
        assert run_cli(["graph", str(tiny_csv), "--thresholds", "nope"]) == 1
        assert "error:" in capsys.readouterr().err


class TestEvaluateAndCompare:
    def test_missing_file_exit_one(self, capsys):
        assert run_cli(["evaluate", "missing.csv"]) == 1
        err = capsys.readouterr().err
        assert "missing.csv" in err
        assert "error:" in err

    def test_evaluate_single_method(self, tiny_csv, capsys):
        code = run_cli(
            [
                "evaluate", str(tiny_csv),
                "--method", "famex",
                "--classifiers", "naive_bayes",
                "--folds", "2", "--iters", "2",
                "--format", "json",
            ]
        )
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert {c["method"] for c in payload["cells"]} == {"famex"}
        assert {c["subset"] for c in payload["cells"]} == {"top", "bottom"}

    def test_compare_runs_all_methods(self, tiny_csv, capsys):
        code = run_cli(
            [
                "compare", str(tiny_csv),
                "--classifiers", "naive_bayes",
                "--folds", "2", "--iters", "2",
                "--format", "json",
            ]
        )
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert {c["method"] for c in payload["cells"]} == {"famex", "pfi", "shapley_mc"}

    def test_unusable_flag_combination_exits_one(self, tiny_csv, capsys):
        assert run_cli(["evaluate", str(tiny_csv), "--top", "1.5"]) == 1
        assert "fraction" in capsys.readouterr().err


class TestUsageErrors:
    def test_unknown_command_exits_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run_cli(["frobnicate"])
        assert exc.value.code == 2
        assert "usage" in capsys.readouterr().err.lower()

    def test_unknown_flag_exits_two(self, tiny_csv, capsys):
        with pytest.raises(SystemExit) as exc:
            run_cli(["score", str(tiny_csv), "--no-such-flag"])
        assert exc.value.code == 2

    def test_no_command_exits_two(self):
        with pytest.raises(SystemExit) as exc:
            run_cli([])
        assert exc.value.code == 2
