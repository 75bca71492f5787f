"""End-to-end tests for the command-line interface."""

import json
import subprocess
import sys

import pytest

from reqsmell import __version__
from reqsmell.cli import EXIT_ERROR, EXIT_FLAGGED, EXIT_OK, main, run


@pytest.fixture
def corpus(tmp_path):
    path = tmp_path / "corpus.csv"
    path.write_text(
        "ID,Text\n"
        "R1,The system may fail based on some conditions.\n"
        "R2,It runs.\n",
        encoding="utf-8",
    )
    return path


@pytest.fixture
def thresholds(tmp_path):
    path = tmp_path / "thresholds.txt"
    path.write_text("V >= 2\n", encoding="utf-8")
    return path


class TestHappyPaths:
    def test_table_to_stdout(self, corpus, capsys):
        assert run(["--input", str(corpus)]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.splitlines()[0].startswith("id")
        assert "R1" in out and "R2" in out
        assert "requirements: 2" in out

    def test_json_format(self, corpus, capsys):
        assert run(["--input", str(corpus), "--format", "json"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["tool"] == "reqsmell"
        assert payload["version"] == __version__
        assert [r["id"] for r in payload["requirements"]] == ["R1", "R2"]
        assert payload["requirements"][0]["metrics"]["V"] == 3

    def test_csv_format(self, corpus, capsys):
        assert run(["--input", str(corpus), "--format", "csv"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "id,V,NR1,NR2,O,S,W,NC,NW,ARI,flags"
        assert len(lines) == 3

    def test_output_file(self, corpus, tmp_path, capsys):
        target = tmp_path / "report.json"
        assert run(["--input", str(corpus), "--format", "json", "--output", str(target)]) == EXIT_OK
        assert capsys.readouterr().out == ""
        assert json.loads(target.read_text(encoding="utf-8"))["tool"] == "reqsmell"

    def test_output_is_deterministic_across_runs(self, corpus, tmp_path):
        first = tmp_path / "a.json"
        second = tmp_path / "b.json"
        run(["--input", str(corpus), "--format", "json", "--output", str(first)])
        run(["--input", str(corpus), "--format", "json", "--output", str(second)])
        assert first.read_bytes() == second.read_bytes()

    def test_no_temp_files_left_behind(self, corpus, tmp_path):
        target = tmp_path / "report.csv"
        run(["--input", str(corpus), "--format", "csv", "--output", str(target)])
        leftovers = [p.name for p in tmp_path.iterdir() if p.name.startswith(".reqsmell-")]
        assert leftovers == []

    def test_custom_columns_and_tab_delimiter(self, tmp_path, capsys):
        path = tmp_path / "corpus.tsv"
        path.write_text("Key\tBody\nA1\tcan may optionally\n", encoding="utf-8")
        code = run([
            "--input", str(path),
            "--id-column", "Key",
            "--text-column", "Body",
            "--delimiter", "\\t",
            "--format", "json",
        ])
        assert code == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["requirements"][0]["metrics"]["O"] == 3

    def test_dictionary_override(self, corpus, tmp_path, capsys):
        override = tmp_path / "dict.txt"
        override.write_text("[V]\nzzz\n", encoding="utf-8")
        run(["--input", str(corpus), "--dictionaries", str(override), "--format", "json"])
        payload = json.loads(capsys.readouterr().out)
        assert payload["requirements"][0]["metrics"]["V"] == 0
        assert payload["config"]["dictionaries"]["V"]["origin"] == "user-file"
        assert payload["config"]["dictionaries"]["O"]["origin"] == "builtin"

    def test_timestamp_flag(self, corpus, capsys):
        run(["--input", str(corpus), "--format", "json", "--timestamp"])
        config = json.loads(capsys.readouterr().out)["config"]
        assert "timestamp" in config
        run(["--input", str(corpus), "--format", "json"])
        config = json.loads(capsys.readouterr().out)["config"]
        assert "timestamp" not in config


class TestExitCodes:
    def test_fail_on_flagged_with_hits(self, corpus, thresholds, capsys):
        code = run([
            "--input", str(corpus),
            "--thresholds", str(thresholds),
            "--fail-on-flagged",
            "--format", "json",
        ])
        assert code == EXIT_FLAGGED
        payload = json.loads(capsys.readouterr().out)
        assert payload["requirements"][0]["flags"] == ["V"]

    def test_flagged_without_opt_in_still_succeeds(self, corpus, thresholds, capsys):
        assert run(["--input", str(corpus), "--thresholds", str(thresholds)]) == EXIT_OK
        capsys.readouterr()

    def test_fail_on_flagged_with_no_hits(self, corpus, tmp_path, capsys):
        lenient = tmp_path / "lenient.txt"
        lenient.write_text("NW > 9000\n", encoding="utf-8")
        code = run(["--input", str(corpus), "--thresholds", str(lenient), "--fail-on-flagged"])
        assert code == EXIT_OK
        capsys.readouterr()

    def test_version_exits_zero(self, capsys):
        assert run(["--version"]) == EXIT_OK
        assert __version__ in capsys.readouterr().out

    def test_help_exits_zero(self, capsys):
        assert run(["--help"]) == EXIT_OK
        assert "--fail-on-flagged" in capsys.readouterr().out

    def test_main_raises_systemexit(self, corpus, capsys, monkeypatch):
        monkeypatch.setattr(sys, "argv", ["reqsmell", "--input", str(corpus)])
        with pytest.raises(SystemExit) as info:
            main()
        assert info.value.code == EXIT_OK
        capsys.readouterr()


class TestErrorPaths:
    def test_missing_input_file(self, tmp_path, capsys):
        assert run(["--input", str(tmp_path / "absent.csv")]) == EXIT_ERROR
        assert capsys.readouterr().err.startswith("error:")

    def test_missing_required_argument(self, capsys):
        assert run([]) == EXIT_ERROR
        assert "--input" in capsys.readouterr().err

    def test_unknown_flag(self, corpus, capsys):
        assert run(["--input", str(corpus), "--bogus"]) == EXIT_ERROR
        capsys.readouterr()

    def test_bad_delimiter(self, corpus, capsys):
        assert run(["--input", str(corpus), "--delimiter", "::"]) == EXIT_ERROR
        assert "delimiter" in capsys.readouterr().err

    def test_missing_column(self, tmp_path, capsys):
        path = tmp_path / "corpus.csv"
        path.write_text("Key,Text\nA,x\n", encoding="utf-8")
        assert run(["--input", str(path)]) == EXIT_ERROR
        assert "'ID'" in capsys.readouterr().err

    def test_malformed_thresholds(self, corpus, tmp_path, capsys):
        bad = tmp_path / "bad.txt"
        bad.write_text("V ~= 2\n", encoding="utf-8")
        assert run(["--input", str(corpus), "--thresholds", str(bad)]) == EXIT_ERROR
        assert "line 1" in capsys.readouterr().err

    def test_malformed_dictionary(self, corpus, tmp_path, capsys):
        bad = tmp_path / "bad.txt"
        bad.write_text("[NOPE]\nx\n", encoding="utf-8")
        assert run(["--input", str(corpus), "--dictionaries", str(bad)]) == EXIT_ERROR
        assert "unknown metric" in capsys.readouterr().err

    def test_unwritable_output_directory(self, corpus, tmp_path, capsys):
        target = tmp_path / "no" / "such" / "dir" / "report.json"
        assert run(["--input", str(corpus), "--output", str(target)]) == EXIT_ERROR
        assert capsys.readouterr().err.startswith("error:")

    def test_duplicate_ids(self, tmp_path, capsys):
        path = tmp_path / "corpus.csv"
        path.write_text("ID,Text\nR1,x\nR1,y\n", encoding="utf-8")
        assert run(["--input", str(path)]) == EXIT_ERROR
        assert "duplicate" in capsys.readouterr().err


class TestWarnings:
    def test_empty_corpus_warns_but_succeeds(self, tmp_path, capsys):
        path = tmp_path / "corpus.csv"
        path.write_text("ID,Text\n", encoding="utf-8")
        assert run(["--input", str(path), "--format", "json"]) == EXIT_OK
        captured = capsys.readouterr()
        assert captured.err.startswith("warning:")
        payload = json.loads(captured.out)
        assert payload["summary"]["requirement_count"] == 0
        assert payload["requirements"] == []

    def test_blank_text_row_warns_in_report_not_stderr(self, tmp_path, capsys):
        path = tmp_path / "corpus.csv"
        path.write_text("ID,Text\nR1,\n", encoding="utf-8")
        assert run(["--input", str(path), "--format", "json"]) == EXIT_OK
        captured = capsys.readouterr()
        assert captured.err == ""
        payload = json.loads(captured.out)
        assert payload["requirements"][0]["warnings"] == ["requirement text contains no words"]


class TestModuleInvocation:
    def test_python_dash_m(self, corpus):
        result = subprocess.run(
            [sys.executable, "-m", "reqsmell", "--input", str(corpus), "--format", "csv"],
            capture_output=True,
            text=True,
        )
        assert result.returncode == 0
        assert result.stdout.splitlines()[0] == "id,V,NR1,NR2,O,S,W,NC,NW,ARI,flags"
