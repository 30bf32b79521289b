# tests/test_cli.py
import os
import subprocess
import sys
from pathlib import Path

import pytest

import main as cli
from config.constants import EXIT_COUNTEREXAMPLE, EXIT_OK, EXIT_VALIDATION
from harness.fuzz import SOFT, TrialRecord, aggregate
from main import main

from conftest import TYPE_A_TEXT, TYPE_C_ANISO_TEXT, TYPE_C_ISO_TEXT, TYPE_D_EMPTY_TEXT


def test_classify_prints_verdict(write_text, capsys):
    path = write_text("d.txt", TYPE_D_EMPTY_TEXT)
    assert main(["classify", path]) == EXIT_OK
    out = capsys.readouterr().out
    assert "verdict        : NonGeneric" in out
    assert "xbeta          : Empty" in out


def test_classify_csv(write_text, capsys):
    path = write_text("c.txt", TYPE_C_ANISO_TEXT)
    assert main(["classify", path, "--format", "csv"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "record,key,value"
    assert "summary,xbeta,Empty" in out


def test_skewness_violation_exits_with_validation_code(write_text, capsys):
    path = write_text("bad.txt", TYPE_D_EMPTY_TEXT.replace("beta1 = [(1*p^-3)*d]", "beta1 = [1]"))
    assert main(["classify", path]) == EXIT_VALIDATION
    assert "skewness violated" in capsys.readouterr().err


def test_declared_depth_mismatch(write_text, capsys):
    text = TYPE_C_ISO_TEXT.replace("shape = oo", "shape = oo\nn = 5")
    path = write_text("n.txt", text)
    assert main(["classify", path]) == EXIT_VALIDATION
    assert "depth violated" in capsys.readouterr().err


def test_parse_error_reports_position(write_text, capsys):
    path = write_text("p.txt", TYPE_C_ISO_TEXT.replace("type = C", "type = E"))
    assert main(["classify", path]) == EXIT_VALIDATION
    assert "line 6" in capsys.readouterr().err


def test_missing_input_file_argument(capsys):
    assert main(["classify"]) == EXIT_VALIDATION
    assert "needs a stratum file" in capsys.readouterr().err


def test_search_xbeta_finds_witness(write_text, capsys):
    path = write_text("c.txt", TYPE_C_ISO_TEXT)
    assert main(["search-xbeta", path, "--depth", "6"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "Witness" in out
    assert "criterion      : NonEmpty" in out


def test_search_depth_below_minimum(write_text):
    path = write_text("c.txt", TYPE_C_ISO_TEXT)
    assert main(["search-xbeta", path, "--depth", "3"]) == EXIT_VALIDATION


def test_filtration_table(capsys):
    assert main(["filtration-table", "--lattice", "L2", "--from", "0", "--to", "7", "--format", "csv"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 1 + 8


def test_filtration_table_unsupported_lattice(capsys):
    assert main(["filtration-table", "--lattice", "L4"]) == EXIT_VALIDATION
    assert "Error" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["fuzz", "--trials", "0"],
    ["fuzz", "--threads", "0"],
    ["verify-lemmas", "--precision", "2"],
])
def test_bad_run_arguments(argv):
    assert main(argv) == EXIT_VALIDATION


def test_classify_type_a_is_generic(write_text, capsys):
    path = write_text("a.txt", TYPE_A_TEXT)
    assert main(["classify", path]) == EXIT_OK
    assert "verdict        : Generic" in capsys.readouterr().out


def test_verify_lemmas_passes(capsys):
    assert main(["verify-lemmas", "--trials", "4"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "fail=0" in out
    assert "COUNTEREXAMPLE" not in out


def test_fuzz_soft_failures_exit_with_counterexample_code(monkeypatch, capsys):
    records = [TrialRecord(0, "C", 7, True, "NonEmpty", SOFT, 16, escalated=True)]
    monkeypatch.setattr(cli, "run_fuzz", lambda **kw: aggregate(records))
    assert main(["fuzz", "--trials", "1"]) == EXIT_COUNTEREXAMPLE
    assert "soft failures  : 1" in capsys.readouterr().out


def test_verify_summary_is_written_once(tmp_path):
    root = Path(__file__).resolve().parents[1]
    env = dict(os.environ, LOG_FILE=str(tmp_path / "events.jsonl"))
    done = subprocess.run(
        [sys.executable, "main.py", "verify-lemmas", "--trials", "2"],
        cwd=root, env=env, capture_output=True, text=True, timeout=600,
    )
    assert done.returncode == EXIT_OK, done.stderr
    summaries = [line for line in done.stdout.splitlines() if " pass=" in line]
    assert summaries
    assert " pass=" not in done.stderr
    assert len(set(summaries)) == len(summaries)
