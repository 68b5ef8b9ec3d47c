"""Unit tests for CLI entry point."""

from __future__ import annotations

import io
import json
import subprocess
from collections.abc import Callable
from pathlib import Path
from unittest.mock import MagicMock, patch

import pytest

from mfsr.cli import EXIT_INTERNAL, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main
from mfsr.criterion import ReductionError

_ROW = {"id": "X.1", "table": "1", "template": "sl(2)", "rank": "0", "isotropy": "sp(1)"}


def test_check_text(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["check", "sl(2)"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "𝔤 = A1 (dim 3, rank 1); dim V = 2" in out
    assert "multiplicity free: yes" in out
    assert "generic isotropy 𝔩: sp1" in out


def test_check_reads_stdin(monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]) -> None:
    monkeypatch.setattr("sys.stdin", io.StringIO("T(sl(2))\n"))
    assert main(["check", "-", "--format", "json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["input"] == "T(sl(2))"
    assert data["verdict"]["rank"] == 1
    assert data["verdict"]["isotropy"] == "t1"


def test_trace_json_without_timing(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["trace", "T(sl(2))", "--format", "json", "--no-timing"]) == EXIT_OK
    first = capsys.readouterr().out
    assert main(["trace", "T(sl(2))", "--format", "json", "--no-timing"]) == EXIT_OK
    assert capsys.readouterr().out == first
    data = json.loads(first)
    assert data["command"] == "trace"
    assert data["verdict"]["trace"][0]["chosen"] == [1, 1]
    assert data["timing"]["duration_s"] == 0.0


def test_only_trace_reports_the_steps(capsys: pytest.CaptureFixture[str]) -> None:
    rep = "sp(4)*ext0(2,sp(4)) ++ sp(4)"
    assert main(["trace", rep, "--format", "json", "--no-timing"]) == EXIT_OK
    traced = json.loads(capsys.readouterr().out)["verdict"]
    assert traced["trace"]
    assert len(traced["trace"]) == traced["steps"]
    assert {"chosen", "multiplicity", "positive", "removed"} <= traced["trace"][0].keys()

    assert main(["check", rep, "--format", "json", "--no-timing"]) == EXIT_OK
    checked = json.loads(capsys.readouterr().out)["verdict"]
    assert not checked.get("trace")
    assert checked["steps"] == traced["steps"]


def test_trace_text_honours_step_limit(clean_env: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]) -> None:
    clean_env.setenv("MFSR_MAX_TRACE_STEPS", "1")
    assert main(["trace", "ext(3,sl(6)) ++ T(sl(6)) ++ T(sl(6))"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "  step 1: χ=(0,0,1,0,0,0,0)" in out
    assert "  step 2:" not in out
    assert "more steps" in out
    assert "multiplicity free: no" in out
    assert "dependency witness:" in out


def test_require_saturated(clean_env: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["check", "sl(2) ++ sl(2)"]) == EXIT_OK
    assert "warning: not saturated" in capsys.readouterr().out
    assert main(["check", "sl(2) ++ sl(2)", "--require-saturated"]) == EXIT_MISMATCH
    assert "input is not saturated" in capsys.readouterr().err
    clean_env.setenv("MFSR_REQUIRE_SATURATED", "1")
    assert main(["check", "sl(2) ++ sl(2)"]) == EXIT_MISMATCH
    assert main(["check", "sl(2) ++ sl(2)", "--no-require-saturated"]) == EXIT_OK


def test_dsl_error_is_rendered_with_a_caret(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["check", "sp(4) ++ so(4)"]) == EXIT_USAGE
    err = capsys.readouterr().err
    assert err.startswith("error: ")
    lines = err.rstrip("\n").splitlines()
    assert lines[1] == "  sp(4) ++ so(4)"
    assert lines[2] == "  " + " " * 9 + "^" * 5


def test_syntax_error_exit_code(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["decompose", "sl(2"]) == EXIT_USAGE
    assert "^" in capsys.readouterr().err


def test_decompose_and_saturate(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["decompose", "T(sl(3))"]) == EXIT_OK
    assert "type2" in capsys.readouterr().out
    assert main(["saturate", "sl(2) ++ sl(2) ++ sl(2)", "--format", "json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["command"] == "saturate"
    assert data["was_saturated"] is False
    assert main(["saturate", "so(5)"]) == EXIT_USAGE
    assert "odd multiplicity" in capsys.readouterr().err


def test_glue(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["glue", "S.13:m=1", "S.13:m=1", "--format", "json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["command"] == "glue"
    assert data["input"] == "S.13:m=1 + S.13:m=1"
    assert data["verdict"]["multiplicity_free"] is True


@pytest.mark.parametrize(
    ("argv", "message"),
    [
        (["glue", "S.9", "S.9"], "not saturated"),
        (["glue", "S.1b:m=2", "--pair", "0.0-0.1"], "one component"),
        (["glue", "S.13:m", "S.9"], "bad parameter"),
        (["glue", "S.9", "S.10", "--pair", "0-1"], "bad --pair"),
        (["glue", "Z.1", "S.9"], "no catalog entry"),
    ],
)
def test_glue_errors(argv: list[str], message: str, capsys: pytest.CaptureFixture[str]) -> None:
    assert main(argv) == EXIT_USAGE
    assert message in capsys.readouterr().err


def test_tables_list(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["tables", "list", "--table", "22", "--format", "json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["command"] == "tables list"
    assert len(data["entries"]) == 7
    assert main(["tables", "list"]) == EXIT_OK
    assert len(capsys.readouterr().out.splitlines()) == 90


def test_tables_show(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["tables", "show", "S.9"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("S.9")
    assert "underlined sl(2) positions: [0]" in out
    assert " ok" in out
    assert main(["tables", "show", "99.9"]) == EXIT_USAGE


def test_tables_verify_against_custom_catalog(
    clean_env: pytest.MonkeyPatch,
    write_catalog: Callable[..., Path],
    capsys: pytest.CaptureFixture[str],
) -> None:
    clean_env.setenv("MFSR_CATALOG", str(write_catalog([_ROW])))
    assert main(["tables", "verify", "--table", "1", "--cap", "2", "--no-timing"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "Table 1" in out
    assert out.rstrip().endswith("PASS in -")

    clean_env.setenv("MFSR_CATALOG", str(write_catalog([{**_ROW, "rank": "1"}])))
    assert main(["tables", "verify", "--table", "1", "--cap", "2"]) == EXIT_MISMATCH
    assert "MISMATCH X.1 - rank: expected 1, got 0" in capsys.readouterr().out


def test_bad_catalog_override_exits_before_running(
    clean_env: pytest.MonkeyPatch, tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    clean_env.setenv("MFSR_CATALOG", str(tmp_path / "absent.jsonl"))
    with pytest.raises(SystemExit) as exc_info:
        main(["check", "sl(2)"])
    assert exc_info.value.code == 2
    assert "MFSR_CATALOG" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["tables", "verify", "--cap", "-1"],
        ["tables", "verify", "--jobs", "0"],
        ["tables", "list", "--table", "7"],
    ],
)
def test_usage_errors_exit_2(argv: list[str]) -> None:
    with pytest.raises(SystemExit) as exc_info:
        main(argv)
    assert exc_info.value.code == 2


def test_version(capsys: pytest.CaptureFixture[str]) -> None:
    with pytest.raises(SystemExit) as exc_info:
        main(["--version"])
    assert exc_info.value.code == 0
    assert capsys.readouterr().out.startswith("mfsr ")


def test_internal_error_exit_code(capsys: pytest.CaptureFixture[str]) -> None:
    with patch("mfsr.cli.check_report", side_effect=ReductionError("Φ lost its symmetry")):
        assert main(["check", "sl(2)"]) == EXIT_INTERNAL
    assert "internal error: Φ lost its symmetry" in capsys.readouterr().err


def test_serve_runs_mcp_server() -> None:
    mock_mcp = MagicMock()
    with patch("mfsr.mcp.server.mcp", mock_mcp):
        with patch("mfsr.cli.__version__", "9.9.9-test"):
            with patch("mfsr.cli.sys.stderr") as mock_stderr:
                assert main(["serve"]) == EXIT_OK
    mock_mcp.run.assert_called_once_with(transport="stdio")
    mock_stderr.write.assert_called_once_with("mfsr MCP v9.9.9-test\n")


def test_console_script(mfsr_executable: str) -> None:
    result = subprocess.run(
        [mfsr_executable, "check", "T(sl(2))", "--format", "json", "--no-timing"],
        capture_output=True,
        text=True,
        timeout=60,
        check=False,
    )
    assert result.returncode == 0, result.stderr
    assert json.loads(result.stdout)["verdict"]["rank"] == 1
