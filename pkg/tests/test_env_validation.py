"""Unit tests for env_validation module."""

from __future__ import annotations

from collections.abc import Callable
from pathlib import Path

import pytest

from mfsr.env_validation import require_valid_catalog, require_valid_environment


def test_embedded_catalog_needs_no_check() -> None:
    """Without MFSR_CATALOG nothing is read and nothing exits."""
    require_valid_environment()


def test_valid_override_passes(
    clean_env: pytest.MonkeyPatch, write_catalog: Callable[..., Path]
) -> None:
    clean_env.setenv("MFSR_CATALOG", str(write_catalog([])))
    require_valid_catalog()


def test_missing_catalog_file_exits(
    clean_env: pytest.MonkeyPatch, tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    """A path that does not exist exits with code 2 and names the variable."""
    clean_env.setenv("MFSR_CATALOG", str(tmp_path / "absent.jsonl"))
    with pytest.raises(SystemExit) as exc_info:
        require_valid_catalog()
    assert exc_info.value.code == 2
    err = capsys.readouterr().err
    assert "MFSR_CATALOG=" in err
    assert "does not exist" in err
    assert "Unset MFSR_CATALOG" in err


@pytest.mark.parametrize(
    ("header", "message"),
    [
        ("not json", "first line is not JSON"),
        ('["version", 1]', "must be a version header"),
        ('{"format": 1}', "must be a version header"),
        ('{"version": 7}', "unsupported catalog version 7"),
    ],
)
def test_bad_header_exits(
    clean_env: pytest.MonkeyPatch,
    write_catalog: Callable[..., Path],
    capsys: pytest.CaptureFixture[str],
    header: str,
    message: str,
) -> None:
    clean_env.setenv("MFSR_CATALOG", str(write_catalog([], header=header)))
    with pytest.raises(SystemExit) as exc_info:
        require_valid_environment()
    assert exc_info.value.code == 2
    assert message in capsys.readouterr().err


def test_directory_is_not_a_catalog(clean_env: pytest.MonkeyPatch, tmp_path: Path) -> None:
    clean_env.setenv("MFSR_CATALOG", str(tmp_path))
    with pytest.raises(SystemExit):
        require_valid_catalog()
