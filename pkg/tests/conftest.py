"""Pytest fixtures and configuration for mfsr tests."""

from __future__ import annotations

import json
import shutil
from collections.abc import Callable, Iterable
from pathlib import Path

import pytest

from mfsr.catalog import TableEntry, load_catalog
from mfsr.config import DEFAULT_CATALOG_PATH

_ENV_VARS = (
    "MFSR_CATALOG",
    "MFSR_PARAM_CAP",
    "MFSR_JOBS",
    "MFSR_CHOICE_SEEDS",
    "MFSR_REQUIRE_SATURATED",
    "MFSR_MAX_TRACE_STEPS",
    "MFSR_LOG_LEVEL",
)


@pytest.fixture
def repo_root() -> Path:
    """Repository root (parent of tests/)."""
    return Path(__file__).resolve().parents[1]


@pytest.fixture(autouse=True)
def clean_env(monkeypatch: pytest.MonkeyPatch) -> pytest.MonkeyPatch:
    """Start every test without MFSR_* overrides from the developer's shell."""
    for name in _ENV_VARS:
        monkeypatch.delenv(name, raising=False)
    return monkeypatch


@pytest.fixture(scope="session")
def catalog() -> tuple[TableEntry, ...]:
    """The embedded catalog, loaded once."""
    return load_catalog(DEFAULT_CATALOG_PATH)


@pytest.fixture
def write_catalog(tmp_path: Path) -> Callable[..., Path]:
    """Write a JSON-lines catalog file; ``header=""`` omits the header line."""

    def _write(rows: Iterable[dict | str], header: dict | str | None = None) -> Path:
        path = tmp_path / "catalog.jsonl"
        lines = []
        if header is None:
            header = {"version": 1}
        if header != "":
            lines.append(header if isinstance(header, str) else json.dumps(header))
        lines.extend(r if isinstance(r, str) else json.dumps(r) for r in rows)
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path

    return _write


@pytest.fixture
def mfsr_executable() -> str:
    """Path of the installed ``mfsr`` console script; skips when the package is not installed."""
    path = shutil.which("mfsr")
    if path is None:
        pytest.skip("mfsr console script not on PATH (pip install -e .)")
    return path


def pytest_collection_modifyitems(
    config: pytest.Config, items: list[pytest.Item]
) -> None:
    """Tag tests that use ``mfsr_executable`` so ``-m 'not integration'`` excludes them."""
    integration = pytest.mark.integration
    for item in items:
        fixturenames = getattr(item, "fixturenames", ()) or ()
        if "mfsr_executable" in fixturenames:
            item.add_marker(integration)
