"""Unit tests for config module."""

from __future__ import annotations

import logging
from pathlib import Path

import pytest

from mfsr import config


def test_defaults_without_env() -> None:
    assert config.get_catalog_path() == config.DEFAULT_CATALOG_PATH
    assert not config.catalog_overridden()
    assert config.get_param_cap() == config.DEFAULT_PARAM_CAP
    assert config.get_jobs() == 1
    assert config.get_choice_seeds() == 0
    assert config.get_require_saturated() is False
    assert config.get_max_trace_steps() == 0
    assert config.get_log_level() == logging.WARNING


def test_embedded_catalog_ships_with_the_package() -> None:
    assert config.DEFAULT_CATALOG_PATH.is_file()


def test_catalog_path_override(clean_env: pytest.MonkeyPatch) -> None:
    clean_env.setenv("MFSR_CATALOG", "  ~/tables.jsonl ")
    assert config.catalog_overridden()
    assert config.get_catalog_path() == Path("~/tables.jsonl").expanduser()


def test_blank_catalog_override_is_ignored(clean_env: pytest.MonkeyPatch) -> None:
    clean_env.setenv("MFSR_CATALOG", "   ")
    assert not config.catalog_overridden()
    assert config.get_catalog_path() == config.DEFAULT_CATALOG_PATH


@pytest.mark.parametrize(
    ("value", "expected"),
    [("5", 5), (" 12 ", 12), ("0", config.DEFAULT_PARAM_CAP), ("-3", config.DEFAULT_PARAM_CAP), ("many", config.DEFAULT_PARAM_CAP), ("", config.DEFAULT_PARAM_CAP)],
)
def test_param_cap(clean_env: pytest.MonkeyPatch, value: str, expected: int) -> None:
    clean_env.setenv("MFSR_PARAM_CAP", value)
    assert config.get_param_cap() == expected


def test_jobs_and_seeds(clean_env: pytest.MonkeyPatch) -> None:
    clean_env.setenv("MFSR_JOBS", "4")
    clean_env.setenv("MFSR_CHOICE_SEEDS", "0")
    assert config.get_jobs() == 4
    assert config.get_choice_seeds() == 0
    clean_env.setenv("MFSR_JOBS", "0")
    clean_env.setenv("MFSR_CHOICE_SEEDS", "3")
    assert config.get_jobs() == 1
    assert config.get_choice_seeds() == 3


@pytest.mark.parametrize(
    ("value", "expected"),
    [("1", True), ("TRUE", True), ("on", True), ("no", False), ("off", False), ("maybe", False)],
)
def test_require_saturated(clean_env: pytest.MonkeyPatch, value: str, expected: bool) -> None:
    clean_env.setenv("MFSR_REQUIRE_SATURATED", value)
    assert config.get_require_saturated() is expected


def test_max_trace_steps(clean_env: pytest.MonkeyPatch) -> None:
    clean_env.setenv("MFSR_MAX_TRACE_STEPS", "3")
    assert config.get_max_trace_steps() == 3


@pytest.mark.parametrize(
    ("value", "expected"),
    [("debug", logging.DEBUG), (" Info ", logging.INFO), ("ERROR", logging.ERROR), ("loud", logging.WARNING)],
)
def test_log_level(clean_env: pytest.MonkeyPatch, value: str, expected: int) -> None:
    clean_env.setenv("MFSR_LOG_LEVEL", value)
    assert config.get_log_level() == expected
