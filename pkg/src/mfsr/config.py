"""Configuration from environment variables."""

from __future__ import annotations

import logging
import os
from pathlib import Path

# --- Catalog (MFSR_CATALOG) ---
DEFAULT_CATALOG_PATH = Path(__file__).resolve().parent / "catalog" / "data" / "catalog.jsonl"
CATALOG_FORMAT_VERSION = 1

# --- Table verification (MFSR_PARAM_CAP, MFSR_JOBS, MFSR_CHOICE_SEEDS) ---
DEFAULT_PARAM_CAP = 8
DEFAULT_JOBS = 1
DEFAULT_CHOICE_SEEDS = 0

# --- check command ---
DEFAULT_REQUIRE_SATURATED = False
DEFAULT_MAX_TRACE_STEPS = 0  # 0 = print every step

# --- Logging (MFSR_LOG_LEVEL) ---
DEFAULT_LOG_LEVEL = "WARNING"

_TRUE_VALUES = ("1", "true", "yes", "on")
_FALSE_VALUES = ("0", "false", "no", "off")
_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _get_int(name: str, default: int, *, minimum: int) -> int:
    """Parse a non-negative integer env var; invalid or out-of-range values use the default."""
    val = os.environ.get(name)
    if val is None or not str(val).strip():
        return default
    try:
        n = int(str(val).strip())
    except ValueError:
        return default
    return n if n >= minimum else default


def _get_bool(name: str, default: bool) -> bool:
    val = os.environ.get(name)
    if val is None or not str(val).strip():
        return default
    s = str(val).strip().lower()
    if s in _TRUE_VALUES:
        return True
    if s in _FALSE_VALUES:
        return False
    return default


# --- Catalog ---
def get_catalog_path() -> Path:
    """Return the catalog path from MFSR_CATALOG, or the embedded catalog."""
    val = os.environ.get("MFSR_CATALOG")
    if val is not None and str(val).strip():
        return Path(str(val).strip()).expanduser()
    return DEFAULT_CATALOG_PATH


def catalog_overridden() -> bool:
    """Return whether MFSR_CATALOG points somewhere other than the embedded catalog."""
    val = os.environ.get("MFSR_CATALOG")
    return val is not None and bool(str(val).strip())


# --- Verification ---
def get_param_cap() -> int:
    """Return the default parameter cap for ``tables verify`` (MFSR_PARAM_CAP, >= 1)."""
    return _get_int("MFSR_PARAM_CAP", DEFAULT_PARAM_CAP, minimum=1)


def get_jobs() -> int:
    """Return the default worker count for ``tables verify`` (MFSR_JOBS, >= 1)."""
    return _get_int("MFSR_JOBS", DEFAULT_JOBS, minimum=1)


def get_choice_seeds() -> int:
    """Return how many randomized selection policies ``tables verify`` replays per instance."""
    return _get_int("MFSR_CHOICE_SEEDS", DEFAULT_CHOICE_SEEDS, minimum=0)


# --- check ---
def get_require_saturated() -> bool:
    """Return whether non-saturated input is an error by default (MFSR_REQUIRE_SATURATED)."""
    return _get_bool("MFSR_REQUIRE_SATURATED", DEFAULT_REQUIRE_SATURATED)


def get_max_trace_steps() -> int:
    """Return how many trace steps the text renderer prints (MFSR_MAX_TRACE_STEPS; 0 = all)."""
    return _get_int("MFSR_MAX_TRACE_STEPS", DEFAULT_MAX_TRACE_STEPS, minimum=0)


# --- Logging ---
def get_log_level() -> int:
    """Return the numeric level for the ``mfsr`` logger from MFSR_LOG_LEVEL."""
    val = (os.environ.get("MFSR_LOG_LEVEL") or "").strip().upper()
    if val in _LOG_LEVELS:
        return getattr(logging, val)
    return getattr(logging, DEFAULT_LOG_LEVEL)
