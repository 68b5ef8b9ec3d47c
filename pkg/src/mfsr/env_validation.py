"""Startup validation for environment overrides (catalog path)."""

from __future__ import annotations

import json
import sys

from mfsr.config import CATALOG_FORMAT_VERSION, catalog_overridden, get_catalog_path

# Exit code shared with CLI usage errors.
EXIT_CONFIG_ERROR = 2

_CATALOG_HINT = (
    "Unset MFSR_CATALOG to use the embedded catalog, or point it at a JSON-lines "
    'file whose first line is a header such as {"version": 1}.'
)


def _fail(message: str) -> None:
    """Print error to stderr, then exit before any command runs."""
    print(f"{message} {_CATALOG_HINT}", file=sys.stderr)
    sys.exit(EXIT_CONFIG_ERROR)


def require_valid_catalog() -> None:
    """Verify that an MFSR_CATALOG override names a readable, versioned catalog file.

    The embedded catalog is trusted and not re-checked here.
    """
    if not catalog_overridden():
        return
    path = get_catalog_path()
    if not path.is_file():
        _fail(f"MFSR_CATALOG={path} does not exist or is not a file.")
    try:
        with path.open(encoding="utf-8") as fh:
            first = fh.readline()
    except OSError as e:
        _fail(f"MFSR_CATALOG={path} is not readable ({e}).")
        return
    try:
        header = json.loads(first)
    except json.JSONDecodeError:
        _fail(f"MFSR_CATALOG={path}: first line is not JSON.")
        return
    if not isinstance(header, dict) or "version" not in header:
        _fail(f"MFSR_CATALOG={path}: first line must be a version header.")
        return
    if header["version"] != CATALOG_FORMAT_VERSION:
        _fail(
            f"MFSR_CATALOG={path}: unsupported catalog version {header['version']!r} "
            f"(expected {CATALOG_FORMAT_VERSION})."
        )


def require_valid_environment() -> None:
    """Run every startup check. Exit with code 2 on the first failure."""
    require_valid_catalog()
