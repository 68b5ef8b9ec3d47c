"""MCP tool implementations that wrap the mfsr commands.

Each returns the same JSON-ready report dict the CLI prints with ``--format json``.
"""

from __future__ import annotations

import logging
from typing import Any, Literal

from mfsr.catalog import entries_for_table, verify_all
from mfsr.dsl import DslError, rep_from_text
from mfsr.reports import ListReport, check_report, entry_info, report_dict
from mfsr.repspec import SymplecticRep

logger = logging.getLogger(__name__)


def _parse(expression: str) -> tuple[str, SymplecticRep]:
    """Build the representation; DSL errors are re-raised with the caret rendering."""
    text = expression.strip()
    try:
        return text, rep_from_text(text)
    except DslError as e:
        raise ValueError(e.render(text)) from e


def check(expression: str, *, command: Literal["check", "trace"] = "check") -> dict[str, Any]:
    """Verdict, saturation and warnings for one DSL expression.

    Raises:
        ValueError: bad DSL, or a module without a symplectic form.
        ReductionError: an internal invariant of the reduction failed.
    """
    text, rep = _parse(expression)
    return report_dict(check_report(text, rep, command=command))


def verify_table(table: str | None, cap: int) -> dict[str, Any]:
    """Replay one table (or all of them when ``table`` is None) up to parameter ``cap``."""
    return report_dict(verify_all(cap, table=table))


def list_tables(table: str | None = None) -> dict[str, Any]:
    """Catalog ids with their printed columns, W_V and i strings."""
    entries = [entry_info(e) for e in entries_for_table(table)]
    return report_dict(ListReport(table=table, entries=entries))
