"""Report models, builders and renderers shared by the CLI and the MCP tools."""

from mfsr.reports.models import (
    CheckReport,
    ComponentModel,
    DecomposeReport,
    EntryInfo,
    EntryReport,
    FixtureReport,
    GlueCase,
    InstanceReport,
    ListReport,
    Mismatch,
    Report,
    SaturateReport,
    ShowReport,
    StepModel,
    TableSummary,
    Timing,
    VerdictModel,
    VerifyReport,
)
from mfsr.reports.build import (
    check_report,
    component_models,
    decompose_report,
    dump_json,
    entry_info,
    rep_warnings,
    report_dict,
    saturate_report,
    verdict_model,
)
from mfsr.reports.render import render_text

__all__ = [
    "CheckReport",
    "ComponentModel",
    "DecomposeReport",
    "EntryInfo",
    "EntryReport",
    "FixtureReport",
    "GlueCase",
    "InstanceReport",
    "ListReport",
    "Mismatch",
    "Report",
    "SaturateReport",
    "ShowReport",
    "StepModel",
    "TableSummary",
    "Timing",
    "VerdictModel",
    "VerifyReport",
    "check_report",
    "component_models",
    "decompose_report",
    "dump_json",
    "entry_info",
    "render_text",
    "rep_warnings",
    "report_dict",
    "saturate_report",
    "verdict_model",
]
