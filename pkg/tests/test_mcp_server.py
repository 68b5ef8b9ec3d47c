"""Tests for the MCP tools, their server wrappers and client log notifications."""

from __future__ import annotations

import asyncio
import logging
from unittest.mock import MagicMock, patch

import pytest
from mcp.server.fastmcp import Context

from mfsr.criterion import ReductionError
from mfsr.mcp import logging_utils as mcp_logging
from mfsr.mcp import server as mcp_server
from mfsr.mcp import tools as mcp_tools


def test_check_returns_report_dict() -> None:
    result = mcp_tools.check("sp(4)*so(12) ++ spin(12)")
    assert result["command"] == "check"
    assert result["dimension"] == 80
    assert result["verdict"]["multiplicity_free"] is True
    assert result["verdict"]["rank"] == 7


def test_check_dsl_error_carries_caret() -> None:
    with pytest.raises(ValueError, match=r"\^\^\^\^\^"):
        mcp_tools.check("sp(4) ++ so(4)")


def test_trace_includes_steps() -> None:
    result = mcp_tools.check("T(sl(2))", command="trace")
    assert result["verdict"]["trace"][0]["removed"] == [[-1, 1]]


def test_list_tables_filters() -> None:
    result = mcp_tools.list_tables("S")
    assert result["command"] == "tables list"
    assert len(result["entries"]) == 17
    assert all(e["underlined"] for e in result["entries"])


def test_verify_table_forwards_arguments() -> None:
    with patch("mfsr.mcp.tools.verify_all") as verify_all:
        verify_all.return_value.model_dump.return_value = {"command": "tables verify", "passed": True}
        result = mcp_tools.verify_table("12", 3)
    verify_all.assert_called_once_with(3, table="12")
    assert result["passed"] is True


def test_check_tool_attaches_version_and_logs_to_client() -> None:
    ctx = MagicMock(spec=Context)
    result = asyncio.run(mcp_server.check_tool(expression="sl(2)", ctx=ctx))
    assert result["_server_version"]
    assert result["verdict"]["isotropy"] == "sp1"
    messages = [c.args[1] for c in ctx.log.call_args_list]
    assert messages[0] == "tool=check_tool status=start expression='sl(2)'"
    assert messages[-1].startswith("tool=check_tool status=ok")


def test_tool_error_is_reported_then_raised() -> None:
    ctx = MagicMock(spec=Context)
    with pytest.raises(ValueError):
        asyncio.run(mcp_server.trace_tool(expression="so(4)", ctx=ctx))
    last = ctx.log.call_args_list[-1]
    assert last.args[0] == "error"
    assert "error=ValueError" in last.args[1]


def test_verify_table_tool_uses_configured_cap(clean_env: pytest.MonkeyPatch) -> None:
    clean_env.setenv("MFSR_PARAM_CAP", "2")
    with patch("mfsr.mcp.server.verify_table", return_value={"passed": True}) as verify_table:
        result = asyncio.run(mcp_server.verify_table_tool(table=" 22 "))
    verify_table.assert_called_once_with("22", 2)
    assert result["passed"] is True


def test_list_tables_tool_empty_table_means_all() -> None:
    result = asyncio.run(mcp_server.list_tables_tool())
    assert len(result["entries"]) == 90


def test_tool_summary() -> None:
    long_expr = "sl(2) ++ " * 10
    summary = mcp_logging._build_tool_summary("check_tool", {"expression": long_expr})
    assert summary.endswith("...'")
    assert mcp_logging._build_tool_summary("trace_tool", {"expression": " "}) == "expression=<empty>"
    assert mcp_logging._build_tool_summary("verify_table_tool", {"table": "S", "cap": 3}) == "table='S' cap=3"
    assert mcp_logging._build_tool_summary("other", {}) == ""


def test_emit_client_log_swallows_failures() -> None:
    ctx = MagicMock()
    ctx.log.side_effect = RuntimeError("closed")
    asyncio.run(mcp_logging._emit_client_log(ctx, "tool=x status=ok", level="verbose"))
    ctx.log.assert_called_once_with("info", "tool=x status=ok", logger_name="mfsr")


def test_reduction_error_propagates_from_tool() -> None:
    with patch("mfsr.mcp.server.check", side_effect=ReductionError("broken")):
        with pytest.raises(ReductionError):
            asyncio.run(mcp_server.check_tool(expression="sl(2)"))


def test_configure_logging_routes_mfsr_records_to_stderr(clean_env: pytest.MonkeyPatch) -> None:
    clean_env.setenv("MFSR_LOG_LEVEL", "DEBUG")
    mcp_logging.configure_logging()
    root = logging.getLogger("mfsr")
    assert root.level == logging.DEBUG
    assert not root.propagate
    assert len(root.handlers) == 1
