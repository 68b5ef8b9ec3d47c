"""MCP server setup using FastMCP."""

from __future__ import annotations

import logging
from typing import Annotated

import anyio
from mcp import types
from mcp.server.fastmcp import Context, FastMCP
from pydantic import Field

from mfsr import __version__, config
from mfsr.mcp.logging_utils import _log_tool_errors, configure_logging
from mfsr.mcp.tools import check, list_tables, verify_table

logger = logging.getLogger(__name__)

mcp = FastMCP("mfsr", json_response=True)


def _attach_server_metadata(result: dict) -> dict:
    """Attach stable server metadata to tool results."""
    result["_server_version"] = __version__
    return result


@mcp._mcp_server.set_logging_level()
async def _handle_set_logging_level(level: types.LoggingLevel) -> None:
    """Handle MCP ``logging/setLevel`` to declare logging capability."""
    _ = level


__all__ = ["configure_logging", "mcp"]


@mcp.tool()
@_log_tool_errors
async def check_tool(
    expression: Annotated[
        str,
        Field(description="Representation in the mfsr DSL, e.g. 'sp(4)*so(12) ++ spin(12)'."),
    ],
    ctx: Context | None = None,
) -> dict:
    """Decide whether a symplectic representation is multiplicity free.

    Returns the verdict (rank, generic isotropy, toroidal half of the weights or a
    dependency witness), the saturation check and any warnings.

    Args:
        expression: Representation in the mfsr DSL.
        ctx: MCP request context (injected by the server; unused).
    """
    result = await anyio.to_thread.run_sync(lambda: check(expression))
    return _attach_server_metadata(result)


@mcp.tool()
@_log_tool_errors
async def trace_tool(
    expression: Annotated[str, Field(description="Representation in the mfsr DSL.")],
    ctx: Context | None = None,
) -> dict:
    """Like check_tool, with every reduction step (chosen weight, removed sets, sizes)."""
    result = await anyio.to_thread.run_sync(lambda: check(expression, command="trace"))
    return _attach_server_metadata(result)


@mcp.tool()
@_log_tool_errors
async def verify_table_tool(
    table: Annotated[
        str,
        Field(description="Table to replay: '1', '2', '11', '12', '22' or 'S'. Empty replays everything."),
    ] = "",
    cap: Annotated[
        int | None,
        Field(description="Largest parameter value to instantiate. Defaults to MFSR_PARAM_CAP."),
    ] = None,
    ctx: Context | None = None,
) -> dict:
    """Replay catalog rows through the reduction and compare rank and isotropy.

    Args:
        table: Table id; empty for the whole catalog plus fixtures and gluing checks.
        cap: Parameter cap; None uses MFSR_PARAM_CAP.
        ctx: MCP request context (injected by the server; unused).
    """
    bound = config.get_param_cap() if cap is None else cap
    result = await anyio.to_thread.run_sync(lambda: verify_table(table.strip() or None, bound))
    return _attach_server_metadata(result)


@mcp.tool()
@_log_tool_errors
async def list_tables_tool(
    table: Annotated[str, Field(description="Optional table id to filter by.")] = "",
    ctx: Context | None = None,
) -> dict:
    """List catalog entries with their templates, constraints, rank, isotropy, W_V and i."""
    result = await anyio.to_thread.run_sync(lambda: list_tables(table.strip() or None))
    return _attach_server_metadata(result)
