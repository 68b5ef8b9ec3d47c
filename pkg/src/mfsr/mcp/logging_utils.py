"""Logging configuration and MCP tool notification helpers."""

from __future__ import annotations

import functools
import inspect
import logging
import sys
import time
from typing import Any, Literal, cast

from mcp.server.fastmcp import Context
from mcp.server.fastmcp.utilities.context_injection import find_context_parameter

from mfsr import config

logger = logging.getLogger(__name__)

_LOG_FORMAT = "%(levelname)s %(name)s %(message)s"


def _configure_mfsr_logger() -> None:
    """Send ``mfsr`` records to stderr at MFSR_LOG_LEVEL; stdout carries reports only."""
    root = logging.getLogger("mfsr")
    root.handlers.clear()
    root.propagate = False
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(_LOG_FORMAT))
    root.addHandler(handler)
    root.setLevel(config.get_log_level())


def _suppress_dependency_loggers() -> None:
    for name in ("mcp", "sympy", "httpx", "httpcore"):
        logging.getLogger(name).setLevel(logging.WARNING)


def configure_logging() -> None:
    """Configure mfsr logging and dependency suppression."""
    _configure_mfsr_logger()
    _suppress_dependency_loggers()


def _build_tool_summary(name: str, kwargs: dict[str, Any]) -> str:
    """Short key=value summary of tool arguments for start notifications."""
    if name in ("check_tool", "trace_tool"):
        expr = (kwargs.get("expression") or "").strip()
        preview = expr[:60] + "..." if len(expr) > 60 else expr
        return f"expression={preview!r}" if expr else "expression=<empty>"
    if name == "verify_table_tool":
        return f"table={kwargs.get('table', '')!r} cap={kwargs.get('cap')}"
    if name == "list_tables_tool":
        return f"table={kwargs.get('table', '')!r}"
    return ""


_ClientLogLevel = Literal["debug", "info", "warning", "error"]
_VALID_CLIENT_LOG_LEVELS: frozenset[str] = frozenset({"debug", "info", "warning", "error"})


async def _emit_client_log(ctx: Context | None, message: str, level: str = "info") -> None:
    """Best-effort tool log emission to MCP clients via notifications/message."""
    if ctx is None:
        return
    try:
        effective_level = cast(
            _ClientLogLevel,
            level if level in _VALID_CLIENT_LOG_LEVELS else "info",
        )
        maybe_awaitable = ctx.log(effective_level, message, logger_name="mfsr")
        if inspect.isawaitable(maybe_awaitable):
            await maybe_awaitable
    except Exception:
        logger.debug("client_log_emit_failed level=%s message=%s", level, message, exc_info=True)


def _resolve_context_from_kwargs(fn: Any, kwargs: dict[str, Any]) -> Context | None:
    """Resolve Context from kwargs using annotation-based parameter lookup (FastMCP style)."""
    param_name = find_context_parameter(fn)
    if param_name is None:
        return None
    val = kwargs.get(param_name)
    return val if isinstance(val, Context) else None


def _log_tool_errors(fn):
    """Log tool entry, success, and errors to MCP clients via Context notifications.

    Preserves the wrapped function's signature so FastMCP schema introspection sees all parameters.
    """

    @functools.wraps(fn)
    async def wrapper(*args, **kwargs):
        summary = _build_tool_summary(fn.__name__, kwargs)
        ctx = _resolve_context_from_kwargs(fn, kwargs)
        await _emit_client_log(ctx, f"tool={fn.__name__} status=start {summary}".strip())
        start = time.perf_counter()
        try:
            result = await fn(*args, **kwargs)
        except Exception as e:
            elapsed_s = time.perf_counter() - start
            await _emit_client_log(
                ctx,
                f"tool={fn.__name__} status=error duration_s={elapsed_s:.2f} error={type(e).__name__}",
                level="error",
            )
            logger.info("tool=%s status=error duration_s=%.3f", fn.__name__, elapsed_s)
            raise
        elapsed_s = time.perf_counter() - start
        await _emit_client_log(ctx, f"tool={fn.__name__} status=ok duration_s={elapsed_s:.2f}")
        logger.info("tool=%s status=ok duration_s=%.3f", fn.__name__, elapsed_s)
        return result

    wrapper.__signature__ = inspect.signature(fn)
    wrapper.__annotations__ = fn.__annotations__
    return wrapper
