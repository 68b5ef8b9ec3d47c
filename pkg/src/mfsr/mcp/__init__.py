"""MCP server for mfsr: exposes check, trace and table tools via Model Context Protocol."""

from mfsr.mcp.server import mcp

__all__ = ["mcp"]
