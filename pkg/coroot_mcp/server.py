#!/usr/bin/env python3
"""
Coroot MCP Server - root data, Kostant partitions, oscillator stalks, the diagonal
S1/S2 computation and the Hopf algebra U(n) as MCP tools over stdio.
"""

import argparse
import logging
import sys

from mcp.server.fastmcp import FastMCP

from .errors import ValidationError
from .settings import LOG_LEVELS, ServerSettings, resolve_settings
from .tools import diagonal, hopf, kostant, oscillators, roots, verification

# Shown in initialize.instructions for connected clients.
MCP_SERVER_INSTRUCTIONS = (
    "This server computes exact combinatorics of simple groups. Tools return JSON strings; "
    "parse them before reasoning. A group is given by family (A-G) and rank; coweights "
    "theta are lists of integers in the simple-coroot basis, e.g. [1, 1]. Coroot and PBW "
    "indices in outputs are 1-based in canonical height order. Happy paths: "
    "(1) get_root_datum to see positive coroots, then list_kostant_partitions. "
    "(2) get_plo_stalk or get_oscillator_stalk for stalk characters in q (q = Tate twist (1)), "
    "decompose_sl2_character to split a character into sl2 strings. "
    "(3) get_diagonal_classes for S1, S2 and the sl2-module on the small diagonal. "
    "(4) get_weight_space_dims, multiply_pbw and comultiply_pbw for U(n) of the dual group, "
    "where 'e1' is a simple generator and 'E3' the third positive root vector. "
    "(5) run_hopf_checks or run_verification to confirm identities. "
    "Errors appear as JSON with an error key; long theta is rejected above the server cap."
)

mcp = FastMCP("Coroot-MCP", instructions=MCP_SERVER_INSTRUCTIONS)

settings = ServerSettings()


def register_all_tools():
    """Register all tool modules with the MCP server"""
    roots.register_tools(mcp, settings)
    kostant.register_tools(mcp, settings)
    oscillators.register_tools(mcp, settings)
    diagonal.register_tools(mcp, settings)
    hopf.register_tools(mcp, settings)
    verification.register_tools(mcp, settings)


def main():
    """Main entry point for the Coroot MCP server"""
    global settings

    parser = argparse.ArgumentParser(
        description="Coroot MCP Server - exact coroot combinatorics over MCP"
    )
    parser.add_argument(
        "--max-length",
        type=int,
        help="Largest theta length accepted by tools (default: $COROOT_MCP_MAX_LENGTH or 8)",
    )
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=LOG_LEVELS,
        help="Log level on stderr (default: $COROOT_MCP_LOG_LEVEL or WARNING)",
    )
    args = parser.parse_args()

    try:
        settings = resolve_settings(args.max_length, args.log_level)
    except ValidationError as exc:
        parser.error(str(exc))

    # stdout belongs to the stdio transport
    logging.basicConfig(level=settings.log_level, stream=sys.stderr)

    register_all_tools()

    mcp.run(transport="stdio")


if __name__ == "__main__":
    main()
