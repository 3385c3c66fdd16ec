"""Verification tool - the full identity sweep behind `coroot verify`"""

from typing import Optional

from ..errors import ValidationError
from ..report import checks_payload
from ..root_datum import highest_coroot
from ..uea import build_chevalley, default_bound
from ..verify import run_verification as run_checks
from .common import error_json, load_datum, to_json


def register_tools(mcp, settings):
    """Register the verification tool with the MCP server"""

    @mcp.tool()
    async def run_verification(family: str, rank: int, max_length: Optional[int] = None) -> str:
        """
        Run every identity check for a group and report each one.

        Covers S1/S2 on every positive coroot, their vanishing off the coroots, the
        Kostant/PBW dimension identity, purity of oscillator stalks and the Hopf suite.

        Args:
            family: Group family, one of A, B, C, D, E, F, G
            rank: Rank of the group
            max_length: Sweep bound on theta length (default depends on the rank)

        Returns:
            JSON with passed, total, failed and the list of checks
        """
        try:
            if max_length is not None and not 1 <= max_length <= settings.max_length:
                raise ValidationError(f"max_length must be between 1 and {settings.max_length}")
            d = load_datum(family, rank)
            settings.check_length(highest_coroot(d))
            if max_length is None and default_bound(build_chevalley(d)) > settings.max_length:
                raise ValidationError(
                    f"the default sweep bound for {d.label} exceeds the server cap "
                    f"{settings.max_length}; pass max_length"
                )
            result = checks_payload(d, run_checks(d, max_length))
        except ValueError as e:
            return error_json(e)
        return to_json(result)
