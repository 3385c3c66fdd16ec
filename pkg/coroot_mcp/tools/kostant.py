"""Kostant partition tools"""

from typing import List, Optional

from ..errors import ValidationError
from ..report import kostant_payload
from ..root_datum import as_coweight
from .common import error_json, load_datum, to_json


def register_tools(mcp, settings):
    """Register all Kostant-partition tools with the MCP server"""

    @mcp.tool()
    async def list_kostant_partitions(
        family: str, rank: int, theta: List[int], max_parts: Optional[int] = None
    ) -> str:
        """
        List the Kostant partitions of theta into positive coroots.

        Args:
            family: Group family, one of A, B, C, D, E, F, G
            rank: Rank of the group
            theta: Positive coweight in the simple-coroot basis, e.g. [1, 1]
            max_parts: Optional bound on the partition length (sum of multiplicities)

        Returns:
            JSON with count, generating_count and partitions (coroot, 1-based index, mult);
            with max_parts, count stays the full total and listed counts the partitions shown
        """
        try:
            d = load_datum(family, rank)
            theta = as_coweight(theta, d.rank, positive=True)
            settings.check_length(theta)
            if max_parts is not None and max_parts < 1:
                raise ValidationError(f"max_parts must be positive, got {max_parts}")
            result = kostant_payload(d, theta, max_parts)
        except ValueError as e:
            return error_json(e)
        return to_json(result)
