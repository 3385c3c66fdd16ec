"""Diagonal tools - S1, S2 and the sl2-module on the small diagonal"""

from typing import List, Optional

from ..errors import ValidationError
from ..report import diag_payload
from ..root_datum import as_coweight, highest_coroot
from .common import error_json, load_datum, to_json


def register_tools(mcp, settings):
    """Register all diagonal-computation tools with the MCP server"""

    @mcp.tool()
    async def get_diagonal_classes(
        family: str, rank: int, theta: Optional[List[int]] = None, all_coroots: bool = False
    ) -> str:
        """
        Compute S1, S2 and their difference on the small diagonal of X^theta.

        Classes are polynomials in q where q^m stands for the constant sheaf twisted by (m);
        columns are labeled Qℓ(0), Qℓ(1). For a coroot, S1 = 1 - q, S2 = 2 and the
        difference is the standard sl2-module; otherwise both vanish.

        Args:
            family: Group family, one of A, B, C, D, E, F, G
            rank: Rank of the group
            theta: Non-zero positive coweight, e.g. [1, 1]; omit when all_coroots is true
            all_coroots: Sweep every positive coroot instead of a single theta

        Returns:
            JSON with S1, S2, H_diag, oscillator_diag and sl2 (one row per coroot when sweeping)
        """
        try:
            d = load_datum(family, rank)
            if all_coroots:
                # the highest coroot is the longest one swept
                settings.check_length(highest_coroot(d))
                result = {
                    "type": d.label,
                    "rows": [diag_payload(d, c) for c in d.positive_coroots],
                }
            else:
                if theta is None:
                    raise ValidationError("give theta or set all_coroots")
                theta = as_coweight(theta, d.rank, positive=True)
                settings.check_length(theta)
                result = {"type": d.label, **diag_payload(d, theta)}
        except ValueError as e:
            return error_json(e)
        return to_json(result)
