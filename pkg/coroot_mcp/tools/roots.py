"""Root datum tools - positive roots, coroots and the Langlands dual"""

from ..report import roots_payload
from ..root_datum import highest_coroot, langlands_dual
from .common import error_json, load_datum, to_json


def register_tools(mcp, settings):
    """Register all root-datum tools with the MCP server"""

    @mcp.tool()
    async def get_root_datum(family: str, rank: int) -> str:
        """
        Get the Cartan matrix and positive coroots of a simple simply-connected group.

        Coroots are written in the simple-coroot basis and listed by height, so the simple
        coroots come first (in Bourbaki node order) and the highest coroot last.

        Args:
            family: Group family, one of A, B, C, D, E, F, G
            rank: Rank of the group (e.g. 2 for G2)

        Returns:
            JSON with type, dual_type, cartan and a coroots table (index, coroot, height, root)
        """
        try:
            d = load_datum(family, rank)
            result = roots_payload(d)
            result["highest_coroot"] = list(highest_coroot(d))
        except ValueError as e:
            return error_json(e)
        return to_json(result)

    @mcp.tool()
    async def get_langlands_dual(family: str, rank: int) -> str:
        """
        Get the root datum of the Langlands dual group.

        The dual transposes the Cartan matrix and keeps node numbering, so B and C swap
        and the coroots of the group become the roots of its dual.

        Args:
            family: Group family, one of A, B, C, D, E, F, G
            rank: Rank of the group

        Returns:
            JSON with the same shape as get_root_datum, for the dual group
        """
        try:
            result = roots_payload(langlands_dual(load_datum(family, rank)))
        except ValueError as e:
            return error_json(e)
        return to_json(result)
