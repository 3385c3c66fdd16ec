"""Picard-Lefschetz oscillator tools - stalk characters and sl2 decompositions"""

from typing import Dict, List

from ..errors import ValidationError
from ..lefschetz import CollisionPattern, decompose_sl2
from ..report import oscillator_payload, plo_stalk_payload
from ..root_datum import as_coweight
from ..twist import TwistPoly
from .common import error_json, load_datum, to_json


def register_tools(mcp, settings):
    """Register all oscillator tools with the MCP server"""

    @mcp.tool()
    async def get_plo_stalk(pattern: List[int]) -> str:
        """
        Get the stalk of the oscillator P_n at a divisor with the given point multiplicities.

        The character is the product of exterior powers of V = q^(1/2) + q^(-1/2), one per
        point; it vanishes as soon as some multiplicity is 3 or more.

        Args:
            pattern: Point multiplicities of the divisor, e.g. [2, 1] for 2x + y

        Returns:
            JSON with char (exponent -> coefficient), shift, twist, vanishes and sl2
        """
        try:
            blocks = CollisionPattern(tuple(pattern))
            if blocks.size > settings.max_length:
                raise ValidationError(f"pattern size exceeds the server cap {settings.max_length}")
            result = plo_stalk_payload(blocks)
        except ValueError as e:
            return error_json(e)
        return to_json(result)

    @mcp.tool()
    async def get_oscillator_stalk(family: str, rank: int, config: List[Dict]) -> str:
        """
        Get the stalk of the oscillator F_theta at a configuration of points.

        Entries sharing a point label are added together. The stalk is split by total
        Kostant part length l, which carries the normalization [l](l/2).

        Args:
            family: Group family, one of A, B, C, D, E, F, G
            rank: Rank of the group
            config: List of {"theta": [..], "point": "x"} entries

        Returns:
            JSON with char, expr, by_length characters and the sl2 decomposition (sl2,
            sl2_by_length)
        """
        try:
            d = load_datum(family, rank)
            entries = []
            for entry in config:
                if not isinstance(entry, dict) or "theta" not in entry or "point" not in entry:
                    raise ValidationError('config entries need "theta" and "point"')
                entries.append((as_coweight(entry["theta"], d.rank, positive=True), str(entry["point"])))
            settings.check_length([sum(sum(t) for t, _ in entries)])
            result = oscillator_payload(d, entries)
        except ValueError as e:
            return error_json(e)
        return to_json(result)

    @mcp.tool()
    async def decompose_sl2_character(char: Dict[str, int]) -> str:
        """
        Split a palindromic, non-negative character into sl2 weight strings.

        Exponent m of q corresponds to Cartan weight -2m.

        Args:
            char: Map from exponent (e.g. "1/2", "-1/2", "0") to multiplicity

        Returns:
            JSON map from highest weight to multiplicity, plus the dimension
        """
        try:
            decomposition = decompose_sl2(TwistPoly.from_exponents(char))
        except ValueError as e:
            return error_json(e)
        return to_json(
            {"sl2": decomposition.to_json(), "dimension": decomposition.dimension()}
        )
