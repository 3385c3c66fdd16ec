"""Hopf algebra tools - U(n) of the dual group: dimensions, products, coproducts, checks"""

from typing import Optional

from ..errors import ValidationError
from ..expressions import parse_element
from ..report import coproduct_payload, dims_payload, product_payload
from ..uea import (
    build_chevalley,
    check_associativity,
    check_hopf_axiom,
    check_jacobi,
    default_bound,
)
from .common import error_json, load_datum, to_json


def register_tools(mcp, settings):
    """Register all U(n) tools with the MCP server"""

    def capped(length: int) -> int:
        if length < 1 or length > settings.max_length:
            raise ValidationError(f"length must be between 1 and {settings.max_length}")
        return length

    @mcp.tool()
    async def get_weight_space_dims(family: str, rank: int, max_length: int = 4) -> str:
        """
        Get dim U(n)[theta] for every positive theta up to a length.

        Each row also carries the Kostant count of theta (always equal to dim) and the
        dimension of the degree-theta part of U(n) tensor U(n).

        Args:
            family: Group family of G (U(n) is built for the Langlands dual)
            rank: Rank of the group
            max_length: Largest theta length to list (default: 4)

        Returns:
            JSON with rows of theta, dim, kostant and product_dim
        """
        try:
            d = load_datum(family, rank)
            result = dims_payload(d, build_chevalley(d), capped(max_length))
        except ValueError as e:
            return error_json(e)
        return to_json(result)

    @mcp.tool()
    async def multiply_pbw(family: str, rank: int, lhs: str, rhs: str) -> str:
        """
        Multiply two elements of U(n) and straighten the result into the PBW basis.

        Expressions use e<i> for simple generators, E<j> for the j-th positive root vector
        (canonical order, 1-based), * for products, + and - for sums and integer scalars,
        e.g. "e2*e1 - 2*E3".

        Args:
            family: Group family of G
            rank: Rank of the group
            lhs: Left factor expression
            rhs: Right factor expression

        Returns:
            JSON with lhs, rhs and product term maps (monomial -> coefficient)
        """
        try:
            d = load_datum(family, rank)
            cb = build_chevalley(d)
            result = product_payload(cb, parse_element(cb, lhs), parse_element(cb, rhs))
        except ValueError as e:
            return error_json(e)
        return to_json({"dual_type": cb.label, **result})

    @mcp.tool()
    async def comultiply_pbw(family: str, rank: int, expr: str) -> str:
        """
        Apply the coproduct of U(n), where every root vector is primitive.

        Args:
            family: Group family of G
            rank: Rank of the group
            expr: Element expression, e.g. "E1*E1 + 2*e2"

        Returns:
            JSON with the element and its coproduct as "left ⊗ right" -> coefficient
        """
        try:
            d = load_datum(family, rank)
            cb = build_chevalley(d)
            result = coproduct_payload(cb, parse_element(cb, expr))
        except ValueError as e:
            return error_json(e)
        return to_json({"dual_type": cb.label, **result})

    @mcp.tool()
    async def run_hopf_checks(family: str, rank: int, bound: Optional[int] = None) -> str:
        """
        Check the Jacobi identity, associativity and the Hopf axioms of U(n).

        The Hopf check covers Delta(uv) = Delta(u)Delta(v), the counit, coassociativity
        on elements of length at most 3, and that degree 0 is one-dimensional.

        Args:
            family: Group family of G
            rank: Rank of the group
            bound: Total degree length bound (default: 6 for rank <= 2, 4 for rank 3, else 3)

        Returns:
            JSON with passed and one entry per check (checked cases, counterexample)
        """
        try:
            d = load_datum(family, rank)
            cb = build_chevalley(d)
            bound = default_bound(cb) if bound is None else capped(bound)
            checks = [check_jacobi(cb), check_associativity(cb, bound), check_hopf_axiom(cb, bound)]
        except ValueError as e:
            return error_json(e)
        return to_json(
            {
                "dual_type": cb.label,
                "bound": bound,
                "passed": all(c.passed for c in checks),
                "checks": [c.to_json() for c in checks],
            }
        )
