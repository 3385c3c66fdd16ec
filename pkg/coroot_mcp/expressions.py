"""Tiny grammar for elements of U(n): ``2*e1*e2 - E3 + 1``.

``e<i>`` is the simple-root generator i and ``E<j>`` the j-th positive root vector in
canonical order, both 1-based. ``*`` multiplies left to right; integers are scalars.
"""

from functools import lru_cache

import pyparsing as pp

from .errors import ExpressionError
from .uea import ChevalleyBasis, PBWElement, multiply, root_vector, simple_generator, unit


@lru_cache(maxsize=None)
def _grammar() -> pp.ParserElement:
    minus = pp.Literal("-") | pp.Literal(chr(0x2212))
    minus.set_parse_action(lambda t: ["-"])
    sign = pp.Literal("+") | minus
    integer = pp.Word(pp.nums).set_parse_action(lambda t: [int(t[0])])
    generator = pp.Regex(r"[eE][0-9]+")
    factor = integer | generator
    term = pp.Group(pp.Optional(sign, "+") + pp.Group(factor + pp.ZeroOrMore(pp.Suppress("*") + factor)))
    following = pp.Group(sign + pp.Group(factor + pp.ZeroOrMore(pp.Suppress("*") + factor)))
    return term + pp.ZeroOrMore(following)


def _factor(cb: ChevalleyBasis, token) -> PBWElement:
    if isinstance(token, int):
        return unit(cb).scaled(token)
    index = int(token[1:]) - 1
    if token[0] == "e":
        return simple_generator(cb, index)
    return root_vector(cb, index)


def parse_element(cb: ChevalleyBasis, text: str) -> PBWElement:
    """parse_element(cb, "e2*e1") -> e_{alpha_1} e_{alpha_2} - N e_{alpha_1 + alpha_2}."""
    try:
        parsed = _grammar().parse_string(text, parse_all=True)
    except pp.ParseException as exc:
        raise ExpressionError(f"cannot parse {text!r}: {exc}") from None
    total = PBWElement.build(cb.label, [])
    for sign, factors in parsed:
        value = unit(cb)
        for token in factors:
            value = multiply(cb, value, _factor(cb, token))
        total = total - value if sign == "-" else total + value
    return total
