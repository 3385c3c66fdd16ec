"""Laurent polynomials in a Tate-twist variable q with half-integer exponents.

Exponents are stored as integer counts of half-steps, so ``q**(1/2)`` is the key ``1``
and ``q`` is the key ``2``. The same type serves as an sl2/Weil character (non-negative,
palindromic) and as a signed Grothendieck-group coefficient.
"""

from fractions import Fraction
from typing import Dict, Iterator, Mapping, Tuple, Union

import sympy

Q = sympy.Symbol("q")

Scalar = Union[int, "TwistPoly"]


class TwistPoly:
    """Immutable finite sum of integer multiples of q**m, m in (1/2)Z."""

    __slots__ = ("_terms",)

    def __init__(self, half_steps: Mapping[int, int] = None):
        terms: Dict[int, int] = {}
        for key, value in (half_steps or {}).items():
            if value:
                terms[int(key)] = int(value)
        self._terms = terms

    @classmethod
    def zero(cls) -> "TwistPoly":
        return cls()

    @classmethod
    def one(cls) -> "TwistPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: Union[int, Fraction], coefficient: int = 1) -> "TwistPoly":
        """coefficient * q**exponent; the exponent must be a multiple of 1/2."""
        doubled = Fraction(exponent) * 2
        if doubled.denominator != 1:
            raise ValueError(f"exponent {exponent} is not a half-integer")
        return cls({int(doubled): coefficient})

    @classmethod
    def from_exponents(cls, coefficients: Mapping[Union[int, Fraction, str], int]) -> "TwistPoly":
        """Build from {exponent: coefficient}; string exponents like "-1/2" are accepted."""
        result = cls()
        for exponent, coefficient in coefficients.items():
            result = result + cls.monomial(Fraction(exponent), coefficient)
        return result

    # -- access -----------------------------------------------------------

    def half_steps(self) -> Dict[int, int]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Fraction, int]]:
        """(exponent, coefficient) pairs in increasing exponent order."""
        for key in sorted(self._terms):
            yield Fraction(key, 2), self._terms[key]

    def coefficient(self, exponent: Union[int, Fraction]) -> int:
        doubled = Fraction(exponent) * 2
        if doubled.denominator != 1:
            return 0
        return self._terms.get(int(doubled), 0)

    def dimension(self) -> int:
        """Value at q = 1."""
        return sum(self._terms.values())

    def is_nonnegative(self) -> bool:
        return all(value > 0 for value in self._terms.values())

    def is_palindromic(self) -> bool:
        return all(self._terms.get(-key, 0) == value for key, value in self._terms.items())

    def is_character(self) -> bool:
        return self.is_nonnegative() and self.is_palindromic()

    # -- ring structure ---------------------------------------------------

    def _coerce(self, other: Scalar) -> "TwistPoly":
        if isinstance(other, TwistPoly):
            return other
        if isinstance(other, int):
            return TwistPoly({0: other})
        return NotImplemented

    def __add__(self, other: Scalar) -> "TwistPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for key, value in other._terms.items():
            terms[key] = terms.get(key, 0) + value
        return TwistPoly(terms)

    __radd__ = __add__

    def __neg__(self) -> "TwistPoly":
        return TwistPoly({key: -value for key, value in self._terms.items()})

    def __sub__(self, other: Scalar) -> "TwistPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "TwistPoly":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "TwistPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: Dict[int, int] = {}
        for k1, v1 in self._terms.items():
            for k2, v2 in other._terms.items():
                terms[k1 + k2] = terms.get(k1 + k2, 0) + v1 * v2
        return TwistPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TwistPoly":
        if exponent < 0:
            raise ValueError("negative powers are not supported")
        result = TwistPoly.one()
        for _ in range(exponent):
            result = result * self
        return result

    def twisted(self, exponent: Union[int, Fraction]) -> "TwistPoly":
        """Multiply by q**exponent."""
        return self * TwistPoly.monomial(exponent)

    def substitute_power(self, k: int) -> "TwistPoly":
        """q -> q**k."""
        return TwistPoly({key * k: value for key, value in self._terms.items()})

    def divide_exact(self, k: int) -> "TwistPoly":
        terms = {}
        for key, value in self._terms.items():
            quotient, remainder = divmod(value, k)
            if remainder:
                raise ValueError(f"coefficient {value} is not divisible by {k}")
            terms[key] = quotient
        return TwistPoly(terms)

    # -- comparison and rendering ----------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = TwistPoly({0: other})
        if not isinstance(other, TwistPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def to_expr(self) -> sympy.Expr:
        return sympy.Add(
            *(value * Q ** sympy.Rational(key, 2) for key, value in self._terms.items())
        )

    def to_json(self) -> Dict[str, int]:
        return {str(exponent): coefficient for exponent, coefficient in self.items()}

    def __str__(self) -> str:
        return str(self.to_expr())

    def __repr__(self) -> str:
        return f"TwistPoly({self})"


BigradedChar = TwistPoly
SignedTwistPoly = TwistPoly
