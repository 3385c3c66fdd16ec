"""Lefschetz-sl2 character calculus and Picard-Lefschetz oscillator stalks.

Convention: Cartan weight w corresponds to the twist exponent -w/2, so the Tate twist
Q(1/2), of Weil weight -1, is q**(1/2). Shifts and twists of the oscillators are kept as
separate normalization data so characters stay non-negative and palindromic.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Hashable, Iterable, List, Mapping, Sequence, Tuple

from sympy.utilities.iterables import partitions

from .errors import NotACharacterError, ValidationError
from .kostant import enumerate_kostant
from .root_datum import Coweight, RootDatum, add, as_coweight
from .twist import BigradedChar, TwistPoly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Sl2Decomposition:
    """Multiplicity of the (h+1)-dimensional irreducible, keyed by highest weight h."""

    multiplicities: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_mapping(cls, multiplicities: Mapping[int, int]) -> "Sl2Decomposition":
        return cls(tuple(sorted((h, m) for h, m in multiplicities.items() if m)))

    def as_dict(self) -> Dict[int, int]:
        return dict(self.multiplicities)

    def dimension(self) -> int:
        return sum((h + 1) * m for h, m in self.multiplicities)

    def is_standard(self) -> bool:
        return self.multiplicities == ((1, 1),)

    def to_json(self) -> dict:
        return {str(h): m for h, m in self.multiplicities}


@dataclass(frozen=True, order=True)
class CollisionPattern:
    """Point multiplicities (m_1, ..., m_k) of a divisor in X^(n), largest first."""

    blocks: Tuple[int, ...]

    def __post_init__(self):
        if any(int(m) < 1 for m in self.blocks):
            raise ValidationError(f"collision blocks must be positive, got {self.blocks}")
        object.__setattr__(self, "blocks", tuple(sorted((int(m) for m in self.blocks), reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.blocks)


@dataclass(frozen=True)
class NormalizedChar:
    """A stalk character together with the shift [shift] and twist (twist) applied to it."""

    char: BigradedChar
    shift: int
    twist: Fraction

    @property
    def sign(self) -> int:
        return -1 if self.shift % 2 else 1

    def to_json(self) -> dict:
        return {
            "char": self.char.to_json(),
            "expr": str(self.char),
            "shift": self.shift,
            "twist": str(self.twist),
        }


@dataclass(frozen=True)
class OscillatorStalk:
    """Stalk character split by total Kostant part length l; length l carries [l](l/2)."""

    by_length: Tuple[Tuple[int, BigradedChar], ...] = field(default_factory=tuple)

    @property
    def char(self) -> BigradedChar:
        total = TwistPoly.zero()
        for _, c in self.by_length:
            total = total + c
        return total

    def graded(self) -> Dict[int, BigradedChar]:
        return dict(self.by_length)

    def normalized(self) -> List[NormalizedChar]:
        return [NormalizedChar(c, l, Fraction(l, 2)) for l, c in self.by_length]

    def __mul__(self, other: "OscillatorStalk") -> "OscillatorStalk":
        product: Dict[int, BigradedChar] = {}
        for l1, c1 in self.by_length:
            for l2, c2 in other.by_length:
                product[l1 + l2] = product.get(l1 + l2, TwistPoly.zero()) + c1 * c2
        return _stalk(product)

    def to_json(self) -> dict:
        return {
            "char": self.char.to_json(),
            "expr": str(self.char),
            "by_length": {str(l): c.to_json() for l, c in self.by_length},
        }


def _stalk(graded: Mapping[int, BigradedChar]) -> OscillatorStalk:
    return OscillatorStalk(tuple(sorted((l, c) for l, c in graded.items() if c)))


def standard_char() -> BigradedChar:
    """V = Q(1/2) + Q(-1/2)."""
    return TwistPoly.from_exponents({Fraction(1, 2): 1, Fraction(-1, 2): 1})


def adams(c: BigradedChar, k: int) -> BigradedChar:
    return c.substitute_power(k)


def exterior_power_char(c: BigradedChar, m: int) -> BigradedChar:
    """Character of the m-th exterior power via Newton's identities on power sums."""
    if m < 0:
        raise ValidationError(f"exterior power degree must be non-negative, got {m}")
    if not c.is_character():
        raise NotACharacterError(f"{c} is not the character of a representation")
    elementary = [TwistPoly.one()]
    for k in range(1, m + 1):
        acc = TwistPoly.zero()
        for i in range(1, k + 1):
            term = elementary[k - i] * adams(c, i)
            acc = acc + term if i % 2 else acc - term
        elementary.append(acc.divide_exact(k))
    return elementary[m]


def plo_stalk_char(p: CollisionPattern) -> NormalizedChar:
    """Stalk of P_n = Lambda^(n)(V)[n](n/2) at a divisor with point multiplicities p."""
    v = standard_char()
    char = TwistPoly.one()
    for m in p.blocks:
        char = char * exterior_power_char(v, m)
    return NormalizedChar(char, p.size, Fraction(p.size, 2))


def collision_patterns(n: int) -> List[CollisionPattern]:
    if n < 1:
        raise ValidationError(f"pattern size must be positive, got {n}")
    found = []
    for parts in partitions(n):
        blocks = [m for m, count in parts.items() for _ in range(count)]
        found.append(CollisionPattern(tuple(blocks)))
    return sorted(found)


def _point_stalk(d: RootDatum, theta: Coweight) -> OscillatorStalk:
    v = standard_char()
    graded: Dict[int, BigradedChar] = {}
    for k in enumerate_kostant(d, theta):
        char = TwistPoly.one()
        for _, n in k.parts:
            char = char * exterior_power_char(v, n)
        l = sum(n for _, n in k.parts)
        graded[l] = graded.get(l, TwistPoly.zero()) + char
    return _stalk(graded)


def oscillator_stalk_char(
    d: RootDatum, config: Iterable[Tuple[Sequence[int], Hashable]]
) -> OscillatorStalk:
    """Stalk of F_theta at sum_k theta_k x_k; entries sharing a point label are added."""
    points: Dict[Hashable, Coweight] = {}
    for theta, label in config:
        theta = as_coweight(theta, d.rank, positive=True)
        if not any(theta):
            raise ValidationError(f"point {label!r} carries the zero coweight")
        points[label] = add(points[label], theta) if label in points else theta
    stalk = _stalk({0: TwistPoly.one()})
    for label in sorted(points, key=str):
        stalk = stalk * _point_stalk(d, points[label])
    logger.debug("stalk at %s: %s", points, stalk.char)
    return stalk


def decompose_sl2(c: BigradedChar) -> Sl2Decomposition:
    """Peel weight strings greedily from the top Cartan weight."""
    if not c.is_character():
        raise NotACharacterError(f"{c} is not non-negative and palindromic")
    # Cartan weight w sits at half-step exponent -w
    weights = {-h: m for h, m in c.half_steps().items()}
    multiplicities: Dict[int, int] = {}
    while weights:
        top = max(weights)
        count = weights[top]
        for w in range(top, -top - 1, -2):
            left = weights.get(w, 0) - count
            if left < 0:
                raise NotACharacterError(f"{c} has no sl2 weight string through weight {w}")
            if left:
                weights[w] = left
            else:
                weights.pop(w, None)
        multiplicities[top] = count
    return Sl2Decomposition.from_mapping(multiplicities)


def recompose_sl2(s: Sl2Decomposition) -> BigradedChar:
    char = TwistPoly.zero()
    for h, m in s.multiplicities:
        char = char + weights_to_char(range(h, -h - 1, -2)) * m
    return char


def weights_to_char(weights: Iterable[int]) -> BigradedChar:
    char = TwistPoly.zero()
    for w in weights:
        char = char + TwistPoly({-w: 1})
    return char
