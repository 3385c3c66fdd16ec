"""Grothendieck-group classes on X^theta supported on Kostant strata.

A class is a signed, twisted combination of block lists. A block (beta, n, tag) stands
for a sheaf on the symmetric power X^(n) attached to the positive coroot beta; a block
list is the external product of its blocks pushed forward to X^theta. Shifts are folded
into signs ([F[1]] = -[F]) and Tate twists (m) become q**m.

The small diagonal of X^theta is detected by total part length 1: every simple
constituent of a length-l block list has support of dimension l.
"""

import logging
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import InconsistentClassError, NotACharacterError, ValidationError
from .kostant import KostantPartition, enumerate_kostant
from .lefschetz import Sl2Decomposition, decompose_sl2, standard_char
from .root_datum import (
    Coweight,
    RootDatum,
    add,
    as_coweight,
    coweights_below,
    leq,
    subtract,
)
from .twist import SignedTwistPoly, TwistPoly

logger = logging.getLogger(__name__)

CLASS_CACHE_SIZE = 1024


class SheafTag(StrEnum):
    CONST = "CONST"
    EXT_TRIV = "EXT_TRIV"
    EXT_STD = "EXT_STD"


@dataclass(frozen=True, order=True)
class Block:
    coroot: int
    mult: int
    tag: SheafTag

    def __post_init__(self):
        if self.mult < 1:
            raise ValidationError(f"block multiplicity must be positive, got {self.mult}")

    def to_json(self) -> dict:
        return {"coroot": self.coroot + 1, "mult": self.mult, "tag": str(self.tag)}


BlockList = Tuple[Block, ...]


def blocklist_length(blocks: BlockList) -> int:
    return sum(b.mult for b in blocks)


@dataclass(frozen=True)
class KClass:
    theta: Coweight
    terms: Mapping[BlockList, SignedTwistPoly]

    @classmethod
    def build(
        cls, theta: Sequence[int], pairs: Iterable[Tuple[Iterable[Block], SignedTwistPoly]]
    ) -> "KClass":
        """Normalize block order, merge equal block lists and prune zero coefficients."""
        terms: Dict[BlockList, SignedTwistPoly] = {}
        for blocks, coefficient in pairs:
            key = tuple(sorted(blocks))
            terms[key] = terms.get(key, TwistPoly.zero()) + coefficient
        pruned = {k: v for k, v in sorted(terms.items()) if v}
        return cls(tuple(theta), MappingProxyType(pruned))

    def __add__(self, other: "KClass") -> "KClass":
        if self.theta != other.theta:
            raise ValidationError(f"cannot add classes on X^{self.theta} and X^{other.theta}")
        return KClass.build(self.theta, [*self.terms.items(), *other.terms.items()])

    def __neg__(self) -> "KClass":
        return KClass.build(self.theta, [(k, -v) for k, v in self.terms.items()])

    def __sub__(self, other: "KClass") -> "KClass":
        return self + (-other)

    def scaled(self, coefficient: SignedTwistPoly) -> "KClass":
        return KClass.build(self.theta, [(k, v * coefficient) for k, v in self.terms.items()])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KClass):
            return NotImplemented
        return self.theta == other.theta and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.theta, frozenset(self.terms.items())))

    def validate_against(self, d: RootDatum) -> None:
        """Every block list must add up to theta."""
        for blocks in self.terms:
            total = (0,) * d.rank
            for b in blocks:
                total = add(total, tuple(b.mult * x for x in d.positive_coroots[b.coroot]))
            if total != self.theta:
                raise ValidationError(f"block list sums to {list(total)}, not {list(self.theta)}")

    def to_json(self) -> dict:
        return {
            "theta": list(self.theta),
            "terms": [
                {"blocks": [b.to_json() for b in blocks], "coefficient": v.to_json()}
                for blocks, v in self.terms.items()
            ],
        }


def empty_class(rank: int) -> KClass:
    return KClass.build((0,) * rank, [((), TwistPoly.one())])


def convolve(a: KClass, b: KClass, max_length: Optional[int] = None) -> KClass:
    """add_*(a boxtimes b): concatenate block lists, multiply coefficients."""
    pairs = []
    for blocks_a, va in a.terms.items():
        for blocks_b, vb in b.terms.items():
            blocks = blocks_a + blocks_b
            if max_length is not None and blocklist_length(blocks) > max_length:
                continue
            pairs.append((blocks, va * vb))
    return KClass.build(add(a.theta, b.theta), pairs)


def _positive(d: RootDatum, theta: Sequence[int], *, nonzero: bool = False) -> Coweight:
    theta = as_coweight(theta, d.rank, positive=True)
    if nonzero and not any(theta):
        raise ValidationError("theta must be non-zero")
    return theta


def _kostant_class(
    d: RootDatum,
    theta: Coweight,
    tag: SheafTag,
    per_part: SignedTwistPoly,
    max_length: Optional[int],
) -> KClass:
    pairs = []
    for k in enumerate_kostant(d, theta, max_parts=max_length):
        blocks = [Block(beta, n, tag) for beta, n in k.parts]
        pairs.append((blocks, per_part ** _length(k)))
    return KClass.build(theta, pairs)


def _length(k: KostantPartition) -> int:
    return sum(n for _, n in k.parts)


@lru_cache(maxsize=CLASS_CACHE_SIZE)
def _class_U(d: RootDatum, theta: Coweight, max_length: Optional[int]) -> KClass:
    return _kostant_class(d, theta, SheafTag.CONST, TwistPoly.one(), max_length)


@lru_cache(maxsize=CLASS_CACHE_SIZE)
def _class_Omega(d: RootDatum, theta: Coweight, max_length: Optional[int]) -> KClass:
    # [n](n) per part
    return _kostant_class(d, theta, SheafTag.EXT_TRIV, TwistPoly.monomial(1, -1), max_length)


@lru_cache(maxsize=CLASS_CACHE_SIZE)
def _class_F(d: RootDatum, theta: Coweight, max_length: Optional[int]) -> KClass:
    # [n](n/2) per part
    return _kostant_class(
        d, theta, SheafTag.EXT_STD, TwistPoly.monomial(Fraction(1, 2), -1), max_length
    )


def class_U(d: RootDatum, theta: Sequence[int], max_length: Optional[int] = None) -> KClass:
    return _class_U(d, _positive(d, theta), max_length)


def class_Omega(d: RootDatum, theta: Sequence[int], max_length: Optional[int] = None) -> KClass:
    return _class_Omega(d, _positive(d, theta), max_length)


def class_F(d: RootDatum, theta: Sequence[int], max_length: Optional[int] = None) -> KClass:
    """The Picard-Lefschetz oscillator F_theta = sum_K i_{K,*} P_K."""
    return _class_F(d, _positive(d, theta), max_length)


def _short_components(
    d: RootDatum, theta: Coweight, max_length: Optional[int]
) -> List[Coweight]:
    """Coweights 0 <= c <= theta that are sums of at most max_length positive coroots."""
    if max_length is None:
        return list(coweights_below(theta))
    found = {(0,) * d.rank}
    frontier = set(found)
    for _ in range(max_length):
        grown = set()
        for base in frontier:
            for beta in d.positive_coroots:
                c = add(base, beta)
                if c not in found and leq(c, theta):
                    grown.add(c)
        if not grown:
            break
        found |= grown
        frontier = grown
    return sorted(found)


def class_tilde_Omega(
    d: RootDatum, theta: Sequence[int], max_length: Optional[int] = None
) -> KClass:
    """sum over theta_1 + theta_2 = theta of add_*(Omega^theta_1 boxtimes U^theta_2).

    With max_length set, splittings whose parts have no Kostant partition that short
    contribute nothing and are skipped.
    """
    theta = _positive(d, theta)
    short = _short_components(d, theta, max_length)
    reachable = set(short)
    total = KClass.build(theta, [])
    for theta_1 in short:
        theta_2 = subtract(theta, theta_1)
        if theta_2 not in reachable:
            continue
        total = total + convolve(
            _class_Omega(d, theta_1, max_length), _class_U(d, theta_2, max_length), max_length
        )
    return total


def class_R(
    d: RootDatum,
    theta: Sequence[int],
    include_maximal_defect: bool = True,
    max_length: Optional[int] = None,
) -> KClass:
    """sum over theta_1 + mu + theta_2 = theta of U^theta_1 * F_mu * U^theta_2."""
    theta = _positive(d, theta)
    short = _short_components(d, theta, max_length)
    reachable = set(short)
    total = KClass.build(theta, [])
    for theta_1 in short:
        rest = subtract(theta, theta_1)
        for mu in short:
            if not leq(mu, rest):
                continue
            if not include_maximal_defect and mu == theta:
                continue
            theta_2 = subtract(rest, mu)
            if theta_2 not in reachable:
                continue
            left = convolve(
                _class_U(d, theta_1, max_length), _class_F(d, mu, max_length), max_length
            )
            total = total + convolve(left, _class_U(d, theta_2, max_length), max_length)
    return total


@dataclass(frozen=True)
class DiagonalClass:
    """Multiples of Q_Delta(m), written as a polynomial in q (q**m <-> twist (m))."""

    poly: SignedTwistPoly

    def __sub__(self, other: "DiagonalClass") -> "DiagonalClass":
        return DiagonalClass(self.poly - other.poly)

    def __add__(self, other: "DiagonalClass") -> "DiagonalClass":
        return DiagonalClass(self.poly + other.poly)

    def to_json(self) -> dict:
        return {f"Qℓ({e})": c for e, c in self.poly.items()}


def _block_stalk(block: Block) -> SignedTwistPoly:
    if block.tag == SheafTag.EXT_STD:
        return standard_char()
    return TwistPoly.one()


def diagonal_part(c: KClass) -> DiagonalClass:
    """Sum the terms of total part length 1, evaluating their single block's stalk."""
    poly = TwistPoly.zero()
    for blocks, coefficient in c.terms.items():
        if blocklist_length(blocks) == 1:
            (block,) = blocks
            poly = poly + coefficient * _block_stalk(block)
    return DiagonalClass(poly)


def compute_S1(d: RootDatum, theta: Sequence[int]) -> DiagonalClass:
    """Diagonal part of the !-stalk of nearby cycles on the maximal defect stratum."""
    theta = _positive(d, theta, nonzero=True)
    return diagonal_part(class_tilde_Omega(d, theta, max_length=1))


def compute_S2(d: RootDatum, theta: Sequence[int]) -> DiagonalClass:
    """Diagonal part of the contributions of all strata except the maximal defect one."""
    theta = _positive(d, theta, nonzero=True)
    return diagonal_part(class_R(d, theta, include_maximal_defect=False, max_length=1))


def oscillator_diagonal(d: RootDatum, theta: Sequence[int]) -> DiagonalClass:
    """Diagonal part of F_theta; for a coroot this is P_1, of class -1 - q."""
    theta = _positive(d, theta, nonzero=True)
    return diagonal_part(class_F(d, theta, max_length=1))


def reconstruct_H_diagonal(d: RootDatum, theta: Sequence[int]) -> Sl2Decomposition:
    """Recover the sl2-module (H_theta) on the diagonal from S1 - S2."""
    theta = _positive(d, theta, nonzero=True)
    h = compute_S1(d, theta) - compute_S2(d, theta)
    # a perverse sheaf on the diagonal is a sum of Q_Delta[1](m), each of class -q**m
    perverse = -h.poly
    if not perverse.is_nonnegative():
        raise InconsistentClassError(f"{h.poly} is not the class of a perverse sheaf")
    # Q_Delta[1](m) = IC_Delta(m - 1/2) has Cartan weight 1 - 2m
    char = perverse.twisted(Fraction(-1, 2))
    try:
        decomposition = decompose_sl2(char)
    except NotACharacterError as exc:
        raise InconsistentClassError(str(exc)) from exc
    logger.debug("theta=%s: H on diagonal %s -> %s", list(theta), h.poly, decomposition)
    return decomposition
