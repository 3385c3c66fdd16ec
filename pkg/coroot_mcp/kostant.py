"""Kostant partitions of positive coweights into positive coroots."""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from .errors import ValidationError
from .root_datum import Coweight, RootDatum, as_coweight, leq

logger = logging.getLogger(__name__)

ENUMERATION_CACHE_SIZE = 1024
COUNT_CACHE_SIZE = 1 << 16


@dataclass(frozen=True)
class KostantPartition:
    """Multiplicities n_beta keyed by index into ``RootDatum.positive_coroots``."""

    theta: Coweight
    parts: Tuple[Tuple[int, int], ...]

    @property
    def multiplicities(self) -> Dict[int, int]:
        return dict(self.parts)

    def as_coweights(self, d: RootDatum) -> List[Tuple[Coweight, int]]:
        return [(d.positive_coroots[k], n) for k, n in self.parts]

    def to_json(self, d: RootDatum) -> dict:
        return {
            "parts": [
                {"coroot": list(d.positive_coroots[k]), "index": k + 1, "mult": n}
                for k, n in self.parts
            ],
            "length": partition_length(self),
        }


def make_partition(d: RootDatum, theta: Sequence[int], parts: Dict[int, int]) -> KostantPartition:
    """Build a partition, checking that the parts add up to theta."""
    theta = as_coweight(theta, d.rank, positive=True)
    total = [0] * d.rank
    for k, n in parts.items():
        if n < 1:
            raise ValidationError(f"multiplicity of coroot {k} must be positive")
        for i, x in enumerate(d.positive_coroots[k]):
            total[i] += n * x
    if tuple(total) != theta:
        raise ValidationError(f"parts sum to {total}, not {list(theta)}")
    return KostantPartition(theta, tuple(sorted(parts.items())))


def partition_length(k: KostantPartition) -> int:
    return sum(n for _, n in k.parts)


def enumerate_kostant(
    d: RootDatum, theta: Sequence[int], max_parts: Optional[int] = None
) -> List[KostantPartition]:
    """All Kostant partitions of theta, optionally only those with at most max_parts parts."""
    theta = as_coweight(theta, d.rank, positive=True)
    return list(_enumerate(d.positive_coroots, theta, max_parts))


@lru_cache(maxsize=ENUMERATION_CACHE_SIZE)
def _enumerate(
    coroots: Tuple[Coweight, ...], theta: Coweight, max_parts: Optional[int]
) -> Tuple[KostantPartition, ...]:
    found: List[KostantPartition] = []
    budget = sum(theta) if max_parts is None else max_parts

    def descend(k: int, remaining: Coweight, left: int, chosen: List[Tuple[int, int]]):
        if not any(remaining):
            found.append(KostantPartition(theta, tuple(chosen)))
            return
        if k == len(coroots) or left == 0:
            return
        beta = coroots[k]
        top = min(remaining[i] // b for i, b in enumerate(beta) if b)
        for n in range(min(top, left), -1, -1):
            rest = tuple(r - n * b for r, b in zip(remaining, beta))
            if n:
                chosen.append((k, n))
            descend(k + 1, rest, left - n, chosen)
            if n:
                chosen.pop()

    descend(0, theta, budget, [])
    logger.debug("theta=%s: %d Kostant partitions", list(theta), len(found))
    return tuple(found)


def kostant_count(d: RootDatum, theta: Sequence[int]) -> int:
    """Count by peeling off the last coroot: P_k(theta) = sum_n P_{k-1}(theta - n beta_k)."""
    theta = as_coweight(theta, d.rank, positive=True)
    return _count(d.positive_coroots, theta, len(d.positive_coroots))


@lru_cache(maxsize=COUNT_CACHE_SIZE)
def _count(coroots: Tuple[Coweight, ...], theta: Coweight, k: int) -> int:
    if not any(theta):
        return 1
    if k == 0:
        return 0
    beta = coroots[k - 1]
    total = 0
    remaining = theta
    while all(x >= 0 for x in remaining):
        total += _count(coroots, remaining, k - 1)
        remaining = tuple(r - b for r, b in zip(remaining, beta))
    return total


def kostant_generating_count(d: RootDatum, theta: Sequence[int]) -> int:
    """Coefficient of x**theta in prod_beta 1/(1 - x**beta), truncated below theta."""
    theta = as_coweight(theta, d.rank, positive=True)
    xs = sympy.symbols(f"x1:{d.rank + 1}")
    series = sympy.Poly(1, *xs)
    for beta in d.positive_coroots:
        terms = {}
        n = 0
        while leq(tuple(n * b for b in beta), theta):
            terms[tuple(n * b for b in beta)] = 1
            n += 1
        series = series * sympy.Poly.from_dict(terms, *xs)
        series = sympy.Poly.from_dict(
            {m: c for m, c in series.as_dict().items() if leq(m, theta)}, *xs
        )
    return int(series.as_dict().get(theta, 0))
