"""Root data of simple simply-connected groups, their positive (co)roots and duals.

Conventions: ``cartan[i][j] = <alpha_i^vee, alpha_j>`` with Bourbaki node numbering.
Roots are written in the simple-root basis and coroots in the simple-coroot basis;
coroots of G are the roots of the transposed Cartan matrix.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import ValidationError

logger = logging.getLogger(__name__)

Coweight = Tuple[int, ...]
CartanMatrix = Tuple[Tuple[int, ...], ...]

FAMILIES = "ABCDEFG"
DUAL_FAMILY = {"B": "C", "C": "B"}


@dataclass(frozen=True, order=True)
class GroupType:
    family: str
    rank: int

    def __post_init__(self):
        if not is_admissible(self.family, self.rank):
            raise ValidationError(
                f"{self.family}{self.rank} is not an admissible simple type"
            )

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"


def is_admissible(family: str, rank: int) -> bool:
    if not isinstance(rank, int) or family not in FAMILIES or len(family) != 1:
        return False
    if family == "A":
        return rank >= 1
    if family in "BC":
        return rank >= 2
    if family == "D":
        return rank >= 3
    if family == "E":
        return 6 <= rank <= 8
    if family == "F":
        return rank == 4
    return rank == 2


def parse_group_type(family: str, rank) -> GroupType:
    """Normalize user input such as ("g", "2") into a GroupType."""
    try:
        rank = int(rank)
    except (TypeError, ValueError):
        raise ValidationError(f"rank must be an integer, got {rank!r}") from None
    return GroupType(str(family).strip().upper(), rank)


def cartan_matrix(t: GroupType) -> CartanMatrix:
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i: int, j: int, a_ij: int = -1, a_ji: int = -1):
        a[i][j] = a_ij
        a[j][i] = a_ji

    if t.family in "ABCD":
        for i in range(n - 2):
            link(i, i + 1)
        if t.family == "A" and n > 1:
            link(n - 2, n - 1)
        elif t.family == "B":
            # alpha_n short
            link(n - 2, n - 1, -1, -2)
        elif t.family == "C":
            # alpha_n long
            link(n - 2, n - 1, -2, -1)
        elif t.family == "D":
            link(n - 3, n - 1)
    elif t.family == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif t.family == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif t.family == "G":
        # alpha_1 short
        link(0, 1, -3, -1)
    return tuple(tuple(row) for row in a)


def transpose(matrix: CartanMatrix) -> CartanMatrix:
    return tuple(zip(*matrix))


def height(v: Sequence[int]) -> int:
    return sum(v)


def canonical_key(v: Sequence[int]) -> Tuple:
    """Height first; within a height, larger leading coordinates come first."""
    return (sum(v), tuple(-x for x in v))


def _reflect(matrix: CartanMatrix, i: int, v: Coweight) -> Coweight:
    pairing = sum(matrix[i][j] * v[j] for j in range(len(v)))
    return tuple(x - pairing if k == i else x for k, x in enumerate(v))


def positive_system(matrix: CartanMatrix) -> Tuple[Coweight, ...]:
    """Positive roots of ``matrix`` by reflection closure of the simple roots."""
    rank = len(matrix)
    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        fresh = []
        for v in frontier:
            for i in range(rank):
                w = _reflect(matrix, i, v)
                if all(x >= 0 for x in w) and w not in found:
                    found.add(w)
                    fresh.append(w)
        frontier = fresh
    return tuple(sorted(found, key=canonical_key))


@dataclass(frozen=True)
class RootDatum:
    group_type: GroupType
    cartan: CartanMatrix
    positive_roots: Tuple[Coweight, ...]
    positive_coroots: Tuple[Coweight, ...]

    @property
    def rank(self) -> int:
        return self.group_type.rank

    @property
    def label(self) -> str:
        return self.group_type.label

    @cached_property
    def coroot_positions(self) -> Dict[Coweight, int]:
        return {c: k for k, c in enumerate(self.positive_coroots)}

    @cached_property
    def root_positions(self) -> Dict[Coweight, int]:
        return {r: k for k, r in enumerate(self.positive_roots)}

    def to_json(self) -> dict:
        return {
            "family": self.group_type.family,
            "rank": self.rank,
            "cartan": [list(row) for row in self.cartan],
            "positive_coroots": [list(c) for c in self.positive_coroots],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "RootDatum":
        t = parse_group_type(doc["family"], doc["rank"])
        cartan = tuple(tuple(int(x) for x in row) for row in doc["cartan"])
        datum = datum_from_cartan(t, cartan)
        listed = tuple(tuple(int(x) for x in c) for c in doc.get("positive_coroots", ()))
        if listed and listed != datum.positive_coroots:
            raise ValidationError("positive_coroots do not match the Cartan matrix")
        return datum


def datum_from_cartan(t: GroupType, cartan: CartanMatrix) -> RootDatum:
    _check_cartan(cartan, t.rank)
    return RootDatum(
        group_type=t,
        cartan=cartan,
        positive_roots=positive_system(cartan),
        positive_coroots=positive_system(transpose(cartan)),
    )


def _check_cartan(cartan: CartanMatrix, rank: int) -> None:
    if len(cartan) != rank or any(len(row) != rank for row in cartan):
        raise ValidationError("Cartan matrix has the wrong shape")
    for i, j in itertools.product(range(rank), repeat=2):
        if i == j and cartan[i][j] != 2:
            raise ValidationError("Cartan matrix must have 2 on the diagonal")
        if i != j and (cartan[i][j] > 0 or (cartan[i][j] == 0) != (cartan[j][i] == 0)):
            raise ValidationError("off-diagonal Cartan entries must be non-positive")


def build_root_datum(t: GroupType) -> RootDatum:
    datum = datum_from_cartan(t, cartan_matrix(t))
    logger.debug(
        "built %s: %d positive coroots", t.label, len(datum.positive_coroots)
    )
    return datum


def langlands_dual(d: RootDatum) -> RootDatum:
    """Transpose the Cartan matrix; node numbering is kept, so dual(dual(d)) == d."""
    family = DUAL_FAMILY.get(d.group_type.family, d.group_type.family)
    return RootDatum(
        group_type=GroupType(family, d.rank),
        cartan=transpose(d.cartan),
        positive_roots=d.positive_coroots,
        positive_coroots=d.positive_roots,
    )


def as_coweight(values: Iterable[int], rank: int, *, positive: bool = False) -> Coweight:
    try:
        v = tuple(int(x) for x in values)
    except (TypeError, ValueError):
        raise ValidationError(f"coweight must be a list of integers, got {values!r}") from None
    if len(v) != rank:
        raise ValidationError(f"expected {rank} coordinates, got {len(v)}")
    if positive and any(x < 0 for x in v):
        raise ValidationError(f"coweight {list(v)} has a negative coordinate")
    return v


def parse_theta(text: str, rank: int) -> Coweight:
    """Parse "1,0,2" into a positive coweight of the given rank."""
    parts = [p.strip() for p in str(text).split(",")]
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise ValidationError(f"malformed coweight {text!r}") from None
    return as_coweight(values, rank, positive=True)


def leq(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) != len(b):
        raise ValidationError(f"rank mismatch: {len(a)} vs {len(b)}")
    return all(y - x >= 0 for x, y in zip(a, b))


def length(theta: Sequence[int]) -> int:
    if any(x < 0 for x in theta):
        raise ValidationError(f"length is defined for positive coweights, got {list(theta)}")
    return sum(theta)


def add(a: Sequence[int], b: Sequence[int]) -> Coweight:
    return tuple(x + y for x, y in zip(a, b))


def subtract(a: Sequence[int], b: Sequence[int]) -> Coweight:
    return tuple(x - y for x, y in zip(a, b))


def scale(k: int, a: Sequence[int]) -> Coweight:
    return tuple(k * x for x in a)


def simple_reflection(
    d: RootDatum, i: int, v: Sequence[int], *, coroot: bool = True
) -> Coweight:
    """s_i on coroot coordinates (or root coordinates with ``coroot=False``)."""
    matrix = transpose(d.cartan) if coroot else d.cartan
    return _reflect(matrix, i, tuple(v))


def is_positive_coroot(d: RootDatum, theta: Sequence[int]) -> bool:
    return tuple(theta) in d.coroot_positions


def coroot_index(d: RootDatum, theta: Sequence[int]) -> Optional[int]:
    return d.coroot_positions.get(tuple(theta))


def highest_coroot(d: RootDatum) -> Coweight:
    return d.positive_coroots[-1]


def symmetrized_form(d: RootDatum) -> Tuple[Tuple[Fraction, ...], ...]:
    """Gram matrix (alpha_i, alpha_j) of the simple roots, short roots of length 2."""
    n = d.rank
    lengths: List[Optional[Fraction]] = [None] * n
    lengths[0] = Fraction(2)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and d.cartan[i][j] and lengths[j] is None:
                lengths[j] = lengths[i] * d.cartan[i][j] / d.cartan[j][i]
                stack.append(j)
    shortest = min(lengths)
    lengths = [2 * x / shortest for x in lengths]
    denominator = lcm(*(x.denominator for x in lengths))
    lengths = [x * denominator for x in lengths]
    return tuple(
        tuple(Fraction(d.cartan[i][j]) * lengths[i] / 2 for j in range(n))
        for i in range(n)
    )


def coweights_below(theta: Sequence[int]) -> Iterator[Coweight]:
    """Every coweight 0 <= theta' <= theta, in lexicographic order."""
    return itertools.product(*(range(x + 1) for x in theta))


def coweights_up_to(rank: int, max_length: int) -> Iterator[Coweight]:
    """Every positive coweight of length 1..max_length, shortest first."""
    for total in range(1, max_length + 1):
        for cut in itertools.combinations(range(total + rank - 1), rank - 1):
            bounds = (-1,) + cut + (total + rank - 1,)
            yield tuple(bounds[k + 1] - bounds[k] - 1 for k in range(rank))
