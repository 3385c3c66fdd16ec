"""U(n) for the positive nilpotent part of the Langlands dual Lie algebra.

Root vectors e_beta are indexed by the positive roots of the dual datum, which are the
positive coroots of the original one, in canonical height-then-lex order. Elements are
integer combinations of PBW monomials prod_beta e_beta^(a_beta) taken in that order.
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import comb
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import StructureConstantError, ValidationError
from .root_datum import (
    Coweight,
    RootDatum,
    add,
    as_coweight,
    coweights_below,
    coweights_up_to,
    height,
    langlands_dual,
    scale,
    subtract,
    symmetrized_form,
)

logger = logging.getLogger(__name__)

CHEVALLEY_CACHE_SIZE = 32
STRAIGHTEN_CACHE_SIZE = 1 << 16

Monomial = Tuple[int, ...]
Word = Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class ChevalleyBasis:
    dual_datum: RootDatum
    bracket_constants: Mapping[Tuple[int, int], int]
    _straightened: Dict[Word, Dict[Monomial, int]] = field(
        default_factory=dict, repr=False
    )

    @property
    def roots(self) -> Tuple[Coweight, ...]:
        return self.dual_datum.positive_roots

    @property
    def rank(self) -> int:
        return self.dual_datum.rank

    @property
    def label(self) -> str:
        return self.dual_datum.label

    @cached_property
    def sums(self) -> Dict[Tuple[int, int], int]:
        positions = self.dual_datum.root_positions
        return {(i, j): positions[add(self.roots[i], self.roots[j])] for i, j in self.bracket_constants}

    def bracket(self, i: int, j: int) -> Optional[Tuple[int, int]]:
        """[e_i, e_j] as (index of the sum, N_ij), or None when it vanishes."""
        n = self.bracket_constants.get((i, j))
        if n is None:
            return None
        return self.sums[(i, j)], n

    def simple_index(self, i: int) -> int:
        if not 0 <= i < self.rank:
            raise ValidationError(f"simple generator e{i + 1} does not exist in {self.label}")
        return self.dual_datum.root_positions[tuple(int(k == i) for k in range(self.rank))]

    def degree(self, monomial: Monomial) -> Coweight:
        total = (0,) * self.rank
        for k, a in enumerate(monomial):
            if a:
                total = add(total, scale(a, self.roots[k]))
        return total


def _string_length(is_root, r: Coweight, s: Coweight) -> int:
    """Largest p with s - p r a root."""
    p = 0
    while is_root(subtract(s, scale(p + 1, r))):
        p += 1
    return p


@lru_cache(maxsize=CHEVALLEY_CACHE_SIZE)
def build_chevalley(d: RootDatum) -> ChevalleyBasis:
    """Structure constants N_{r,s} of the dual Lie algebra from extraspecial pairs.

    For each non-simple root xi the pair (alpha, beta) with the smallest first summand gets
    N = p + 1. Every other pair (r, s) with r + s = xi follows from the four-root relation
    with (-alpha, -beta), using N_{x,-y} for the mixed constants.
    """
    dual = langlands_dual(d)
    roots = dual.positive_roots
    positions = dual.root_positions
    form = symmetrized_form(dual)
    rank = dual.rank

    def ip(x: Sequence[int], y: Sequence[int]) -> Fraction:
        return sum(
            (x[i] * form[i][j] * y[j] for i in range(rank) for j in range(rank)), Fraction(0)
        )

    def is_root(v: Coweight) -> bool:
        return v in positions or tuple(-x for x in v) in positions

    constants: Dict[Tuple[int, int], Fraction] = {}

    def mixed(i: int, j: int) -> Fraction:
        """N_{x,-y} for positive roots x = roots[i], y = roots[j]."""
        x, y = roots[i], roots[j]
        w = subtract(x, y)
        if w in positions:
            return -ip(w, w) / ip(x, x) * constants.get((j, positions[w]), 0)
        v = subtract(y, x)
        if v in positions:
            return ip(v, v) / ip(y, y) * constants.get((positions[v], i), 0)
        return Fraction(0)

    for xi in roots:
        if height(xi) == 1:
            continue
        pairs = sorted(
            (i, positions[subtract(xi, r)])
            for i, r in enumerate(roots)
            if subtract(xi, r) in positions
        )
        a, b = pairs[0]
        n_ab = Fraction(_string_length(is_root, roots[a], roots[b]) + 1)
        constants[(a, b)] = n_ab
        constants[(b, a)] = -n_ab
        for r, s in pairs:
            if r >= s or (r, s) == (a, b):
                continue
            s_minus = subtract(roots[s], roots[a])
            r_minus = subtract(roots[r], roots[a])
            value = ip(xi, xi) / n_ab * (
                mixed(s, a) * mixed(r, b) / ip(s_minus, s_minus)
                - mixed(r, a) * mixed(s, b) / ip(r_minus, r_minus)
            )
            constants[(r, s)] = value
            constants[(s, r)] = -value

    integral: Dict[Tuple[int, int], int] = {}
    for (i, j), value in sorted(constants.items()):
        expected = _string_length(is_root, roots[i], roots[j]) + 1
        if value.denominator != 1 or abs(value) != expected:
            raise StructureConstantError(
                f"N({i + 1},{j + 1}) = {value} in {dual.label}, expected +-{expected}"
            )
        integral[(i, j)] = int(value)
    logger.debug("%s: %d structure constants", dual.label, len(integral))
    return ChevalleyBasis(dual, MappingProxyType(integral))


# -- elements -----------------------------------------------------------------


def render_monomial(monomial: Monomial) -> str:
    factors = [
        f"E{k + 1}" if a == 1 else f"E{k + 1}^{a}" for k, a in enumerate(monomial) if a
    ]
    return "*".join(factors) or "1"


@dataclass(frozen=True)
class PBWElement:
    label: str
    terms: Mapping[Monomial, int]

    @classmethod
    def build(cls, label: str, pairs: Iterable[Tuple[Monomial, int]]) -> "PBWElement":
        terms: Dict[Monomial, int] = {}
        for m, c in pairs:
            terms[m] = terms.get(m, 0) + c
        return cls(label, MappingProxyType({m: c for m, c in sorted(terms.items()) if c}))

    def _same_basis(self, other: "PBWElement") -> None:
        if self.label != other.label:
            raise ValidationError(f"elements of U(n) for {self.label} and {other.label} do not mix")

    def __add__(self, other: "PBWElement") -> "PBWElement":
        self._same_basis(other)
        return PBWElement.build(self.label, [*self.terms.items(), *other.terms.items()])

    def __neg__(self) -> "PBWElement":
        return self.scaled(-1)

    def __sub__(self, other: "PBWElement") -> "PBWElement":
        return self + (-other)

    def scaled(self, k: int) -> "PBWElement":
        return PBWElement.build(self.label, [(m, k * c) for m, c in self.terms.items()])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PBWElement):
            return NotImplemented
        return self.label == other.label and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.label, frozenset(self.terms.items())))

    def degree(self, cb: ChevalleyBasis) -> Coweight:
        """The common degree of a non-zero homogeneous element."""
        degrees = {cb.degree(m) for m in self.terms}
        if len(degrees) != 1:
            raise ValidationError("element is zero or not homogeneous")
        return degrees.pop()

    def to_json(self) -> Dict[str, int]:
        return {render_monomial(m): c for m, c in self.terms.items()}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{render_monomial(m)}" for m, c in self.terms.items())


@dataclass(frozen=True)
class TensorElement:
    """Element of U(n)^(tensor k), keyed by k-tuples of PBW monomials."""

    label: str
    terms: Mapping[Tuple[Monomial, ...], int]

    @classmethod
    def build(
        cls, label: str, pairs: Iterable[Tuple[Tuple[Monomial, ...], int]]
    ) -> "TensorElement":
        terms: Dict[Tuple[Monomial, ...], int] = {}
        for key, c in pairs:
            terms[key] = terms.get(key, 0) + c
        return cls(label, MappingProxyType({k: c for k, c in sorted(terms.items()) if c}))

    def __add__(self, other: "TensorElement") -> "TensorElement":
        return TensorElement.build(self.label, [*self.terms.items(), *other.terms.items()])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.label == other.label and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.label, frozenset(self.terms.items())))

    def to_json(self) -> Dict[str, int]:
        return {" ⊗ ".join(render_monomial(m) for m in key): c for key, c in self.terms.items()}


def _unit_monomial(cb: ChevalleyBasis) -> Monomial:
    return (0,) * len(cb.roots)


def unit(cb: ChevalleyBasis) -> PBWElement:
    return PBWElement.build(cb.label, [(_unit_monomial(cb), 1)])


def basis_element(cb: ChevalleyBasis, monomial: Sequence[int]) -> PBWElement:
    monomial = tuple(int(a) for a in monomial)
    if len(monomial) != len(cb.roots) or any(a < 0 for a in monomial):
        raise ValidationError(f"not a PBW exponent vector for {cb.label}: {list(monomial)}")
    return PBWElement.build(cb.label, [(monomial, 1)])


def root_vector(cb: ChevalleyBasis, j: int) -> PBWElement:
    """E_j, the j-th positive root vector (0-based)."""
    if not 0 <= j < len(cb.roots):
        raise ValidationError(f"root vector E{j + 1} does not exist in {cb.label}")
    return basis_element(cb, [int(k == j) for k in range(len(cb.roots))])


def simple_generator(cb: ChevalleyBasis, i: int) -> PBWElement:
    return root_vector(cb, cb.simple_index(i))


# -- multiplication -------------------------------------------------------------


def _word(monomial: Monomial) -> Word:
    return tuple(k for k, a in enumerate(monomial) for _ in range(a))


def _straighten(cb: ChevalleyBasis, word: Word) -> Dict[Monomial, int]:
    """Rewrite a word in root vectors to PBW order using e_x e_y = e_y e_x + [e_x, e_y]."""
    cached = cb._straightened.get(word)
    if cached is not None:
        return cached
    for i in range(len(word) - 1):
        x, y = word[i], word[i + 1]
        if x > y:
            result = dict(_straighten(cb, word[:i] + (y, x) + word[i + 2 :]))
            bracket = cb.bracket(x, y)
            if bracket is not None:
                k, n = bracket
                for m, c in _straighten(cb, word[:i] + (k,) + word[i + 2 :]).items():
                    result[m] = result.get(m, 0) + n * c
            result = {m: c for m, c in result.items() if c}
            break
    else:
        monomial = [0] * len(cb.roots)
        for k in word:
            monomial[k] += 1
        result = {tuple(monomial): 1}
    if len(cb._straightened) >= STRAIGHTEN_CACHE_SIZE:
        cb._straightened.clear()
    cb._straightened[word] = result
    return result


def multiply(cb: ChevalleyBasis, a: PBWElement, b: PBWElement) -> PBWElement:
    a._same_basis(b)
    if a.label != cb.label:
        raise ValidationError(f"element lives in U(n) for {a.label}, not {cb.label}")
    pairs = []
    for ma, ca in a.terms.items():
        for mb, cb_ in b.terms.items():
            for m, c in _straighten(cb, _word(ma) + _word(mb)).items():
                pairs.append((m, ca * cb_ * c))
    return PBWElement.build(cb.label, pairs)


def product(cb: ChevalleyBasis, factors: Iterable[PBWElement]) -> PBWElement:
    result = unit(cb)
    for f in factors:
        result = multiply(cb, result, f)
    return result


# -- coalgebra ------------------------------------------------------------------


def _split(monomial: Monomial) -> Iterable[Tuple[Monomial, Monomial, int]]:
    # ordered factors stay ordered on each side, so no straightening is needed
    for left in itertools.product(*(range(a + 1) for a in monomial)):
        right = tuple(a - k for a, k in zip(monomial, left))
        coefficient = 1
        for a, k in zip(monomial, left):
            coefficient *= comb(a, k)
        yield left, right, coefficient


def comultiply(cb: ChevalleyBasis, a: PBWElement) -> TensorElement:
    """Algebra map with every e_beta primitive."""
    pairs = []
    for m, c in a.terms.items():
        for left, right, k in _split(m):
            pairs.append(((left, right), c * k))
    return TensorElement.build(cb.label, pairs)


def _comultiply_slot(cb: ChevalleyBasis, t: TensorElement, slot: int) -> TensorElement:
    pairs = []
    for key, c in t.terms.items():
        for left, right, k in _split(key[slot]):
            pairs.append((key[:slot] + (left, right) + key[slot + 1 :], c * k))
    return TensorElement.build(cb.label, pairs)


def tensor_multiply(cb: ChevalleyBasis, x: TensorElement, y: TensorElement) -> TensorElement:
    """Componentwise product (mult tensor mult) after the middle swap; no Koszul signs."""
    pairs = []
    for kx, cx in x.terms.items():
        for ky, cy in y.terms.items():
            if len(kx) != len(ky):
                raise ValidationError("tensor factors have different arity")
            expansions = [
                _straighten(cb, _word(mx) + _word(my)).items() for mx, my in zip(kx, ky)
            ]
            for combo in itertools.product(*expansions):
                coefficient = cx * cy
                for _, c in combo:
                    coefficient *= c
                pairs.append((tuple(m for m, _ in combo), coefficient))
    return TensorElement.build(cb.label, pairs)


def counit(a: PBWElement) -> int:
    """Projection to degree 0."""
    for m, c in a.terms.items():
        if not any(m):
            return c
    return 0


def _counit_slot(cb: ChevalleyBasis, t: TensorElement, slot: int) -> PBWElement:
    pairs = []
    for key, c in t.terms.items():
        if not any(key[slot]):
            (other,) = key[:slot] + key[slot + 1 :]
            pairs.append((other, c))
    return PBWElement.build(cb.label, pairs)


# -- grading --------------------------------------------------------------------


def pbw_basis(cb: ChevalleyBasis, theta: Sequence[int]) -> List[Monomial]:
    """PBW monomials of degree theta, in increasing exponent-tuple order."""
    theta = as_coweight(theta, cb.rank)
    if any(x < 0 for x in theta):
        return []
    found: List[Monomial] = []
    n = len(cb.roots)

    def fill(k: int, remaining: Coweight, exponents: List[int]):
        if k < 0:
            if not any(remaining):
                found.append(tuple(exponents))
            return
        beta = cb.roots[k]
        a = 0
        while all(r >= 0 for r in remaining):
            exponents[k] = a
            fill(k - 1, remaining, exponents)
            remaining = subtract(remaining, beta)
            a += 1
        exponents[k] = 0

    fill(n - 1, theta, [0] * n)
    return sorted(found)


def weight_space_dim(cb: ChevalleyBasis, theta: Sequence[int]) -> int:
    return len(pbw_basis(cb, theta))


def product_dimension(cb: ChevalleyBasis, theta: Sequence[int]) -> int:
    """dim of the direct sum over mu_1 + mu_2 = theta of A[mu_1] tensor A[mu_2]."""
    theta = as_coweight(theta, cb.rank, positive=True)
    return sum(
        weight_space_dim(cb, mu) * weight_space_dim(cb, subtract(theta, mu))
        for mu in coweights_below(theta)
    )


def all_monomials(cb: ChevalleyBasis, max_length: int) -> List[Monomial]:
    """The unit and every PBW monomial whose degree has length at most max_length."""
    found = [_unit_monomial(cb)]
    for theta in coweights_up_to(cb.rank, max_length):
        found.extend(pbw_basis(cb, theta))
    return found


def _basis_tuples(
    cb: ChevalleyBasis, bound: int, arity: int
) -> Iterable[Tuple[Monomial, ...]]:
    """Tuples of non-unit PBW monomials whose degree lengths add up to at most bound."""
    by_length = {l: [] for l in range(1, bound + 1)}
    for theta in coweights_up_to(cb.rank, bound):
        by_length[sum(theta)].extend(pbw_basis(cb, theta))
    for lengths in itertools.product(range(1, bound + 1), repeat=arity):
        if sum(lengths) <= bound:
            yield from itertools.product(*(by_length[l] for l in lengths))


# -- checks ---------------------------------------------------------------------


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    passed: bool
    checked: int
    counterexample: Optional[str] = None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "counterexample": self.counterexample,
        }


def _lie_bracket(cb: ChevalleyBasis, u: Mapping[int, int], v: Mapping[int, int]) -> Dict[int, int]:
    result: Dict[int, int] = {}
    for i, a in u.items():
        for j, b in v.items():
            bracket = cb.bracket(i, j)
            if bracket is not None:
                k, n = bracket
                result[k] = result.get(k, 0) + a * b * n
    return {k: c for k, c in result.items() if c}


def check_jacobi(cb: ChevalleyBasis) -> AxiomCheck:
    """[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0 over all triples of distinct root vectors.

    Triples with a repeated entry vanish by antisymmetry, which the constructor enforces.
    """
    n = len(cb.roots)
    checked = 0
    for x, y, z in itertools.combinations(range(n), 3):
        total: Dict[int, int] = {}
        for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
            for k, v in _lie_bracket(cb, {a: 1}, _lie_bracket(cb, {b: 1}, {c: 1})).items():
                total[k] = total.get(k, 0) + v
        checked += 1
        if any(total.values()):
            return AxiomCheck("jacobi", False, checked, f"E{x + 1}, E{y + 1}, E{z + 1}")
    return AxiomCheck("jacobi", True, checked)


def check_associativity(cb: ChevalleyBasis, bound: int) -> AxiomCheck:
    if bound < 1:
        raise ValidationError(f"degree bound must be at least 1, got {bound}")
    checked = 0
    for mu, mv, mw in _basis_tuples(cb, bound, 3):
        u, v, w = (basis_element(cb, m) for m in (mu, mv, mw))
        checked += 1
        if multiply(cb, multiply(cb, u, v), w) != multiply(cb, u, multiply(cb, v, w)):
            return AxiomCheck(
                "associativity",
                False,
                checked,
                " | ".join(render_monomial(m) for m in (mu, mv, mw)),
            )
    return AxiomCheck("associativity", True, checked)


def check_hopf_axiom(cb: ChevalleyBasis, bound: int) -> AxiomCheck:
    """Delta(uv) = Delta(u)Delta(v) on basis pairs, then counit, coassociativity, connectedness."""
    if bound < 1:
        raise ValidationError(f"degree bound must be at least 1, got {bound}")
    checked = 0
    for mu, mv in _basis_tuples(cb, bound, 2):
        u, v = basis_element(cb, mu), basis_element(cb, mv)
        checked += 1
        lhs = comultiply(cb, multiply(cb, u, v))
        rhs = tensor_multiply(cb, comultiply(cb, u), comultiply(cb, v))
        if lhs != rhs:
            return AxiomCheck(
                "hopf", False, checked, f"{render_monomial(mu)} | {render_monomial(mv)}"
            )
    for m in all_monomials(cb, min(bound, 3)):
        x = basis_element(cb, m)
        delta = comultiply(cb, x)
        checked += 1
        if _counit_slot(cb, delta, 0) != x or _counit_slot(cb, delta, 1) != x:
            return AxiomCheck("hopf", False, checked, f"counit at {render_monomial(m)}")
        if _comultiply_slot(cb, delta, 0) != _comultiply_slot(cb, delta, 1):
            return AxiomCheck("hopf", False, checked, f"coassociativity at {render_monomial(m)}")
    checked += 1
    if weight_space_dim(cb, (0,) * cb.rank) != 1:
        return AxiomCheck("hopf", False, checked, "degree 0 is not one-dimensional")
    logger.debug("%s: hopf checks passed on %d cases up to length %d", cb.label, checked, bound)
    return AxiomCheck("hopf", True, checked)


def default_bound(cb: ChevalleyBasis) -> int:
    if cb.rank <= 2:
        return 6
    return 4 if cb.rank == 3 else 3
