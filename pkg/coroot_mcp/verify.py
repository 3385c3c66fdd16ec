"""The check registry behind ``coroot verify``: every identity the library promises."""

import logging
from typing import Callable, List, Optional, Sequence, Tuple

from .errors import CorootError
from .kgroup import compute_S1, compute_S2, oscillator_diagonal, reconstruct_H_diagonal
from .kostant import enumerate_kostant, kostant_count, kostant_generating_count
from .lefschetz import collision_patterns, oscillator_stalk_char, plo_stalk_char
from .report import CheckReport
from .root_datum import Coweight, RootDatum, coroot_index, coweights_up_to
from .twist import TwistPoly
from .uea import (
    build_chevalley,
    check_associativity,
    check_hopf_axiom,
    check_jacobi,
    default_bound,
    weight_space_dim,
)

logger = logging.getLogger(__name__)

S1_COROOT = TwistPoly.from_exponents({0: 1, 1: -1})
S2_COROOT = TwistPoly.from_exponents({0: 2})
NON_COROOT_LENGTH = 4


def _checked(
    d: RootDatum,
    check: str,
    theta: Optional[Sequence[int]],
    expected: str,
    outcome: Callable[[], Tuple[str, bool]],
) -> CheckReport:
    """Run ``outcome`` for (computed, passed); a domain error becomes a failed row."""
    try:
        computed, passed = outcome()
    except CorootError as exc:
        return CheckReport(check, d.label, theta, expected, f"error: {exc}", False)
    return CheckReport(check, d.label, theta, expected, computed, passed)


def _guarded(d: RootDatum, check: str, theta: Optional[Coweight], expected, compute: Callable):
    def outcome():
        computed = compute()
        return str(computed), expected == computed

    return _checked(d, check, theta, str(expected), outcome)


def diagonal_checks(d: RootDatum, theta: Coweight) -> List[CheckReport]:
    if coroot_index(d, theta) is not None:
        return [
            _guarded(d, "S1", theta, S1_COROOT, lambda: compute_S1(d, theta).poly),
            _guarded(d, "S2", theta, S2_COROOT, lambda: compute_S2(d, theta).poly),
            _guarded(
                d, "H_diag", theta, {1: 1}, lambda: reconstruct_H_diagonal(d, theta).as_dict()
            ),
            _guarded(
                d,
                "oscillator_diag",
                theta,
                S1_COROOT - S2_COROOT,
                lambda: oscillator_diagonal(d, theta).poly,
            ),
        ]
    zero = TwistPoly.zero()
    return [
        _guarded(d, "S1_vanishes", theta, zero, lambda: compute_S1(d, theta).poly),
        _guarded(d, "S2_vanishes", theta, zero, lambda: compute_S2(d, theta).poly),
    ]


def dimension_check(d: RootDatum, theta: Coweight) -> CheckReport:
    def counts():
        cb = build_chevalley(d)
        return (
            len(enumerate_kostant(d, theta)),
            kostant_generating_count(d, theta),
            weight_space_dim(cb, theta),
        )

    return _guarded(d, "kostant_pbw_dims", theta, (kostant_count(d, theta),) * 3, counts)


def factorization_check(d: RootDatum, max_length: int) -> CheckReport:
    """Stalks at two distinct points multiply, for every pair of total length <= max_length."""

    def outcome():
        pairs = 0
        for t1 in coweights_up_to(d.rank, max_length - 1):
            for t2 in coweights_up_to(d.rank, max_length - sum(t1)):
                joint = oscillator_stalk_char(d, [(t1, "x"), (t2, "y")])
                apart = oscillator_stalk_char(d, [(t1, "x")]) * oscillator_stalk_char(
                    d, [(t2, "y")]
                )
                if joint != apart:
                    return f"differs at {list(t1)} + {list(t2)}", False
                pairs += 1
        return f"{pairs} pairs", True

    return _checked(d, "factorization", None, "stalks multiply", outcome)


def purity_checks(d: RootDatum, max_length: int) -> List[CheckReport]:
    reports = []
    for n in range(1, max_length + 1):
        for pattern in collision_patterns(n):
            vanishes = max(pattern.blocks) >= 3

            def plo_outcome(pattern=pattern, vanishes=vanishes):
                char = plo_stalk_char(pattern).char
                if vanishes:
                    return str(char), not char
                return str(char), bool(char) and char.is_character()

            reports.append(
                _checked(
                    d,
                    "plo_stalk",
                    pattern.blocks,
                    "zero" if vanishes else "palindromic",
                    plo_outcome,
                )
            )
    for theta in coweights_up_to(d.rank, max_length):
        if not kostant_count(d, theta):
            continue

        def oscillator_outcome(theta=theta):
            stalk = oscillator_stalk_char(d, [(theta, "x")])
            return str(stalk.char), all(c.is_character() for c in stalk.graded().values())

        reports.append(
            _checked(d, "oscillator_purity", theta, "palindromic", oscillator_outcome)
        )
    reports.append(factorization_check(d, max_length))
    return reports


def hopf_checks(d: RootDatum, bound: Optional[int] = None) -> List[CheckReport]:
    def suite(name: str, run: Callable) -> CheckReport:
        def outcome():
            cb = build_chevalley(d)
            check = run(cb, default_bound(cb) if bound is None else bound)
            return ("pass" if check.passed else f"fail at {check.counterexample}"), check.passed

        return _checked(d, name, None, "pass", outcome)

    return [
        suite("jacobi", lambda cb, _: check_jacobi(cb)),
        suite("associativity", check_associativity),
        suite("hopf", check_hopf_axiom),
    ]


def run_verification(
    d: RootDatum,
    max_length: Optional[int] = None,
    thetas: Optional[Sequence[Coweight]] = None,
) -> List[CheckReport]:
    """Run every check in a fixed order; failures are reported, never skipped."""
    cb = build_chevalley(d)
    bound = default_bound(cb) if max_length is None else max_length
    reports: List[CheckReport] = []
    if thetas is None:
        sweep = list(d.positive_coroots)
        sweep += [
            theta
            for theta in coweights_up_to(d.rank, min(bound, NON_COROOT_LENGTH))
            if coroot_index(d, theta) is None and kostant_count(d, theta)
        ]
        dims = list(coweights_up_to(d.rank, bound))
    else:
        sweep = dims = list(thetas)
    for theta in sweep:
        logger.info("%s: diagonal checks at %s", d.label, list(theta))
        reports += diagonal_checks(d, theta)
    for theta in dims:
        reports.append(dimension_check(d, theta))
    reports += purity_checks(d, min(bound, NON_COROOT_LENGTH))
    reports += hopf_checks(d, bound)
    failed = [r for r in reports if not r.passed]
    logger.info("%s: %d checks, %d failed", d.label, len(reports), len(failed))
    return reports
