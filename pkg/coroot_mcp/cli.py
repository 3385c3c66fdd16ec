#!/usr/bin/env python3
"""
coroot - command-line front end for root data, Kostant partitions, oscillator stalks,
the diagonal S1/S2 computation and the Hopf algebra U(n).

Exit codes: 0 ok, 1 failed verification, 2 usage or validation error, 3 I/O error.
"""

import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .errors import CorootError, ValidationError
from .expressions import parse_element
from .lefschetz import CollisionPattern
from .report import (
    basis_payload,
    checks_payload,
    coproduct_payload,
    diag_payload,
    dims_payload,
    dumps,
    envelope,
    kostant_payload,
    oscillator_payload,
    plo_stalk_payload,
    product_payload,
    render_markdown,
    roots_payload,
)
from .root_datum import (
    Coweight,
    GroupType,
    RootDatum,
    build_root_datum,
    parse_group_type,
    parse_theta,
)
from .uea import build_chevalley, check_associativity, check_hopf_axiom, check_jacobi, default_bound
from .verify import run_verification

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3

FIXTURE_KINDS = ("roots", "kostant", "diag", "dims")


@dataclass(frozen=True)
class RunConfig:
    command: str
    group: Optional[GroupType] = None
    theta: Optional[Coweight] = None
    max_length: Optional[int] = None
    fmt: str = "json"
    out: Optional[Path] = None
    all_coroots: bool = False
    pattern: Optional[CollisionPattern] = None
    config: Tuple[Tuple[Coweight, str], ...] = ()
    action: Optional[str] = None
    checks: Tuple[str, ...] = ()
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    kind: Optional[str] = None

    def datum(self) -> RootDatum:
        if self.group is None:
            raise ValidationError(f"{self.command} needs --type and --rank")
        return build_root_datum(self.group)


def _int_list(text: str) -> List[int]:
    try:
        return [int(p) for p in text.split(",")]
    except ValueError:
        raise ValidationError(f"malformed integer list {text!r}") from None


def parse_config(text: str, rank: int) -> Tuple[Tuple[Coweight, str], ...]:
    """"1,1@x;0,1@y" -> (((1, 1), "x"), ((0, 1), "y"))."""
    entries = []
    for chunk in filter(None, (c.strip() for c in text.split(";"))):
        coords, sep, label = chunk.partition("@")
        if not sep or not label.strip():
            raise ValidationError(f"configuration entry {chunk!r} needs the form theta@point")
        entries.append((parse_theta(coords, rank), label.strip()))
    if not entries:
        raise ValidationError("empty configuration")
    return tuple(entries)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", dest="family", help="Group family A-G")
    common.add_argument("--rank", help="Rank of the simple group")
    common.add_argument("--format", dest="fmt", choices=("json", "markdown"), default="json")
    common.add_argument("--out", type=Path, help="Write output to this file instead of stdout")

    parser = argparse.ArgumentParser(
        prog="coroot",
        description="Coroot combinatorics: Kostant partitions, oscillator stalks, U(n)",
    )
    parser.add_argument("--verbose", "-v", action="count", default=0, help="Log to stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("roots", parents=[common], help="Positive roots and coroots")

    kostant = commands.add_parser("kostant", parents=[common], help="Kostant partitions of theta")
    kostant.add_argument("--theta", required=True, help="Comma-separated coordinates")

    plo = commands.add_parser("plo-stalk", parents=[common], help="Oscillator stalk characters")
    source = plo.add_mutually_exclusive_group(required=True)
    source.add_argument("--pattern", help="Collision multiplicities, e.g. 2,1")
    source.add_argument("--config", help="Points with coweights, e.g. '1,1@x;0,1@y'")

    diag = commands.add_parser("diag", parents=[common], help="S1, S2 and H on the diagonal")
    which = diag.add_mutually_exclusive_group(required=True)
    which.add_argument("--theta")
    which.add_argument("--all-coroots", action="store_true")

    uea = commands.add_parser("uea", help="The Hopf algebra U(n) of the dual group")
    actions = uea.add_subparsers(dest="action", required=True)
    dims = actions.add_parser("dims", parents=[common], help="Graded dimensions")
    dims.add_argument("--max-length", type=int, default=4)
    check = actions.add_parser("check", parents=[common], help="Jacobi, associativity, Hopf")
    check.add_argument("--jacobi", action="store_true")
    check.add_argument("--assoc", action="store_true")
    check.add_argument("--hopf", action="store_true")
    check.add_argument("--max-length", type=int)
    mul = actions.add_parser("mul", parents=[common], help="Multiply two elements")
    mul.add_argument("--lhs", required=True)
    mul.add_argument("--rhs", required=True)
    comul = actions.add_parser("comul", parents=[common], help="Comultiply an element")
    comul.add_argument("--expr", dest="lhs", required=True)
    basis = actions.add_parser("basis", parents=[common], help="PBW basis of a weight space")
    basis.add_argument("--theta", required=True)

    verify = commands.add_parser("verify", parents=[common], help="Run every identity check")
    verify.add_argument("--theta")
    verify.add_argument("--max-length", type=int)

    fixture = commands.add_parser("fixture", parents=[common], help="Write a golden fixture")
    fixture.add_argument("kind", choices=FIXTURE_KINDS)
    fixture.add_argument("--theta")
    fixture.add_argument("--max-length", type=int, default=4)

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Validate the group type first, then everything that depends on its rank."""
    group = None
    if args.family is not None or args.rank is not None:
        if args.family is None or args.rank is None:
            raise ValidationError("--type and --rank go together")
        group = parse_group_type(args.family, args.rank)
    rank = group.rank if group else None

    def theta_of(text: Optional[str]) -> Optional[Coweight]:
        if text is None:
            return None
        if rank is None:
            raise ValidationError("--theta needs --type and --rank")
        return parse_theta(text, rank)

    max_length = getattr(args, "max_length", None)
    if max_length is not None and max_length < 1:
        raise ValidationError(f"--max-length must be positive, got {max_length}")

    pattern = None
    if getattr(args, "pattern", None):
        pattern = CollisionPattern(tuple(_int_list(args.pattern)))
    config: Tuple[Tuple[Coweight, str], ...] = ()
    if getattr(args, "config", None):
        if rank is None:
            raise ValidationError("--config needs --type and --rank")
        config = parse_config(args.config, rank)

    checks = tuple(
        name for name in ("jacobi", "assoc", "hopf") if getattr(args, name, False)
    )
    return RunConfig(
        command=args.command,
        group=group,
        theta=theta_of(getattr(args, "theta", None)),
        max_length=max_length,
        fmt=args.fmt,
        out=args.out,
        all_coroots=getattr(args, "all_coroots", False),
        pattern=pattern,
        config=config,
        action=getattr(args, "action", None),
        checks=checks or ("jacobi", "assoc", "hopf"),
        lhs=getattr(args, "lhs", None),
        rhs=getattr(args, "rhs", None),
        kind=getattr(args, "kind", None),
    )


# -- commands -------------------------------------------------------------------


def cmd_roots(cfg: RunConfig) -> Dict[str, Any]:
    return roots_payload(cfg.datum())


def cmd_kostant(cfg: RunConfig) -> Dict[str, Any]:
    return kostant_payload(cfg.datum(), cfg.theta)


def cmd_plo_stalk(cfg: RunConfig) -> Dict[str, Any]:
    if cfg.pattern is not None:
        return plo_stalk_payload(cfg.pattern)
    return oscillator_payload(cfg.datum(), cfg.config)


def cmd_diag(cfg: RunConfig) -> Dict[str, Any]:
    d = cfg.datum()
    if cfg.all_coroots:
        return {"type": d.label, "rows": [diag_payload(d, c) for c in d.positive_coroots]}
    return {"type": d.label, **diag_payload(d, cfg.theta)}


def cmd_uea(cfg: RunConfig) -> Dict[str, Any]:
    d = cfg.datum()
    cb = build_chevalley(d)
    if cfg.action == "dims":
        return dims_payload(d, cb, cfg.max_length)
    if cfg.action == "basis":
        return {"dual_type": cb.label, "theta": list(cfg.theta), "basis": basis_payload(cb, cfg.theta)}
    if cfg.action == "mul":
        lhs, rhs = parse_element(cb, cfg.lhs), parse_element(cb, cfg.rhs)
        return {"dual_type": cb.label, **product_payload(cb, lhs, rhs)}
    if cfg.action == "comul":
        return {"dual_type": cb.label, **coproduct_payload(cb, parse_element(cb, cfg.lhs))}
    bound = default_bound(cb) if cfg.max_length is None else cfg.max_length
    selected = {
        "jacobi": lambda: check_jacobi(cb),
        "assoc": lambda: check_associativity(cb, bound),
        "hopf": lambda: check_hopf_axiom(cb, bound),
    }
    results = [selected[name]() for name in cfg.checks]
    return {
        "dual_type": cb.label,
        "bound": bound,
        "passed": all(r.passed for r in results),
        "checks": [r.to_json() for r in results],
    }


def cmd_verify(cfg: RunConfig) -> Dict[str, Any]:
    d = cfg.datum()
    thetas = [cfg.theta] if cfg.theta is not None else None
    if thetas and not any(cfg.theta):
        raise ValidationError("theta must be non-zero")
    return checks_payload(d, run_verification(d, cfg.max_length, thetas))


def cmd_fixture(cfg: RunConfig) -> Dict[str, Any]:
    if cfg.out is None:
        raise ValidationError("fixture needs --out")
    d = cfg.datum()
    if cfg.kind in ("kostant", "diag") and cfg.theta is None:
        raise ValidationError(f"{cfg.kind} fixtures need --theta")
    if cfg.kind == "roots":
        body = roots_payload(d)
    elif cfg.kind == "kostant":
        body = kostant_payload(d, cfg.theta)
    elif cfg.kind == "diag":
        body = diag_payload(d, cfg.theta)
    else:
        body = dims_payload(d, build_chevalley(d), cfg.max_length)
    return {"kind": cfg.kind, **body}


COMMANDS = {
    "roots": cmd_roots,
    "kostant": cmd_kostant,
    "plo-stalk": cmd_plo_stalk,
    "diag": cmd_diag,
    "uea": cmd_uea,
    "verify": cmd_verify,
    "fixture": cmd_fixture,
}


def render(cfg: RunConfig, doc: Dict[str, Any]) -> str:
    if cfg.fmt == "markdown" and cfg.command != "fixture":
        return render_markdown(doc)
    return dumps(doc)


def _configure_logging(verbosity: int) -> None:
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point for the coroot command line"""
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    try:
        cfg = config_from_args(args)
        command = cfg.command if cfg.action is None else f"{cfg.command} {cfg.action}"
        doc = envelope(command, COMMANDS[cfg.command](cfg))
        text = render(cfg, doc)
        if cfg.out is not None:
            cfg.out.write_text(text, encoding="utf-8")
            logger.info("wrote %s", cfg.out)
        else:
            sys.stdout.write(text)
    except CorootError as exc:
        print(f"coroot: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"coroot: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    if doc.get("passed") is False:
        return EXIT_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
