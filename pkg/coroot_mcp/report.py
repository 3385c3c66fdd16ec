"""Build the JSON documents shared by the CLI, fixtures and MCP tools (no I/O here)."""

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from .kgroup import (
    DiagonalClass,
    compute_S1,
    compute_S2,
    oscillator_diagonal,
    reconstruct_H_diagonal,
)
from .kostant import enumerate_kostant, kostant_count, kostant_generating_count
from .lefschetz import CollisionPattern, decompose_sl2, oscillator_stalk_char, plo_stalk_char
from .root_datum import (
    RootDatum,
    coroot_index,
    coweights_up_to,
    height,
    langlands_dual,
)
from .uea import (
    ChevalleyBasis,
    PBWElement,
    TensorElement,
    comultiply,
    multiply,
    pbw_basis,
    product_dimension,
    render_monomial,
    weight_space_dim,
)

SCHEMA_VERSION = 1


def envelope(command: str, body: Dict[str, Any]) -> Dict[str, Any]:
    return {"schema": SCHEMA_VERSION, "command": command, **body}


def dumps(doc: Dict[str, Any]) -> str:
    """Deterministic JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


@dataclass(frozen=True)
class CheckReport:
    check: str
    group: str
    theta: Optional[Tuple[int, ...]]
    expected: str
    computed: str
    passed: bool

    def to_json(self) -> Dict[str, Any]:
        return {
            "check": self.check,
            "group": self.group,
            "theta": list(self.theta) if self.theta is not None else None,
            "expected": self.expected,
            "computed": self.computed,
            "passed": self.passed,
        }


# -- payloads -------------------------------------------------------------------


def roots_payload(d: RootDatum) -> Dict[str, Any]:
    dual = langlands_dual(d)
    return {
        "type": d.label,
        "dual_type": dual.label,
        "cartan": [list(row) for row in d.cartan],
        "coroots": [
            {
                "index": k + 1,
                "coroot": list(c),
                "height": height(c),
                "root": list(d.positive_roots[k]),
            }
            for k, c in enumerate(d.positive_coroots)
        ],
    }


def kostant_payload(
    d: RootDatum, theta: Sequence[int], max_parts: Optional[int] = None
) -> Dict[str, Any]:
    """All partitions are counted; only those with at most max_parts parts are listed."""
    partitions = enumerate_kostant(d, theta, max_parts)
    body = {
        "type": d.label,
        "theta": list(theta),
        "count": kostant_count(d, theta),
        "generating_count": kostant_generating_count(d, theta),
        "partitions": [k.to_json(d) for k in partitions],
    }
    if max_parts is not None:
        body["max_parts"] = max_parts
        body["listed"] = len(partitions)
    return body


def plo_stalk_payload(pattern: CollisionPattern) -> Dict[str, Any]:
    stalk = plo_stalk_char(pattern)
    body = {"pattern": list(pattern.blocks), **stalk.to_json()}
    body["vanishes"] = not stalk.char
    if stalk.char:
        body["sl2"] = decompose_sl2(stalk.char).to_json()
    return body


def oscillator_payload(
    d: RootDatum, config: Iterable[Tuple[Sequence[int], str]]
) -> Dict[str, Any]:
    config = list(config)
    stalk = oscillator_stalk_char(d, config)
    return {
        "type": d.label,
        "config": [{"theta": list(theta), "point": label} for theta, label in config],
        **stalk.to_json(),
        "sl2": decompose_sl2(stalk.char).to_json(),
        "sl2_by_length": {
            str(l): decompose_sl2(c).to_json() for l, c in stalk.graded().items()
        },
    }


def _diagonal_columns(c: DiagonalClass) -> Dict[str, int]:
    columns = {"Qℓ(0)": c.poly.coefficient(0), "Qℓ(1)": c.poly.coefficient(1)}
    columns.update(c.to_json())
    return columns


def diag_payload(d: RootDatum, theta: Sequence[int]) -> Dict[str, Any]:
    s1 = compute_S1(d, theta)
    s2 = compute_S2(d, theta)
    return {
        "theta": list(theta),
        "is_coroot": coroot_index(d, theta) is not None,
        "S1": _diagonal_columns(s1),
        "S2": _diagonal_columns(s2),
        "H_diag": _diagonal_columns(s1 - s2),
        "oscillator_diag": _diagonal_columns(oscillator_diagonal(d, theta)),
        "sl2": reconstruct_H_diagonal(d, theta).to_json(),
    }


def dims_payload(d: RootDatum, cb: ChevalleyBasis, max_length: int) -> Dict[str, Any]:
    rows = []
    for theta in coweights_up_to(d.rank, max_length):
        rows.append(
            {
                "theta": list(theta),
                "dim": weight_space_dim(cb, theta),
                "kostant": kostant_count(d, theta),
                "product_dim": product_dimension(cb, theta),
            }
        )
    return {"type": d.label, "dual_type": cb.label, "max_length": max_length, "rows": rows}


def basis_payload(cb: ChevalleyBasis, theta: Sequence[int]) -> List[str]:
    return [render_monomial(m) for m in pbw_basis(cb, theta)]


def element_payload(x: PBWElement) -> Dict[str, Any]:
    return {"terms": x.to_json(), "expr": str(x)}


def product_payload(cb: ChevalleyBasis, lhs: PBWElement, rhs: PBWElement) -> Dict[str, Any]:
    return {
        "lhs": element_payload(lhs),
        "rhs": element_payload(rhs),
        "product": element_payload(multiply(cb, lhs, rhs)),
    }


def coproduct_payload(cb: ChevalleyBasis, x: PBWElement) -> Dict[str, Any]:
    delta: TensorElement = comultiply(cb, x)
    return {"element": element_payload(x), "coproduct": delta.to_json()}


def checks_payload(d: RootDatum, reports: Sequence[CheckReport]) -> Dict[str, Any]:
    return {
        "type": d.label,
        "passed": all(r.passed for r in reports),
        "total": len(reports),
        "failed": sum(not r.passed for r in reports),
        "checks": [r.to_json() for r in reports],
    }


# -- markdown -------------------------------------------------------------------


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, (list, tuple)):
        return "(" + ",".join(str(v) for v in value) + ")"
    if isinstance(value, dict):
        return ", ".join(f"{k}: {_cell(v)}" for k, v in value.items()) or "0"
    if isinstance(value, Fraction):
        return str(value)
    return str(value)


def _flatten(row: Dict[str, Any], prefix: str = "") -> Dict[str, Any]:
    flat: Dict[str, Any] = {}
    for key, value in row.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict) and value and all(k.startswith("Qℓ(") for k in value):
            flat.update(_flatten(value, name + " "))
        else:
            flat[name] = value
    return flat


def _table(rows: Sequence[Dict[str, Any]]) -> List[str]:
    flat = [_flatten(r) for r in rows]
    columns: List[str] = []
    for r in flat:
        for key in r:
            if key not in columns:
                columns.append(key)
    lines = ["| " + " | ".join(columns) + " |", "|" + "---|" * len(columns)]
    for r in flat:
        lines.append("| " + " | ".join(_cell(r.get(c)) for c in columns) + " |")
    return lines


def render_markdown(doc: Dict[str, Any]) -> str:
    """Scalars become a bullet list, lists of objects become tables."""
    lines = [f"# {doc.get('command', 'report')}", ""]
    tables = []
    for key in sorted(doc):
        value = doc[key]
        if key == "command":
            continue
        if isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            tables.append((key, value))
        elif isinstance(value, dict) and value and all(isinstance(v, dict) for v in value.values()):
            tables.append((key, [{"": k, **v} for k, v in value.items()]))
        else:
            lines.append(f"- **{key}**: {_cell(value)}")
    for key, rows in tables:
        lines += ["", f"## {key}", ""]
        lines += _table(rows)
    return "\n".join(lines) + "\n"
