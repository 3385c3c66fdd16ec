"""Helpers shared by the tool modules."""

import json
from typing import Any

from ..root_datum import RootDatum, build_root_datum, parse_group_type


def load_datum(family: str, rank: int) -> RootDatum:
    return build_root_datum(parse_group_type(family, rank))


def to_json(result: Any) -> str:
    return json.dumps(result, indent=2, ensure_ascii=False)


def error_json(exc: Exception) -> str:
    return json.dumps({"error": str(exc)}, indent=2, ensure_ascii=False)
