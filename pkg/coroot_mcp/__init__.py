"""Coroot MCP - exact coroot combinatorics, oscillator stalks and U(n)"""

__all__ = ["build_root_datum", "build_chevalley", "run_verification"]


def __getattr__(name: str):
    if name == "build_root_datum":
        from .root_datum import build_root_datum

        return build_root_datum
    if name == "build_chevalley":
        from .uea import build_chevalley

        return build_chevalley
    if name == "run_verification":
        from .verify import run_verification

        return run_verification
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
