"""Search and verification for perfect powers in omitted-term products.

Thin wrapper over the compiled _lacuna extension; exact values cross the
boundary as strings.
"""
from _lacuna import (  # noqa: F401
    __version__,
    curve_family,
    decompose,
    kb_match,
    lambda_set,
    reflect,
    replay_table,
    search,
    torsion,
    verify,
)

__all__ = [
    "curve_family",
    "decompose",
    "kb_match",
    "lambda_set",
    "reflect",
    "replay_table",
    "search",
    "torsion",
    "verify",
]
