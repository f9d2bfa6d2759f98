"""Exact blow-up data for two-row Grassmannian quotients.

Thin wrapper over the compiled extension; see the functions on
:mod:`_grasscut` for the full surface.
"""

from _grasscut import (  # noqa: F401
    chart_json,
    chart_names,
    cross_ratio_check,
    essential_weights,
    fan_json,
    height,
    paves,
    pavings,
    types,
    verify_embedding,
    weight_monomials,
)

__all__ = [
    "chart_json",
    "chart_names",
    "cross_ratio_check",
    "essential_weights",
    "fan_json",
    "height",
    "paves",
    "pavings",
    "types",
    "verify_embedding",
    "weight_monomials",
]
