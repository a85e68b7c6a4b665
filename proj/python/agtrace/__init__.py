"""AG trace codes over extension field towers.

Construction of algebraic-geometric codes over F_{q^m}, their q-ary trace
codes, exact dimension computation, kernel / Artin-Schreier subspace
structure, Delsarte duality and character-sum bound checks.
"""

from ._core import (
    AgtraceError,
    CurveModel,
    Divisor,
    FieldTower,
    ParseError,
    char_sum_check,
    corollary_k_range,
    curve,
    divisor,
    goppa_case,
    is_artin_schreier_degenerate,
    one_point_divisor,
    predicted_dimension,
    run_cli,
    verify,
)

__all__ = [
    "AgtraceError",
    "CurveModel",
    "Divisor",
    "FieldTower",
    "ParseError",
    "char_sum_check",
    "corollary_k_range",
    "curve",
    "divisor",
    "goppa_case",
    "is_artin_schreier_degenerate",
    "one_point_divisor",
    "predicted_dimension",
    "run_cli",
    "verify",
]
