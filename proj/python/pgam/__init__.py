"""Exact q-adic factorials and the generalized p-adic gamma function.

The heavy lifting lives in the _pgam extension; this package just re-exports
its surface.
"""

from pgam._pgam import (  # noqa: F401
    Context,
    PadicInt,
    PrecisionError,
    exponents,
    factorial_p,
    factorial_q,
    gamma_p,
    gamma_p_nat,
    gamma_q,
    gamma_q_at,
    gamma_q_nat,
    gf_compare,
    is_prime,
    mahler_coefficients,
    mahler_evaluate,
    ota_gamma,
    residue_rep,
    verify,
    wilson_check,
)

__all__ = [
    "Context",
    "PadicInt",
    "PrecisionError",
    "exponents",
    "factorial_p",
    "factorial_q",
    "gamma_p",
    "gamma_p_nat",
    "gamma_q",
    "gamma_q_at",
    "gamma_q_nat",
    "gf_compare",
    "is_prime",
    "mahler_coefficients",
    "mahler_evaluate",
    "ota_gamma",
    "residue_rep",
    "verify",
    "wilson_check",
]

__version__ = "0.1.0"
