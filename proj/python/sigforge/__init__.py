"""Exact signature functions of Seifert matrices."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    ParityViolation,
    ParseError,
    PreconditionError,
    VerificationFailure,
    alexander_polynomial,
    averaged_signature,
    hankel_realize,
    highdim_jump_polynomial,
    highdim_validate_polynomial,
    independence_certificate,
    jump_polynomial,
    lambda_coefficients,
    metabolic_peak,
    parity_determinant,
    signature,
    signature_float,
    validate,
    verify_metabolizer,
)


def step_function(rows, parity="classical"):
    """Breakpoints, interval values, point values and gap samples as a dict."""
    data = json.loads(_core.step_function_json(rows, parity))
    data["samples"] = [Fraction(s) for s in data["samples"]]
    return data


__all__ = [
    "ParityViolation",
    "ParseError",
    "PreconditionError",
    "VerificationFailure",
    "alexander_polynomial",
    "averaged_signature",
    "hankel_realize",
    "highdim_jump_polynomial",
    "highdim_validate_polynomial",
    "independence_certificate",
    "jump_polynomial",
    "lambda_coefficients",
    "metabolic_peak",
    "parity_determinant",
    "signature",
    "signature_float",
    "step_function",
    "validate",
    "verify_metabolizer",
]
