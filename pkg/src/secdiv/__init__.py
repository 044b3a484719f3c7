"""Exact counts and divisor classes for secant loci of linear series on curves."""

from secdiv.arith import Rational, binomial, factorial, inv_factorial
from secdiv.bn_counts import (
    castelnuovo_count,
    pointed_secant_count,
    secant_point_count,
    vandermonde_delta,
)
from secdiv.params import (
    ParamError,
    SecantParams,
    enumerate_params,
    nonempty_condition,
    residual_params,
    rho,
    rho_pointed,
    validate,
)

__all__ = [
    "ParamError",
    "Rational",
    "SecantParams",
    "binomial",
    "castelnuovo_count",
    "enumerate_params",
    "factorial",
    "inv_factorial",
    "nonempty_condition",
    "pointed_secant_count",
    "residual_params",
    "rho",
    "rho_pointed",
    "secant_point_count",
    "validate",
    "vandermonde_delta",
]

__version__ = "0.1.0"
