"""Bessel/Hankel evaluation for complex argument and the Hankel bound checks."""

from helmstab.specfun.bounds import HankelBoundReport, certify_bounds, certify_many, weber_bound
from helmstab.specfun.hankel import (
    IMAG_CAP,
    SERIES_THRESHOLD,
    Z_CAP,
    EvalRegime,
    HankelOrder,
    RegimeKind,
    bessel_j,
    bessel_y,
    check_order,
    hankel1,
    hankel1_derivative,
    hankel1_in_regime,
    hankel1_orders,
    hankel2,
    regime_for,
)

__all__ = [
    "IMAG_CAP",
    "SERIES_THRESHOLD",
    "Z_CAP",
    "EvalRegime",
    "HankelBoundReport",
    "HankelOrder",
    "RegimeKind",
    "bessel_j",
    "bessel_y",
    "certify_bounds",
    "certify_many",
    "check_order",
    "hankel1",
    "hankel1_derivative",
    "hankel1_in_regime",
    "hankel1_orders",
    "hankel2",
    "regime_for",
    "weber_bound",
]
