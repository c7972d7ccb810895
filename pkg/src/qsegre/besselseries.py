"""The alternating series with coefficients (-1)^n/([n]_q!)^2 and its formal
reciprocal.

The reciprocal's coefficient at z^n is, up to the same q-factorial-squared
denominator, the no-common-ascent pair polynomial; verify_reciprocal checks
that claim coefficient by coefficient.  q stays symbolic here: all work is in
rational functions, and specializing q is a caller convenience only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactalg import (ONE, QRationalFunction, TruncatedSeries, q_factorial,
                       series_reciprocal)
from .permstats import w_polynomial


def build_f(order: int) -> TruncatedSeries:
    """The truncated series whose z^n coefficient is (-1)^n / ([n]_q!)^2."""
    coeffs = []
    for n in range(order + 1):
        fact = q_factorial(n)
        num = ONE if n % 2 == 0 else -ONE
        coeffs.append(QRationalFunction(num, fact * fact))
    return TruncatedSeries(order, coeffs)


@dataclass(frozen=True)
class BesselCoefficients:
    order: int
    f: TruncatedSeries
    f_inv: TruncatedSeries


def bessel_coefficients(order: int) -> BesselCoefficients:
    """Series plus reciprocal, with the product-identity invariant checked."""
    f = build_f(order)
    f_inv = series_reciprocal(f)
    assert f * f_inv == TruncatedSeries.one(order)
    return BesselCoefficients(order, f, f_inv)


def verify_reciprocal(order: int, bound=None) -> list[bool]:
    """Entry n is True when coefficient n of the reciprocal equals
    W_n(q)/([n]_q!)^2 as reduced rational functions."""
    inverse = series_reciprocal(build_f(order))
    out = []
    for n in range(order + 1):
        fact = q_factorial(n)
        expected = QRationalFunction(w_polynomial(n, bound=bound), fact * fact)
        out.append(inverse.coeffs[n] == expected)
    return out
