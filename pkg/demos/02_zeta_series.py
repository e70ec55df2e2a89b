#!/usr/bin/env python3
"""Zeta series with exact rational coefficients.

The zeta series of a system with counts (a_n) is exp(sum a_n z^n / n). For
realizable counts its coefficients are non-negative integers and it factors
as the Euler product over orbit lengths. The inverse direction recovers the
counts from a series and rejects anything that is not a zeta prefix.
"""

from fractions import Fraction

from dynzeta import (
    FixSource,
    Series,
    fix_from_zeta,
    is_zeta,
    series_mul,
    series_pow,
    zeta_from_fix,
)

shift = FixSource.geometric(2)
zeta = zeta_from_fix(shift, 10)
print("zeta of the full 2-shift (order 10), i.e. 1/(1-2z):")
print(" ", [str(c) for c in zeta.coeffs])
print("counts recovered:", fix_from_zeta(zeta))
print()

orbit3 = zeta_from_fix(FixSource.single_orbit(3), 9)
print("one orbit of length 3 gives 1/(1-z^3):")
print(" ", [str(c) for c in orbit3.coeffs])
print()

print("products of zeta series are zeta series (disjoint unions):")
product = series_mul(zeta_from_fix(FixSource.single_orbit(2), 9), orbit3)
print(" ", [str(c) for c in product.coeffs], "->", is_zeta(product).describe())
print()

print("adding zeta series leaves the class: 2/(1-2z) has constant term 2,")
doubled = Series.of([2 * c for c in zeta.coeffs])
print("  verdict:", is_zeta(doubled).describe())
print()

print("a rational function that is not a zeta series: (1-z^3)/(1-z)")
candidate = Series.of([1, 1, 1], order=6)
print("  verdict:", is_zeta(candidate).describe(), "(its third count would be -2)")
print()

print("rational powers stay exact, e.g. (1-2z^2)^(-1/2):")
root = series_pow(Series.of([1, 0, -2], order=8), Fraction(-1, 2))
print(" ", [str(c) for c in root.coeffs])
print("  its counts are integers (2^k at n = 2k) yet the divisibility")
print("  test still rejects it:", is_zeta(root).describe())
