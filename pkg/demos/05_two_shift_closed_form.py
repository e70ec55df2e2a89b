#!/usr/bin/env python3
"""Time-changing the full 2-shift, exactly, against a candidate closed form.

The map that multiplies n by p whenever p divides n preserves realizability.
Applying it to the 2-shift (counts 2^n) gives counts 2^n off the multiples
of p and 2^(p*p*k) at n = p*k, which grow fast; exact big integers keep the
series honest. A tidy product formula has been suggested for the result:

    (1 - 2 z^p)^(-1/p) * (1 - 2 z)^(-1) * (1 - 2^p z^p)

This script computes both sides to order 30 and prints the comparison rather
than assuming the formula. The direct side is realizable (as it must be);
the product disagrees with it from n = p on, and from z^p onward it is not
even integral, so whatever the product describes, it is not this series.
"""

from dynzeta import two_shift_comparison

for p in (2, 3):
    report = two_shift_comparison(p, 30)
    print(f"multiplier prime p = {p}")
    print("  time-changed counts start:", list(report.fix_entries[:6]), "...")
    print("  realizability of the counts:", report.realizability.describe())
    print("  first coefficient mismatch at n =", report.first_mismatch)
    print("  n | direct | closed form")
    for n, direct, closed, equal in report.rows()[:8]:
        marker = " " if equal else "*"
        print(f"  {n} {marker} {direct} | {closed}")
    tail = report.rows()[-1]
    print(f"  ... up to n=30, e.g. direct coefficient there: {tail[1]}")
    print()
