#!/usr/bin/env python3
"""Count sequences and realizability.

A sequence (a_n) can arise as the fixed-point counts of a dynamical system
only if its Moebius transform b_n is non-negative and divisible by n for
every n: b_n / n is then the number of closed orbits of length n. This walk
shows the transform, both failure modes, and the closure of realizable
sequences under disjoint union and Cartesian product.
"""

from dynzeta import (
    check_realizable,
    disjoint_union,
    fix_from_orbits,
    hadamard,
    mobius_transform,
    orbit_counts,
    reg,
)


def show(title, entries):
    verdict = check_realizable(entries)
    print(f"{title}: {entries}")
    print(f"  transform   : {mobius_transform(entries)}")
    print(f"  verdict     : {verdict.describe()}")
    if verdict.passed:
        print(f"  orbit counts: {orbit_counts(entries)}")
    print()


print("The full shift on 2 symbols has a_n = 2^n:")
show("2^n", [2**n for n in range(1, 9)])

print("One closed orbit of length 8 contributes k on multiples of k:")
show("reg_8", reg(8, 8))

print("A sequence that no system realizes: time-change reg_8 by n -> n^n.")
print("8 divides 4^4 and 6^6 but no other k^k with k <= 6, so the counts")
print("start (0,0,0,8,0,8): two orbits of length 4 would force 6 | b_6 = 8.")
show("reg_8 after n^n", [8 if k in (4, 6) else 0 for k in range(1, 7)])

print("Losing a fixed point is just as fatal, b_2 = -1 here:")
show("(1, 0)", [1, 0])

print("Unions add counts and products multiply them, and both stay realizable:")
a = fix_from_orbits([1, 2, 0, 1])
b = fix_from_orbits([0, 1, 1, 0])
show("a", a)
show("b", b)
show("a union b", disjoint_union(a, b))
show("a times b", hadamard(a, b))
