#!/usr/bin/env python3
"""Deciding non-membership: preimages, divisibility laws, orbit probes.

Whether a map preserves realizability for every system cannot be settled by
finite computation, but a failure can. Three finite tools give refutations:

  * the preimage of the multiples of k must be empty or a full progression
    whose step divides k,
  * the map must respect divisibility, send coprime products to lcms, and
    introduce no new primes,
  * time-changing a single orbit of length k must stay realizable.

Each tool reports the smallest witness it finds; finding none proves
nothing, and the API says so.
"""

from dynzeta import (
    Generator,
    check_divisibility_properties,
    eval_generator,
    membership_test,
    preimage_structure,
)

tower = lambda n: n**n
successor = lambda n: n + 1
bump20 = lambda n: eval_generator(Generator.bump(2, 0), n)
cap21 = lambda n: eval_generator(Generator.cap(2, 1), n)

print("preimage structure of {n : k | f(n)} at precision 2000:")
for label, f, k in [
    ("bump(2,0), k=2", bump20, 2),
    ("bump(2,1), k=4", lambda n: eval_generator(Generator.bump(2, 1), n), 4),
    ("cap(2,1),  k=8", cap21, 8),
    ("n -> n+1,  k=3", successor, 3),
]:
    s = preimage_structure(f, k, 2000)
    body = {"empty": "empty", "progression": f"multiples of {s.step}", "violation": f"broken at n={s.witness}"}
    print(f"  {label}: {body[s.outcome]}")
print()

print("divisibility laws on n <= 60:")
for label, f in [("identity", lambda n: n), ("n -> n^n", tower), ("n -> n+1", successor)]:
    r = check_divisibility_properties(f, 6 if label == "n -> n^n" else 60)
    verdicts = []
    for claim, res in [("divides", r.divides), ("coprime-lcm", r.coprime_lcm), ("prime-support", r.prime_support)]:
        verdicts.append(claim if res.holds else f"{claim} FAILS at {res.counterexample}")
    print(f"  {label}: " + "; ".join(verdicts))
print()

print("single-orbit probes (a witness is conclusive, silence is not):")
for label, f in [
    ("n -> n^n", tower),
    ("n -> n+1", successor),
    ("bump(2,0)", bump20),
    ("cap(2,1)", cap21),
]:
    print(f"  {label}: {membership_test(f, 24, 200).describe()}")
