"""Exact integer arithmetic: factorization, p-adic valuations, the Moebius
function, divisor and prime enumeration.

Everything runs on plain Python integers, so all values are arbitrary
precision. Factorization is deterministic trial division, which is more than
enough for the magnitudes this library handles; there is no probabilistic
fallback to tune.
"""

from __future__ import annotations

from math import isqrt

__all__ = [
    "is_prime",
    "factorize",
    "valuation",
    "moebius",
    "divisors",
    "primes_up_to",
]

# Deterministic Miller-Rabin witness set, valid for every n below
# 3_317_044_064_679_887_385_961_981 (far beyond anything produced here).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test for non-negative integers."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as ascending (prime, exponent) pairs.

    factorize(1) is the empty list.
    """
    if n < 1:
        raise ValueError(f"cannot factorize {n}; expected a positive integer")
    pairs = []
    m = n
    for p in (2, 3):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            pairs.append((p, e))
    # remaining candidates have the form 6k +/- 1
    d = 5
    step = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            pairs.append((d, e))
        d += step
        step = 6 - step
    if m > 1:
        pairs.append((m, 1))
    return pairs


def valuation(p: int, n: int) -> int:
    """Largest e such that p**e divides n, for prime p and n >= 1."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError(f"valuation undefined for {n}; expected n >= 1")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def moebius(n: int) -> int:
    """Moebius function: 0 unless n is squarefree, else (-1)**(prime count)."""
    if n < 1:
        raise ValueError(f"moebius undefined for {n}; expected n >= 1")
    pairs = factorize(n)
    if any(e > 1 for _, e in pairs):
        return 0
    return -1 if len(pairs) % 2 else 1


def divisors(n: int) -> list[int]:
    """All divisors of n >= 1 in ascending order, including 1 and n."""
    if n < 1:
        raise ValueError(f"divisors undefined for {n}; expected n >= 1")
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def primes_up_to(bound: int) -> list[int]:
    """All primes <= bound, ascending (empty for bound < 2)."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [p for p in range(2, bound + 1) if sieve[p]]
