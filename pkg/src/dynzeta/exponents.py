"""Per-prime exponent descriptions of time-change maps, and finite-precision
membership refutation.

A map on the positive integers that preserves realizability acts prime by
prime: in the factorization of its argument, each prime's exponent is
rewritten by a function of that exponent alone, and nothing mixes across
primes. A spec stores finitely many such exponent functions; every unmapped
prime keeps its exponent unchanged. An exponent function is either

    bounded:   explicitly listed leading values, constant beyond them
               (the constant being the last listed value), or
    unbounded: a table of leading values with no extrapolation rule at all;
               asking beyond the table is a hard error rather than a guess.

A valid spec has every exponent function non-decreasing, and bounded below
by the identity (value >= index) on the whole table for unbounded shapes,
respectively up to the eventual value for bounded ones.

Membership testing is one-sided: a single-orbit time change that fails the
realizability check refutes membership conclusively, while passing every
probe proves nothing. The API therefore never answers "is a member".
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable, Mapping

from .arith import factorize, is_prime, primes_up_to, valuation
from .sequences import RealizabilityVerdict, check_realizable
from .words import Word, eval_word

__all__ = [
    "BOUNDED",
    "UNBOUNDED",
    "ExponentFunction",
    "ExponentSpec",
    "TableRangeError",
    "SpecViolation",
    "validate_spec",
    "apply_spec",
    "spec_from_word",
    "PreimageStructure",
    "preimage_structure",
    "MembershipWitness",
    "MembershipReport",
    "membership_test",
    "ClaimResult",
    "DivisibilityReport",
    "check_divisibility_properties",
]

BOUNDED = "bounded"
UNBOUNDED = "unbounded"

NON_DECREASING = "non-decreasing"
LOWER_BOUND = "exponent-lower-bound"


class TableRangeError(ValueError):
    """An unbounded-shape table was asked beyond its last entry."""

    def __init__(self, prime: int, exponent: int, bound: int):
        self.prime = prime
        self.exponent = exponent
        self.bound = bound
        super().__init__(
            f"table for prime {prime} covers exponents 0..{bound}, asked for {exponent}"
        )


@dataclass(frozen=True)
class ExponentFunction:
    """One prime's exponent function, as listed values plus a shape tag."""

    shape: str
    values: tuple[int, ...]

    def __post_init__(self):
        if self.shape not in (BOUNDED, UNBOUNDED):
            raise ValueError(f"unknown shape {self.shape!r}")
        values = tuple(int(v) for v in self.values)
        if not values:
            raise ValueError("an exponent function needs at least the value at 0")
        if any(v < 0 for v in values):
            raise ValueError(f"exponent values must be >= 0, got {values}")
        object.__setattr__(self, "values", values)

    @classmethod
    def bounded(cls, values) -> "ExponentFunction":
        return cls(BOUNDED, tuple(values))

    @classmethod
    def unbounded(cls, values) -> "ExponentFunction":
        return cls(UNBOUNDED, tuple(values))

    @property
    def table_bound(self) -> int:
        return len(self.values) - 1

    @property
    def eventual(self) -> int:
        """The constant value a bounded function takes beyond its table."""
        if self.shape != BOUNDED:
            raise ValueError("only bounded functions have an eventual value")
        return self.values[-1]

    def value(self, v: int, prime: int | None = None) -> int:
        if v < 0:
            raise ValueError(f"exponents are >= 0, got {v}")
        if v < len(self.values):
            return self.values[v]
        if self.shape == BOUNDED:
            return self.values[-1]
        raise TableRangeError(prime if prime is not None else -1, v, self.table_bound)

    def is_identity_table(self) -> bool:
        return all(d == i for i, d in enumerate(self.values))


@dataclass(frozen=True)
class ExponentSpec:
    """Finitely many per-prime exponent functions; other primes are identity."""

    functions: Mapping[int, ExponentFunction]

    def __post_init__(self):
        funcs = dict(self.functions)
        for p in funcs:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "functions", {p: funcs[p] for p in sorted(funcs)})

    def primes(self) -> list[int]:
        return list(self.functions)


@dataclass(frozen=True)
class SpecViolation:
    """One broken validity condition, located by prime and table index."""

    prime: int
    condition: str  # NON_DECREASING or LOWER_BOUND
    index: int
    message: str


def validate_spec(spec: ExponentSpec) -> list[SpecViolation]:
    """All validity violations, in (prime, index) order; empty means valid.

    Finiteness is structural (a spec maps finitely many primes). The checks
    are monotonicity, and the lower bound d(i) >= i on the table for
    unbounded shapes and up to the eventual value for bounded ones.
    """
    out: list[SpecViolation] = []
    for p, fn in spec.functions.items():
        vals = fn.values
        for i in range(1, len(vals)):
            if vals[i] < vals[i - 1]:
                out.append(
                    SpecViolation(
                        p, NON_DECREASING, i,
                        f"prime {p}: value {vals[i]} at index {i} drops below "
                        f"{vals[i - 1]} at index {i - 1}",
                    )
                )
        limit = len(vals) - 1 if fn.shape == UNBOUNDED else min(len(vals) - 1, vals[-1])
        for i in range(limit + 1):
            if vals[i] < i:
                out.append(
                    SpecViolation(
                        p, LOWER_BOUND, i,
                        f"prime {p}: value {vals[i]} at index {i} is below the index",
                    )
                )
    return out


def apply_spec(spec: ExponentSpec, n: int) -> int:
    """Evaluate the map a spec describes: push each prime exponent of n
    through its exponent function and recompose. Unmapped primes pass
    through untouched; unbounded tables raise beyond their range."""
    if n < 1:
        raise ValueError(f"the map acts on n >= 1, got {n}")
    rest = n
    out = 1
    for p, fn in spec.functions.items():
        v = 0
        while rest % p == 0:
            rest //= p
            v += 1
        out *= p ** fn.value(v, p)
    return out * rest


def spec_from_word(word: Word, max_prime: int, max_level: int) -> ExponentSpec:
    """Tabulate the exponent functions of a word by evaluating it on prime
    powers: the table for p records the valuation of the image of p**v.

    Every prime up to max_prime is tabulated for v = 0..max_level. The tables
    record observed exponents only and carry no claim about larger exponents,
    so they are stored in the unbounded (no extrapolation) shape.
    """
    if max_level < 0:
        raise ValueError("max_level must be >= 0")
    stray = [p for p in word.primes() if p > max_prime]
    if stray:
        raise ValueError(f"word touches primes {sorted(stray)} above {max_prime}")
    funcs = {}
    for p in primes_up_to(max_prime):
        table = tuple(
            valuation(p, eval_word(word, p**v)) for v in range(max_level + 1)
        )
        funcs[p] = ExponentFunction.unbounded(table)
    return ExponentSpec(funcs)


@dataclass(frozen=True)
class PreimageStructure:
    """Shape of {n <= max_n : k divides f(n)} at precision max_n.

    The set is empty, or the multiples of a divisor step of k, or neither
    (recorded with the first place the progression pattern breaks).
    """

    outcome: str  # "empty", "progression", "violation"
    k: int
    max_n: int
    step: int | None = None
    witness: int | None = None

    @classmethod
    def empty(cls, k, max_n):
        return cls("empty", k, max_n)

    @classmethod
    def progression(cls, k, max_n, step):
        return cls("progression", k, max_n, step=step)

    @classmethod
    def violation(cls, k, max_n, witness):
        return cls("violation", k, max_n, witness=witness)


def preimage_structure(f: Callable[[int], int], k: int, max_n: int) -> PreimageStructure:
    """Classify the preimage of the multiples of k under f, up to max_n."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if max_n < k:
        raise ValueError(f"max_n = {max_n} must be at least k = {k}")
    hits = [f(n) % k == 0 for n in range(1, max_n + 1)]
    try:
        step = hits.index(True) + 1
    except ValueError:
        return PreimageStructure.empty(k, max_n)
    if k % step != 0:
        return PreimageStructure.violation(k, max_n, step)
    for n in range(1, max_n + 1):
        if hits[n - 1] != (n % step == 0):
            return PreimageStructure.violation(k, max_n, n)
    return PreimageStructure.progression(k, max_n, step)


@dataclass(frozen=True)
class MembershipWitness:
    """A single-orbit probe length together with its failed verdict."""

    k: int
    verdict: RealizabilityVerdict


@dataclass(frozen=True)
class MembershipReport:
    """Result of probing a map with single orbits of every length <= max_k.

    A witness conclusively refutes membership in the time-change monoid. No
    witness means exactly that: nothing was found at this precision.
    """

    max_k: int
    max_n: int
    witness: MembershipWitness | None = None

    @property
    def refuted(self) -> bool:
        return self.witness is not None

    def describe(self) -> str:
        if self.witness is None:
            return f"no violation up to k={self.max_k}, n={self.max_n} (inconclusive)"
        w = self.witness
        return f"refuted by orbit length k={w.k}: {w.verdict.describe()}"


def membership_test(f: Callable[[int], int], max_k: int, max_n: int) -> MembershipReport:
    """Probe f with every single-orbit system of length k <= max_k.

    The time change of one orbit of length k by f counts k at each n with
    k | f(n); the smallest k whose probe fails realizability is returned.
    """
    if max_k < 1 or max_n < 1:
        raise ValueError("max_k and max_n must be >= 1")
    values = []
    for n in range(1, max_n + 1):
        m = f(n)
        if not isinstance(m, int) or m < 1:
            raise ValueError(f"map produced {m!r} at n={n}; expected an integer >= 1")
        values.append(m)
    for k in range(1, max_k + 1):
        probe = [k if v % k == 0 else 0 for v in values]
        verdict = check_realizable(probe)
        if not verdict.passed:
            return MembershipReport(max_k, max_n, MembershipWitness(k, verdict))
    return MembershipReport(max_k, max_n)


@dataclass(frozen=True)
class ClaimResult:
    holds: bool
    counterexample: tuple | None = None


@dataclass(frozen=True)
class DivisibilityReport:
    """First counterexamples, if any, to three divisibility laws every
    realizability-preserving map obeys:

      divides:       m | n implies f(m) | f(n)            (witness (m, n))
      coprime_lcm:   gcd(m,n) = 1 implies f(mn) = lcm(f(m), f(n))
      prime_support: every prime of f(n)/f(1) divides n   (witness (q, n))
    """

    max_n: int
    divides: ClaimResult
    coprime_lcm: ClaimResult
    prime_support: ClaimResult

    @property
    def all_hold(self) -> bool:
        return self.divides.holds and self.coprime_lcm.holds and self.prime_support.holds


def check_divisibility_properties(f: Callable[[int], int], max_n: int) -> DivisibilityReport:
    """Exhaustively test the three divisibility laws on 1..max_n."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    values = [0]  # 1-based
    for n in range(1, max_n + 1):
        m = f(n)
        if not isinstance(m, int) or m < 1:
            raise ValueError(f"map produced {m!r} at n={n}; expected an integer >= 1")
        values.append(m)

    divides = ClaimResult(True)
    for n in range(1, max_n + 1):
        for m in range(1, n + 1):
            if n % m == 0 and values[n] % values[m] != 0:
                divides = ClaimResult(False, (m, n))
                break
        if not divides.holds:
            break

    coprime_lcm = ClaimResult(True)
    for m in range(1, max_n + 1):
        if not coprime_lcm.holds:
            break
        for n in range(m + 1, max_n // m + 1):
            if gcd(m, n) != 1:
                continue
            fm, fn = values[m], values[n]
            expected = fm * fn // gcd(fm, fn)
            if values[m * n] != expected:
                coprime_lcm = ClaimResult(False, (m, n))
                break

    prime_support = ClaimResult(True)
    base = {p: e for p, e in factorize(values[1])}
    for n in range(1, max_n + 1):
        for q, e in factorize(values[n]):
            if e > base.get(q, 0) and n % q != 0:
                prime_support = ClaimResult(False, (q, n))
                break
        if not prime_support.holds:
            break

    return DivisibilityReport(max_n, divides, coprime_lcm, prime_support)
