"""Generator maps on the positive integers, and finite words over them.

Two families of maps, parametrised by a prime p and a level t >= 0, act on
the p-adic valuation v of an argument and touch nothing else:

    bump (kind "g"): multiply n by p exactly when v == t (v becomes t + 1)
    cap  (kind "h"): reduce the p-part to p**t whenever v >= t

Words store their generators in application order: index 0 acts first. Any
rendering in the usual right-to-left composition notation must reverse the
list.

Exact equality of two words over all n is not decidable here; equality is
tested on a prefix 1..N and a disagreement is returned as a witness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .arith import is_prime, primes_up_to

__all__ = [
    "BUMP",
    "CAP",
    "Generator",
    "Word",
    "Witness",
    "eval_generator",
    "eval_word",
    "eval_range",
    "equal_upto",
    "normal_form",
    "is_normal_shape",
    "random_word",
]

BUMP = "g"
CAP = "h"


@dataclass(frozen=True)
class Generator:
    """One bump or cap map, identified by (kind, prime, level)."""

    kind: str
    prime: int
    level: int

    def __post_init__(self):
        if self.kind not in (BUMP, CAP):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if not is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")
        if self.level < 0:
            raise ValueError(f"level must be >= 0, got {self.level}")

    @classmethod
    def bump(cls, prime: int, level: int) -> "Generator":
        return cls(BUMP, prime, level)

    @classmethod
    def cap(cls, prime: int, level: int) -> "Generator":
        return cls(CAP, prime, level)

    def __repr__(self):
        return f"{self.kind}({self.prime},{self.level})"


def eval_generator(gen: Generator, n: int) -> int:
    if n < 1:
        raise ValueError(f"generators act on n >= 1, got {n}")
    p = gen.prime
    v = 0
    m = n
    while m % p == 0:
        m //= p
        v += 1
    if gen.kind == BUMP:
        return p * n if v == gen.level else n
    return n if v < gen.level else m * p**gen.level


@dataclass(frozen=True)
class Word:
    """A finite composition of generators, applied left to right."""

    gens: tuple[Generator, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(self.gens))

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def primes(self) -> set[int]:
        return {g.prime for g in self.gens}

    def as_map(self):
        return lambda n: eval_word(self, n)

    def __repr__(self):
        return "Word[" + " ".join(repr(g) for g in self.gens) + "]"


def eval_word(word: Word, n: int) -> int:
    if n < 1:
        raise ValueError(f"words act on n >= 1, got {n}")
    for gen in word.gens:
        n = eval_generator(gen, n)
    return n


def eval_range(word: Word, max_n: int) -> list[int]:
    """Values of a word on 1..max_n (index 0 holds the image of 1).

    One pass per generator over the whole range; the valuation tests reduce
    to two remainders, which keeps large sweeps affordable.
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    vals = list(range(1, max_n + 1))
    for gen in word.gens:
        p = gen.prime
        pt = p**gen.level
        pt1 = pt * p
        if gen.kind == BUMP:
            vals = [m * p if m % pt == 0 and m % pt1 else m for m in vals]
        else:
            out = []
            append = out.append
            for m in vals:
                while m % pt1 == 0:
                    m //= p
                append(m)
            vals = out
    return vals


@dataclass(frozen=True)
class Witness:
    """Smallest point where two evaluations disagree."""

    n: int
    left: int
    right: int


def equal_upto(w1: Word, w2: Word, max_n: int) -> Witness | None:
    """None when the words agree on all of 1..max_n, else the first witness."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    a = eval_range(w1, max_n)
    b = eval_range(w2, max_n)
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return Witness(i + 1, x, y)
    return None


def normal_form(word: Word) -> Word:
    """Rewrite a word so every bump precedes every cap in application order.

    Caps commute with everything except a bump of the same prime and level;
    pushing a cap past such a bump raises the cap's level by one. Caps of one
    prime collapse to the smallest level. Bumps are grouped by ascending
    prime with their relative order per prime preserved (same-prime bumps do
    not commute in general, so no order inside a prime block is canonical).

    The result is semantically equal to the input; equality of distinct
    normal forms is still possible and must be tested by evaluation.
    """
    bumps: dict[int, list[Generator]] = {}
    caps: dict[int, int] = {}
    for gen in word.gens:
        if gen.kind == CAP:
            cur = caps.get(gen.prime)
            caps[gen.prime] = gen.level if cur is None else min(cur, gen.level)
        else:
            lvl = caps.get(gen.prime)
            if lvl is not None and lvl == gen.level:
                caps[gen.prime] = lvl + 1
            bumps.setdefault(gen.prime, []).append(gen)
    gens: list[Generator] = []
    for p in sorted(bumps):
        gens.extend(bumps[p])
    for p in sorted(caps):
        gens.append(Generator.cap(p, caps[p]))
    return Word(tuple(gens))


def is_normal_shape(word: Word) -> bool:
    """Syntactic check: bumps first (primes non-decreasing), then caps with
    strictly ascending primes (at most one cap per prime)."""
    kinds = [g.kind for g in word.gens]
    split = len(kinds)
    for i, k in enumerate(kinds):
        if k == CAP:
            split = i
            break
    head, tail = word.gens[:split], word.gens[split:]
    if any(g.kind != BUMP for g in head) or any(g.kind != CAP for g in tail):
        return False
    head_primes = [g.prime for g in head]
    if head_primes != sorted(head_primes):
        return False
    tail_primes = [g.prime for g in tail]
    return tail_primes == sorted(set(tail_primes))


def random_word(seed: int, length: int, max_prime: int, max_level: int) -> Word:
    """Deterministic pseudo-random word for property sweeps."""
    if length < 0:
        raise ValueError("length must be >= 0")
    primes = primes_up_to(max_prime)
    if length > 0 and not primes:
        raise ValueError(f"no primes <= {max_prime}")
    rng = random.Random(seed)
    gens = tuple(
        Generator(
            rng.choice((BUMP, CAP)),
            rng.choice(primes),
            rng.randint(0, max_level),
        )
        for _ in range(length)
    )
    return Word(gens)
