"""Compile a valid exponent spec into a generator word, together with the
explicit agreement set on which the word provably equals the target map.

Per prime, raising exponent t to its target is the job of the block

    bump(p, t), bump(p, t+1), ..., bump(p, target(t) - 1)

which multiplies n by p**(target(t) - t) exactly when the valuation of n is
t. Blocks for one prime are applied in descending t. Order matters: applied
ascending, a low block can raise a valuation into the firing range of a
later block and overshoot (targets 3 at exponent 1 and 5 at exponent 2
collide at level 3). Applied descending, a block only ever fires on
valuations it owns, because earlier blocks aim at strictly larger levels
and later blocks stay strictly below this block's target.

Bounded shapes additionally append a cap at the eventual value M after all
blocks. The cap is a no-op on exponents the blocks already settled (their
targets are <= M) and sends every larger exponent to M, so the compiled word
is exact for all n on bounded and defaulted primes. Unbounded tables promise
nothing beyond their range; the agreement set records that honestly instead
of extrapolating.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import valuation
from .exponents import BOUNDED, ExponentSpec, SpecViolation, apply_spec, validate_spec
from .words import Generator, Word, eval_range

__all__ = [
    "InvalidSpecError",
    "CompileResult",
    "Mismatch",
    "block_gadget",
    "compile_spec",
    "verify_compile",
]


class InvalidSpecError(ValueError):
    def __init__(self, violations: list[SpecViolation]):
        self.violations = violations
        details = "; ".join(v.message for v in violations)
        super().__init__(f"spec is not valid: {details}")


@dataclass(frozen=True)
class CompileResult:
    """A compiled word plus, per unbounded-table prime, the largest valuation
    the word is guaranteed on. Bounded and defaulted primes are exact
    everywhere and appear in no constraint."""

    word: Word
    agreement: dict[int, int]

    def admits(self, n: int) -> bool:
        """Whether n lies in the agreement set."""
        return all(valuation(p, n) <= bound for p, bound in self.agreement.items())


def block_gadget(prime: int, level: int, target: int) -> Word:
    """The bump run raising valuation `level` to `target` (empty if equal)."""
    if target < level:
        raise ValueError(f"target exponent {target} is below level {level}")
    return Word(tuple(Generator.bump(prime, t) for t in range(level, target)))


def compile_spec(spec: ExponentSpec) -> CompileResult:
    """Compile a valid spec into a word: per prime (ascending), blocks in
    descending level order; caps for bounded primes collected at the end.

    The caps commute with every other prime's bumps, so gathering them last
    keeps the word in bumps-then-caps shape without changing its meaning.
    """
    violations = validate_spec(spec)
    if violations:
        raise InvalidSpecError(violations)
    bumps: list[Generator] = []
    caps: list[Generator] = []
    agreement: dict[int, int] = {}
    for p, fn in spec.functions.items():
        if fn.shape == BOUNDED:
            eventual = fn.eventual
            top = len(fn.values) - 1
            while top > 0 and fn.values[top - 1] == eventual:
                top -= 1
            for t in range(top, -1, -1):
                bumps.extend(block_gadget(p, t, fn.value(t)).gens)
            caps.append(Generator.cap(p, eventual))
        else:
            for t in range(fn.table_bound, -1, -1):
                bumps.extend(block_gadget(p, t, fn.value(t)).gens)
            agreement[p] = fn.table_bound
    return CompileResult(Word(tuple(bumps + caps)), agreement)


@dataclass(frozen=True)
class Mismatch:
    n: int
    got: int
    expected: int


def verify_compile(result: CompileResult, spec: ExponentSpec, max_n: int) -> Mismatch | None:
    """Compare the compiled word against the spec on every n <= max_n inside
    the agreement set; None means they agree everywhere checked."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    got = eval_range(result.word, max_n)
    for n in range(1, max_n + 1):
        if not result.admits(n):
            continue
        expected = apply_spec(spec, n)
        if got[n - 1] != expected:
            return Mismatch(n, got[n - 1], expected)
    return None
