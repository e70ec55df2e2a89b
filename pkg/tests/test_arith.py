import pytest
from hypothesis import given, strategies as st

from dynzeta.arith import divisors, factorize, is_prime, moebius, primes_up_to, valuation

from oracles import mu


@pytest.mark.parametrize(
    "n, expected",
    [
        (1, []),
        (12, [(2, 2), (3, 1)]),
        (46656, [(2, 6), (3, 6)]),
        (97, [(97, 1)]),
        (2**20, [(2, 20)]),
    ],
)
def test_factorize_examples(n, expected):
    assert factorize(n) == expected


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(0)


def test_factorize_reconstructs_everything_up_to_10k():
    for n in range(1, 10001):
        pairs = factorize(n)
        product = 1
        for p, e in pairs:
            assert is_prime(p)
            assert e >= 1
            product *= p**e
        assert product == n
        assert [p for p, _ in pairs] == sorted(p for p, _ in pairs)


@given(st.integers(min_value=1, max_value=10**9))
def test_factorize_round_trip(n):
    product = 1
    for p, e in factorize(n):
        product *= p**e
    assert product == n


@pytest.mark.parametrize("p, n, expected", [(2, 8, 3), (3, 8, 0), (2, 46656, 6)])
def test_valuation_examples(p, n, expected):
    assert valuation(p, n) == expected


def test_valuation_domain_errors():
    with pytest.raises(ValueError):
        valuation(4, 8)
    with pytest.raises(ValueError):
        valuation(2, 0)


def test_valuation_exactness_sweep():
    for p in primes_up_to(50):
        for n in range(1, 10001):
            e = valuation(p, n)
            assert n % p**e == 0
            assert n % p ** (e + 1) != 0


@pytest.mark.parametrize("n, expected", [(1, 1), (12, 0), (30, -1), (2, -1), (6, 1)])
def test_moebius_examples(n, expected):
    assert moebius(n) == expected


def test_moebius_matches_recursive_definition():
    for n in range(1, 2001):
        assert moebius(n) == mu(n)


def test_moebius_divisor_sum_identity():
    for n in range(1, 10001):
        total = sum(moebius(d) for d in divisors(n))
        assert total == (1 if n == 1 else 0)


@pytest.mark.parametrize(
    "n, expected",
    [(1, [1]), (6, [1, 2, 3, 6]), (8, [1, 2, 4, 8]), (36, [1, 2, 3, 4, 6, 9, 12, 18, 36])],
)
def test_divisors_examples(n, expected):
    assert divisors(n) == expected


def test_divisors_brute_force_agreement():
    for n in range(1, 500):
        assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]


@pytest.mark.parametrize(
    "bound, expected",
    [(1, []), (2, [2]), (10, [2, 3, 5, 7]), (30, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29])],
)
def test_primes_up_to_examples(bound, expected):
    assert primes_up_to(bound) == expected


def test_primes_up_to_matches_primality():
    assert primes_up_to(1000) == [n for n in range(2, 1001) if is_prime(n)]


def test_is_prime_brute_force_agreement():
    def naive(n):
        return n >= 2 and all(n % d for d in range(2, n))

    for n in range(0, 2000):
        assert is_prime(n) == naive(n)
