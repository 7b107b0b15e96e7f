import pytest
from hypothesis import given
from hypothesis import strategies as st

from idpt.intarith import U64_MAX, ArithmeticOverflow
from idpt.primes import PrimeFactorization, exponent_of, factorize, primes_up_to, reconstruct


def _trial_division_primes(n_max):
    return [n for n in range(2, n_max + 1) if all(n % q for q in range(2, n))]


def test_primes_up_to_small():
    assert primes_up_to(10) == [2, 3, 5, 7]
    assert primes_up_to(2) == [2]


def test_prime_count_below_1000_matches_trial_division():
    assert primes_up_to(1000) == _trial_division_primes(1000)
    assert len(primes_up_to(1000)) == 168


def test_factorize_examples():
    assert factorize(2352).entries == ((2, 4), (3, 1), (7, 2))
    assert factorize(17).entries == ((17, 1),)
    assert factorize(72).entries == ((2, 3), (3, 2))


def test_factorize_rejects_one():
    with pytest.raises(ValueError):
        factorize(1)


def test_factorize_large_prime_cofactor():
    p = 1_000_000_007
    assert factorize(4 * p).entries == ((2, 2), (p, 1))
    assert factorize(127**4).entries == ((127, 4),)


def test_str_form():
    assert str(factorize(2352)) == "2^4 · 3^1 · 7^2"


def test_reconstruct():
    assert reconstruct(PrimeFactorization(((2, 4), (3, 1), (7, 2)))) == 2352
    assert reconstruct(PrimeFactorization(((5, 1),))) == 5


def test_reconstruct_overflow_is_reported():
    pf = PrimeFactorization(((2, 64),))
    assert reconstruct(pf) == 2**64
    with pytest.raises(ArithmeticOverflow):
        reconstruct(pf, limit=U64_MAX)


def test_round_trip_range():
    for g in range(2, 20_001):
        assert reconstruct(factorize(g)) == g


def test_exponent_of():
    pf = factorize(2352)
    assert exponent_of(pf, 7) == 2
    assert exponent_of(pf, 5) == 0
    assert exponent_of(factorize(729), 3) == 6


@pytest.mark.parametrize(
    "entries",
    [((3, 1), (2, 1)), ((2, 0),), ((2, 1), (2, 1))],
)
def test_invalid_factorizations_rejected(entries):
    with pytest.raises(ValueError):
        PrimeFactorization(entries)


@given(st.integers(2, 10**9))
def test_factorization_invariants(g):
    pf = factorize(g)
    primes = pf.primes
    assert list(primes) == sorted(set(primes))
    assert all(e >= 1 for _, e in pf)
    assert all(len(factorize(p)) == 1 for p in primes if p < 10**6)
    assert reconstruct(pf) == g
    assert factorize(g) == pf


@given(st.integers(2, 10**4), st.integers(2, 10**4))
def test_exponents_add_under_multiplication(n, m):
    pn, pm, pnm = factorize(n), factorize(m), factorize(n * m)
    for p in set(pn.primes) | set(pm.primes) | set(pnm.primes):
        assert exponent_of(pnm, p) == exponent_of(pn, p) + exponent_of(pm, p)


@given(st.integers(2, 10**3), st.integers(1, 5))
def test_exponents_scale_under_powers(n, m):
    pn, pnm = factorize(n), factorize(n**m)
    assert pnm.primes == pn.primes
    for p in pn.primes:
        assert exponent_of(pnm, p) == m * exponent_of(pn, p)
