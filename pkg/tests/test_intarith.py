import pytest
from hypothesis import given
from hypothesis import strategies as st

from idpt.intarith import (
    U64_MAX,
    ArithmeticOverflow,
    check_bound,
    divides,
    gcd,
    gcd3,
    isqrt_floor,
)
from idpt.primes import primes_up_to


def test_gcd_examples():
    assert gcd(12, 8) == 4
    assert gcd(7, 7) == 7


@pytest.mark.parametrize("n", range(1, 101))
def test_gcd_consecutive_first_family_legs(n):
    assert gcd(2 * n * n + 2 * n, 2 * n * n + 2 * n + 1) == 1


def test_gcd3_examples():
    assert gcd3(6, 8, 10) == 2
    assert gcd3(3, 4, 5) == 1
    assert gcd3(48, 55, 73) == 1


def test_gcd_rejects_nonpositive():
    with pytest.raises(ValueError):
        gcd(0, 5)
    with pytest.raises(TypeError):
        gcd(2.0, 4)


def test_divides_examples():
    assert divides(2, 8)
    assert divides(9, 144)
    assert not divides(9, 12)
    assert divides(7, 0)


def test_isqrt_examples():
    assert isqrt_floor(0) == 0
    assert isqrt_floor(18) == 4
    assert isqrt_floor(2401) == 49


def test_isqrt_near_float_rounding_edge():
    # float sqrt of (2^53 + 1)^2 - 1 rounds up to 2^53 + 1
    x = (2**53 + 1) ** 2 - 1
    assert isqrt_floor(x) == 2**53


@given(st.integers(min_value=0, max_value=10**40))
def test_isqrt_brackets(x):
    s = isqrt_floor(x)
    assert s * s <= x < (s + 1) ** 2


def test_gcd_is_greatest_by_scan():
    for x in range(1, 60):
        for y in range(1, 60):
            g = gcd(x, y)
            assert x % g == 0 and y % g == 0
            assert not any(x % h == 0 and y % h == 0 for h in range(g + 1, min(x, y) + 1))


@given(st.integers(1, 10**4), st.integers(1, 10**4))
def test_gcd_divides_both_and_is_maximal(x, y):
    g = gcd(x, y)
    assert x % g == 0 and y % g == 0
    assert not any(x % h == 0 and y % h == 0 for h in range(g + 1, min(x, y) + 1))


@given(st.integers(1, 10**6), st.integers(0, 10**6), st.integers(0, 10**6))
def test_sum_divisibility_laws(g, x, y):
    if divides(g, x) and divides(g, y):
        assert divides(g, x + y)
    if divides(g, x) and not divides(g, y):
        assert not divides(g, x + y)
    if divides(g, x) and divides(g, x + y):
        assert divides(g, y)


@given(st.sampled_from(primes_up_to(1000)), st.integers(0, 10**4))
def test_prime_divides_square_iff_divides(p, n):
    assert divides(p, n * n) == divides(p, n)


def test_check_bound():
    assert check_bound(U64_MAX, U64_MAX) == U64_MAX
    assert check_bound(10**30, None) == 10**30
    with pytest.raises(ArithmeticOverflow) as info:
        check_bound(U64_MAX + 1, U64_MAX, "c")
    assert info.value.what == "c"
    assert isinstance(info.value, OverflowError)
