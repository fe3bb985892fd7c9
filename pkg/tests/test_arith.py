"""Integer arithmetic helpers."""

import pytest

from simplest_cubic.arith import (
    Factorization,
    divisors,
    factor,
    icbrt,
    is_cube,
    is_prime,
    padic_valuation,
)


def test_small_primes():
    known = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    for n in range(-3, 50):
        assert is_prime(n) == (n in known)


def test_larger_primes_and_carmichael():
    assert is_prime(2**31 - 1)
    assert not is_prime(561)  # Carmichael
    assert not is_prime(341_550_071_728_320)
    assert is_prime(1_000_000_007)


def test_factor_round_trip():
    for n in list(range(1, 500)) + [2**20, 3**5 * 7**3, 1588867, 5714497]:
        f = factor(n)
        prod = 1
        for p, e in f.factors:
            assert is_prime(p)
            assert e >= 1
            prod *= p**e
        assert prod == n
        assert [p for p, _ in f.factors] == sorted(p for p, _ in f.factors)


def test_factor_negative_and_units():
    f = factor(-12)
    assert f.sign == -1 and f.value == -12
    assert f.factors == ((2, 2), (3, 1))
    assert factor(1).factors == ()
    assert factor(-1).factors == ()
    with pytest.raises(ValueError):
        factor(0)


def test_factorization_string():
    assert str(factor(189)) == "3^3*7"
    assert str(factor(1)) == "1"
    assert str(factor(7)) == "7"
    assert str(factor(-4)) == "-2^2"
    assert str(factor(226981)) == "61^3"


def test_factorization_consistency_guard():
    with pytest.raises(ValueError):
        Factorization(value=10, sign=1, factors=((2, 1), (3, 1)))


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(36) == [1, 2, 3, 4, 6, 9, 12, 18, 36]
    assert divisors(factor(189)) == [1, 3, 7, 9, 21, 27, 63, 189]
    assert len(divisors(1588867)) == 8  # 7 * 61^3


def test_icbrt_and_is_cube():
    for n in range(0, 2000):
        r = icbrt(n)
        assert r**3 <= n < (r + 1) ** 3
    big = 10**18
    assert icbrt(big) == 10**6
    assert icbrt(big - 1) == 10**6 - 1
    assert is_cube(27) == (True, 3)
    assert is_cube(-27) == (True, -3)
    assert is_cube(28) == (False, None)
    assert is_cube(0) == (True, 0)
    assert is_cube(226981) == (True, 61)


def test_padic_valuation():
    assert padic_valuation(189, 3) == 3
    assert padic_valuation(189, 7) == 1
    assert padic_valuation(189, 2) == 0
    assert padic_valuation(-8, 2) == 3
