"""Exact integer arithmetic helpers: factorization, divisors, cubes, valuations.

All functions work on plain Python ints and never round. Factorization is
trial division against a cached prime sieve, with a deterministic
Miller-Rabin test used to stop early once the remaining cofactor is prime.
The Miller-Rabin base set {2, 3, 5, 7, 11, 13, 17} is deterministic for
n < 341550071728321 (about 3.4e14); inputs beyond that bound are rejected
rather than risk a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

_MR_BASES = (2, 3, 5, 7, 11, 13, 17)
_MR_LIMIT = 341_550_071_728_321

# lazy sieve state: primes up to _sieve_limit, grown geometrically on demand
_sieve_limit = 0
_primes: list[int] = []


def _extend_sieve(limit: int) -> None:
    global _sieve_limit, _primes
    if limit <= _sieve_limit:
        return
    limit = max(limit, 2 * _sieve_limit, 1 << 16)
    flags = bytearray(b"\x01") * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            start = p * p
            flags[start :: p] = bytearray(len(range(start, limit + 1, p)))
    _primes = [i for i, f in enumerate(flags) if f]
    _sieve_limit = limit


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n < 3.4e14."""
    if n < 2:
        return False
    if n >= _MR_LIMIT:
        raise ValueError(f"n={n} exceeds the deterministic Miller-Rabin range")
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
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


@dataclass(frozen=True)
class Factorization:
    """Signed factorization: value == sign * prod(p**e)."""

    value: int
    sign: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = self.sign
        for p, e in self.factors:
            prod *= p**e
        if prod != self.value:
            raise ValueError("factorization does not multiply back to value")

    def __str__(self) -> str:
        if not self.factors:
            return str(self.value)
        body = "*".join(str(p) if e == 1 else f"{p}^{e}" for p, e in self.factors)
        return body if self.sign > 0 else "-" + body


def factor(n: int) -> Factorization:
    """Factor a nonzero integer into primes (ascending) with exponents."""
    if n == 0:
        raise ValueError("cannot factor 0")
    sign = 1 if n > 0 else -1
    v = abs(n)
    facs: list[tuple[int, int]] = []
    _extend_sieve(1 << 16)
    i = 0
    while v > 1:
        if is_prime(v):
            facs.append((v, 1))
            break
        root = isqrt(v)
        while i < len(_primes) and _primes[i] <= root:
            p = _primes[i]
            if v % p == 0:
                e = 0
                while v % p == 0:
                    v //= p
                    e += 1
                facs.append((p, e))
                break
            i += 1
        else:
            if _sieve_limit > root:
                # v is composite but has no prime factor <= sqrt(v): impossible,
                # so the only way here is v == 1 after extraction
                if v > 1:
                    raise AssertionError("trial division inconsistency")
                break
            _extend_sieve(2 * _sieve_limit)
    return Factorization(value=n, sign=sign, factors=tuple(facs))


def divisors(n: int | Factorization) -> list[int]:
    """All positive divisors of n, sorted ascending."""
    f = n if isinstance(n, Factorization) else factor(n)
    divs = [1]
    for p, e in f.factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def icbrt(n: int) -> int:
    """Integer cube root of n >= 0: the largest r with r**3 <= n."""
    if n < 0:
        raise ValueError("icbrt needs n >= 0")
    if n == 0:
        return 0
    r = round(n ** (1.0 / 3.0))
    # float seed can be off by one either way
    while r**3 > n:
        r -= 1
    while (r + 1) ** 3 <= n:
        r += 1
    return r


def is_cube(n: int) -> tuple[bool, int | None]:
    """Whether n is a perfect cube; returns (flag, cube root or None).

    Works for negative n: is_cube(-27) == (True, -3).
    """
    neg = n < 0
    r = icbrt(-n if neg else n)
    if r**3 == abs(n):
        return True, -r if neg else r
    return False, None


def padic_valuation(n: int, p: int) -> int:
    """Exponent of the prime p in n (n != 0)."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    if p < 2 or not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    v = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        v += 1
    return v
