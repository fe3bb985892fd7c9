"""Exact continued fractions for the middle root of the family cubic.

f_m(X) = X^3 - m X^2 - (m+3) X - 1 has three real irrational roots for
every integer m >= -1:

    theta1 in (1, m+3),   theta2 in (-1/2, 0),   theta3 in (-2, -1).

This module isolates them with rational brackets and expands theta2 into a
simple continued fraction using only integer arithmetic: each step shifts
the defining cubic by the partial quotient and reverses it, so the tracked
root stays the unique root in (1, oo) and its floor can be read off by
integer sign probes. No floating point is involved anywhere; if a probe
ever lands exactly on a root the input was rational and the expansion
raises instead of looping.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


def _sign_at(coeffs: tuple[int, int, int, int], x: Fraction) -> int:
    """Sign of the cubic at a rational point, via homogeneous integer eval."""
    c3, c2, c1, c0 = coeffs
    u, v = x.numerator, x.denominator
    val = ((c3 * u + c2 * v) * u + c1 * v * v) * u + c0 * v * v * v
    return (val > 0) - (val < 0)


@dataclass
class IsolatedRoot:
    """A rational bracket (lo, hi) around one simple real root of a cubic.

    Invariant: the polynomial has opposite nonzero signs at lo and hi and
    exactly one root strictly inside.
    """

    coeffs: tuple[int, int, int, int]
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("empty bracket")
        s_lo = _sign_at(self.coeffs, self.lo)
        s_hi = _sign_at(self.coeffs, self.hi)
        if s_lo == 0 or s_hi == 0 or s_lo == s_hi:
            raise ValueError("endpoints do not bracket a simple root")

    def width(self) -> Fraction:
        return self.hi - self.lo

    def refine(self, steps: int = 1) -> None:
        """Halve the bracket `steps` times by exact bisection."""
        s_lo = _sign_at(self.coeffs, self.lo)
        for _ in range(steps):
            mid = (self.lo + self.hi) / 2
            s_mid = _sign_at(self.coeffs, mid)
            if s_mid == 0:
                raise ValueError("root is rational, not isolable by bisection")
            if s_mid == s_lo:
                self.lo = mid
            else:
                self.hi = mid

    def refine_below(self, width: Fraction) -> None:
        while self.hi - self.lo >= width:
            self.refine()

    def as_float(self) -> float:
        mid = (self.lo + self.hi) / 2
        return mid.numerator / mid.denominator


def _fm_coeffs(m: int) -> tuple[int, int, int, int]:
    return (1, -m, -(m + 3), -1)


_BRACKETS = {
    1: (lambda m: (Fraction(1), Fraction(m + 3))),
    2: (lambda m: (Fraction(-1, 2), Fraction(0))),
    3: (lambda m: (Fraction(-2), Fraction(-1))),
}


def isolate_root(m: int, which: int) -> IsolatedRoot:
    """Bracket for theta1, theta2 or theta3 of f_m (which in {1, 2, 3})."""
    if m < -1:
        raise ValueError("parameter must be normalized to m >= -1")
    if which not in _BRACKETS:
        raise ValueError("which must be 1, 2 or 3")
    lo, hi = _BRACKETS[which](m)
    return IsolatedRoot(coeffs=_fm_coeffs(m), lo=lo, hi=hi)


def theta2_series_bounds(m: int) -> tuple[Fraction, Fraction]:
    """Exact rational enclosure of theta2 from its asymptotic expansion.

    Valid for m >= 18:

        s - 28/m^6 < theta2 < s - 27/m^6,
        s = -1/m + 2/m^2 - 2/m^3 - 3/m^4 + 17/m^5.
    """
    if m < 18:
        raise ValueError("series enclosure is only claimed for m >= 18")
    M = Fraction(m)
    s = -1 / M + 2 / M**2 - 2 / M**3 - 3 / M**4 + 17 / M**5
    return s - 28 / M**6, s - 27 / M**6


def isolate_theta2(m: int) -> IsolatedRoot:
    """Bracket for theta2, refined inside the series enclosure when m >= 18."""
    root = isolate_root(m, 2)
    if m >= 18:
        lo, hi = theta2_series_bounds(m)
        guard = 0
        while not (lo < root.lo and root.hi < hi):
            root.refine()
            guard += 1
            if guard > 400:
                raise AssertionError(
                    f"series enclosure for m={m} does not contain the root"
                )
    return root


# --- exact expansion ---


class _Expansion:
    """Stateful exact continued fraction expansion of theta2 for one m.

    State is an integer cubic with positive leading coefficient whose unique
    root in (1, oo) is the current complete quotient. The first two partial
    quotients are forced by theta2 in (-1/2, 0): a0 = -1, a1 = 1.
    """

    def __init__(self, m: int):
        if m < -1:
            raise ValueError("parameter must be normalized to m >= -1")
        self.m = m
        self.coeffs = _fm_coeffs(m)
        self.k = 0

    def _eval(self, x: int) -> int:
        c3, c2, c1, c0 = self.coeffs
        return ((c3 * x + c2) * x + c1) * x + c0

    def _step(self, a: int) -> None:
        """Replace the root r by 1/(r - a): shift by a, reverse, normalize."""
        c3, c2, c1, c0 = self.coeffs
        # Taylor shift p(X + a) by synthetic division
        d0 = ((c3 * a + c2) * a + c1) * a + c0
        d1 = (3 * c3 * a + 2 * c2) * a + c1
        d2 = 3 * c3 * a + c2
        # reverse: q(X) = X^3 p(a + 1/X)
        c3, c2, c1, c0 = d0, d1, d2, c3
        if c3 == 0:
            raise ValueError("complete quotient became rational")
        if c3 < 0:
            c3, c2, c1, c0 = -c3, -c2, -c1, -c0
        g = gcd(gcd(c3, abs(c2)), gcd(abs(c1), abs(c0)))
        if g > 1:
            c3, c2, c1, c0 = c3 // g, c2 // g, c1 // g, c0 // g
        self.coeffs = (c3, c2, c1, c0)

    def _floor_of_root(self) -> int:
        """Floor of the unique root in (1, oo). Leading coefficient > 0, so
        the polynomial is negative at 1 and positive past the root."""
        v1 = self._eval(1)
        if v1 == 0:
            raise ValueError("complete quotient is rational")
        if v1 > 0:
            raise AssertionError("lost the root > 1 invariant")
        hi = 2
        while True:
            v = self._eval(hi)
            if v == 0:
                raise ValueError("complete quotient is rational")
            if v > 0:
                break
            hi *= 2
        lo = hi // 2
        while hi - lo > 1:
            mid = (lo + hi) // 2
            v = self._eval(mid)
            if v == 0:
                raise ValueError("complete quotient is rational")
            if v < 0:
                lo = mid
            else:
                hi = mid
        return lo

    def __iter__(self):
        return self

    def __next__(self) -> int:
        if self.k == 0:
            a = -1  # theta2 in (-1, 0)
        else:
            a = self._floor_of_root()
        self._step(a)
        self.k += 1
        return a


@dataclass(frozen=True)
class ContinuedFraction:
    """A prefix [a0; a1, a2, ...] of the expansion of theta2 for one m."""

    m: int
    quotients: tuple[int, ...]


@dataclass(frozen=True)
class Convergent:
    index: int
    p: int
    q: int

    def value(self) -> Fraction:
        return Fraction(self.p, self.q)


def cf_expand(m: int, count: int) -> ContinuedFraction:
    """First `count` partial quotients of theta2 for parameter m."""
    if count < 0:
        raise ValueError("count must be >= 0")
    exp = _Expansion(m)
    qs = tuple(next(exp) for _ in range(count))
    return ContinuedFraction(m=m, quotients=qs)


def convergents(cf: ContinuedFraction | tuple[int, ...]) -> list[Convergent]:
    """Convergents p_i/q_i of a quotient sequence, lowest terms guaranteed."""
    qs = cf.quotients if isinstance(cf, ContinuedFraction) else tuple(cf)
    out: list[Convergent] = []
    p1, p2 = 1, 0
    q1, q2 = 0, 1
    for i, a in enumerate(qs):
        p = a * p1 + p2
        q = a * q1 + q2
        # consecutive convergents satisfy p*q1 - p1*q == +-1, hence gcd 1
        if i and abs(p * q1 - p1 * q) != 1:
            raise AssertionError("convergent recurrence lost coprimality")
        out.append(Convergent(index=i, p=p, q=q))
        p2, p1 = p1, p
        q2, q1 = q1, q
    return out


def convergent_stream(m: int):
    """Yield Convergent objects of theta2 for m, indefinitely."""
    exp = _Expansion(m)
    p1, p2 = 1, 0
    q1, q2 = 0, 1
    i = 0
    while True:
        a = next(exp)
        p = a * p1 + p2
        q = a * q1 + q2
        yield Convergent(index=i, p=p, q=q)
        p2, p1 = p1, p
        q2, q1 = q1, q
        i += 1


# --- the fourteen known expansion prefixes ---

# residue of m mod 14 -> (smallest m the shape is claimed for, tail terms
# after the common prefix); even m share prefix [-1, 1, m+1, m/2, 1, 3],
# odd m share [-1, 1, m+1, (m+1)/2, 3, 1].
_PATTERN_TAILS = {
    0: (28, lambda m: [(m - 14) // 14, 1, 6, m // 6]),
    2: (156, lambda m: [(m - 2) // 14, (49 * m + 72) // 6]),
    4: (18, lambda m: [(m - 4) // 14, 6, 1, (m - 4) // 6]),
    6: (20, lambda m: [(m - 6) // 14, 3, 2, (m - 2) // 6]),
    8: (22, lambda m: [(m - 8) // 14, 2, 3, (m - 2) // 6]),
    10: (24, lambda m: [(m - 10) // 14, 1, 1, 2, 1, (m - 4) // 6]),
    12: (68, lambda m: [(m - 12) // 14, 1, 2, 1, 1, (m - 2) // 6]),
    1: (29, lambda m: [(m - 15) // 14, 2, 3, (m - 1) // 6]),
    3: (31, lambda m: [(m - 17) // 14, 1, 1, 2, 1, (m - 3) // 6]),
    5: (33, lambda m: [(m - 19) // 14, 1, 2, 1, 1, (m - 3) // 6]),
    7: (35, lambda m: [(m - 21) // 14, 1, 6, (m - 1) // 6]),
    9: (65, lambda m: [(m - 9) // 14, (49 * m + 73) // 6]),
    11: (25, lambda m: [(m - 11) // 14, 6, 1, (m - 5) // 6]),
    13: (27, lambda m: [(m - 13) // 14, 3, 2, (m - 3) // 6]),
}


def expansion_prefix(m: int) -> list[int] | None:
    """Known expansion prefix of theta2 by residue class of m mod 14.

    Returns None when m is below the smallest parameter the shape is
    claimed for. Only the listed prefix is asserted; quotients beyond it
    are not constrained.
    """
    min_m, tail = _PATTERN_TAILS[m % 14]
    if m < min_m:
        return None
    if m % 2 == 0:
        head = [-1, 1, m + 1, m // 2, 1, 3]
    else:
        head = [-1, 1, m + 1, (m + 1) // 2, 3, 1]
    return head + tail(m)


def theta2_enclosure_ok(m: int) -> bool:
    """Check that the series enclosure really contains theta2 (exact)."""
    lo, hi = theta2_series_bounds(m)
    coeffs = _fm_coeffs(m)
    # f_m decreases through theta2: positive left of the root, negative right
    return _sign_at(coeffs, lo) > 0 and _sign_at(coeffs, hi) < 0


def approx_root(m: int, which: int, digits: int = 30) -> Fraction:
    """Rational approximation of theta_i to the requested decimal width."""
    root = isolate_root(m, which)
    root.refine_below(Fraction(1, 10**digits))
    return (root.lo + root.hi) / 2
