"""Deciding when two members of the cubic family generate the same field.

L_m denotes the splitting field of f_m(X) = X^3 - m X^2 - (m+3) X - 1, a
cyclic cubic field for every integer m. Indices m and -m-3 give the same
field, so everything here normalizes to m >= -1 first.

For distinct normalized indices m != n the fields coincide if and only if
one of the two rational parameters

    M1 = -(m n + 3m + 9) / (m - n),     M2 = (m n - 9) / (m + n + 3)

makes f_{M1} or f_{M2} split into three rational linear factors. Because
the cubic is cyclic, one rational root forces the full splitting, and the
root candidates p/q are constrained to divisors of the denominator of the
parameter, which keeps the search tiny and exact.

The conductor of L_m is computable directly from the factorization of
m^2 + 3m + 9; equal conductors are necessary but not sufficient for equal
fields, which makes them a cheap pre-filter when classifying a range.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import divisors, factor
from .family import eval_form, family_constant, normalize_index


@dataclass(frozen=True)
class SplitParam:
    """One of the two isomorphism-test parameters, exactly."""

    label: str  # "M1" or "M2"
    value: Fraction


@dataclass(frozen=True)
class IsoWitness:
    """Evidence for L_m == L_n: which parameter split, and a rational root."""

    m: int
    n: int
    param: str  # "M1", "M2", or "same-index"
    value: Fraction | None
    root: Fraction | None


@dataclass(frozen=True)
class Conductor:
    """Conductor of the cyclic cubic field L_m."""

    m: int
    value: int
    three_part: int  # 1 or 9
    odd_primes: tuple[int, ...]


def m_params(m: int, n: int) -> tuple[SplitParam, SplitParam]:
    """The two exact rational test parameters for indices m and n.

    Undefined at the poles n == m (M1) and n == -m-3 (M2); both are
    rejected because the caller should have handled equal fields already.
    """
    if n == m:
        raise ValueError("M1 has a pole at n == m")
    if n == -m - 3:
        raise ValueError("M2 has a pole at n == -m-3")
    m1 = Fraction(-(m * n + 3 * m + 9), m - n)
    m2 = Fraction(m * n - 9, m + n + 3)
    return SplitParam("M1", m1), SplitParam("M2", m2)


def splits_completely(value: Fraction | int) -> tuple[bool, Fraction | None]:
    """Does f_M(X) = X^3 - M X^2 - (M+3) X - 1 factor into rational linears?

    With M = A/B in lowest terms (B >= 1), clearing denominators gives the
    primitive integer cubic

        B X^3 - A X^2 - (A + 3B) X - B,

    whose leading and constant coefficients are both +-B. A rational root
    p/q in lowest terms therefore has p | B and q | B, and evaluating at -1
    gives the extra filter (p + q) | B. One rational root z implies the
    other two are -q/(p+q) and -(p+q)/p, so the cubic splits completely;
    this is verified exactly before reporting success.

    Candidates are scanned in a fixed order (q ascending, then |p|
    ascending with positive p first) so the returned root is deterministic.
    """
    M = Fraction(value)
    a, b = M.numerator, M.denominator
    divs = divisors(b)

    def is_root(p: int, q: int) -> bool:
        return b * p**3 - a * p * p * q - (a + 3 * b) * p * q * q - b * q**3 == 0

    for q in divs:
        for ap in divs:
            for p in (ap, -ap):
                if gcd(p, q) != 1:
                    continue
                s = p + q
                if s == 0 or b % s != 0:
                    continue
                if is_root(p, q):
                    # cyclic structure: the remaining roots must also vanish
                    assert is_root(-q, s) and is_root(-s, p)
                    return True, Fraction(p, q)
    return False, None


def n_from_solution(m: int, x: int, y: int) -> int:
    """Map a solution of F_m(x, y) = lam to the partner index N.

        N = m + (m^2+3m+9) * x y (x+y) / F_m(x, y)

    The pair is reduced to primitive form first; the division must be exact
    or the input was not a solution of the family and a ValueError is
    raised. Trivial solutions (x y (x+y) == 0) give back N == m.
    """
    if x == 0 and y == 0:
        raise ValueError("(0, 0) is not a solution")
    g = gcd(x, y)
    x0, y0 = x // g, y // g
    lam = eval_form(m, x0, y0)
    if lam == 0:
        raise AssertionError("the form cannot vanish at a nonzero integer pair")
    num = family_constant(m) * x0 * y0 * (x0 + y0)
    if num % lam != 0:
        raise ValueError(
            f"(x, y)=({x}, {y}) does not induce an integral partner for m={m}"
        )
    return m + num // lam


def is_isomorphic(m: int, n: int) -> tuple[bool, IsoWitness | None]:
    """Whether L_m == L_n, with a witness when they are equal.

    Both indices are normalized to >= -1 first; equal normalized indices
    (covering n == m and n == -m-3) are trivially the same field.
    """
    mm, nn = normalize_index(m), normalize_index(n)
    if mm == nn:
        return True, IsoWitness(m=mm, n=nn, param="same-index", value=None, root=None)
    lo, hi = (mm, nn) if mm < nn else (nn, mm)
    for sp in m_params(lo, hi):
        ok, root = splits_completely(sp.value)
        if ok:
            return True, IsoWitness(m=lo, n=hi, param=sp.label, value=sp.value, root=root)
    return False, None


def conductor(m: int) -> Conductor:
    """Conductor of L_m from the factorization of m^2 + 3m + 9.

    Primes p != 3 enter iff their exponent in m^2+3m+9 is not a multiple
    of 3, each to the first power. The 3-part is 9 when m == 0 (mod 3)
    except in the residue class m == 12 (mod 27), where it is 1; it is
    always 1 when 3 does not divide m. The formula is invariant under the
    twin map m -> -m-3, as it must be.
    """
    t = family_constant(m)
    fac = factor(t)
    odd = tuple(p for p, e in fac.factors if p != 3 and e % 3 != 0)
    three = 9 if (m % 3 == 0 and m % 27 != 12) else 1
    value = three
    for p in odd:
        value *= p
    return Conductor(m=m, value=value, three_part=three, odd_primes=odd)


class _UnionFind:
    def __init__(self, items):
        self.parent = {v: v for v in items}

    def find(self, v):
        p = self.parent
        while p[v] != v:
            p[v] = p[p[v]]
            v = p[v]
        return v

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def classify_range(lo: int, hi: int) -> list[list[int]]:
    """Partition [lo, hi] into field-isomorphism classes.

    Conductors bucket the indices first; only indices sharing a conductor
    are ever compared, and a union-find skips pairs already known to be
    together. Returns every class (singletons included) as a sorted list,
    classes ordered by their smallest member.
    """
    if lo < -1:
        raise ValueError("classification domain starts at the canonical m >= -1")
    if hi < lo:
        raise ValueError("empty range")
    ms = list(range(lo, hi + 1))
    buckets: dict[int, list[int]] = {}
    for m in ms:
        buckets.setdefault(conductor(m).value, []).append(m)
    uf = _UnionFind(ms)
    for members in buckets.values():
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                a, b = members[i], members[j]
                if uf.find(a) == uf.find(b):
                    continue
                ok, _ = is_isomorphic(a, b)
                if ok:
                    uf.union(a, b)
    groups: dict[int, list[int]] = {}
    for m in ms:
        groups.setdefault(uf.find(m), []).append(m)
    classes = [sorted(v) for v in groups.values()]
    classes.sort(key=lambda c: c[0])
    return classes


def isomorphic_pairs(lo: int, hi: int) -> list[tuple[int, int]]:
    """All unordered pairs (m, n), m < n, with L_m == L_n in [lo, hi]."""
    pairs: list[tuple[int, int]] = []
    for cls in classify_range(lo, hi):
        for i in range(len(cls)):
            for j in range(i + 1, len(cls)):
                pairs.append((cls[i], cls[j]))
    pairs.sort()
    return pairs
