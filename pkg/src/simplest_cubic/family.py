"""The parametric binary cubic form family and its symmetries.

The family is

    F_m(X, Y) = X^3 - m X^2 Y - (m+3) X Y^2 - Y^3

for an integer parameter m. F_m is invariant under the order-3 map
sigma: (x, y) -> (y, -x-y), is odd under (x, y) -> (-x, -y), and satisfies
F_{-m-3}(-y, -x) = F_m(x, y), so parameters m and -m-3 describe the same
problem and m >= -1 is the canonical range.

The dehomogenization f_m(X) = F_m(X, 1) is a totally real cubic defining a
cyclic cubic field for every integer m, with discriminant (m^2+3m+9)^2.
The companion cubic g_m(X) = X^3 + 3X^2 - (m^2+3m+6)X + 1 generates the
same field and has discriminant (2m+3)^2 (m^2+3m+9)^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


def family_constant(m: int) -> int:
    """m^2 + 3m + 9, the square root of disc(f_m). Positive for all m."""
    return m * m + 3 * m + 9


def eval_form(m: int, x: int, y: int) -> int:
    """F_m(x, y), exactly."""
    return x * x * x - m * x * x * y - (m + 3) * x * y * y - y * y * y


def normalize_index(m: int) -> int:
    """Canonical parameter: m itself if m >= -1, else the twin -m-3."""
    return m if m >= -1 else -m - 3


def is_trivial(x: int, y: int) -> bool:
    """Trivial solutions are exactly those with x*y*(x+y) == 0."""
    return x * y * (x + y) == 0


def sigma(x: int, y: int) -> tuple[int, int]:
    """The order-3 symmetry (x, y) -> (y, -x-y) of F_m."""
    return y, -x - y


@dataclass(frozen=True, order=True)
class Solution:
    """One integer solution F_m(x, y) = lam with lam > 0."""

    x: int
    y: int
    lam: int

    @property
    def trivial(self) -> bool:
        return is_trivial(self.x, self.y)

    @property
    def primitive(self) -> bool:
        return gcd(self.x, self.y) == 1

    def pair(self) -> tuple[int, int]:
        return (self.x, self.y)


@dataclass(frozen=True)
class OrbitClass:
    """A sigma-orbit {(x,y), (y,-x-y), (-x-y,x)} of one solution.

    members lists the three pairs in cycle order starting from the
    lexicographically smallest, which serves as the canonical representative.
    """

    lam: int
    members: tuple[tuple[int, int], tuple[int, int], tuple[int, int]]

    @property
    def canonical(self) -> tuple[int, int]:
        return self.members[0]


def orbit(x: int, y: int, lam: int | None = None, m: int | None = None) -> OrbitClass:
    """Close (x, y) under sigma and return its orbit class.

    lam may be given, or computed from m. The three members are distinct
    for every non-zero (x, y) except fixed points, which do not exist over
    the integers away from the origin.
    """
    if lam is None:
        if m is None:
            raise ValueError("need lam or m")
        lam = eval_form(m, x, y)
    a = (x, y)
    b = sigma(*a)
    c = sigma(*b)
    cyc = [a, b, c]
    start = cyc.index(min(cyc))
    members = tuple(cyc[start:] + cyc[:start])
    return OrbitClass(lam=lam, members=members)  # type: ignore[arg-type]


def trivial_solutions(m: int, lam: int) -> list[Solution]:
    """The trivial solutions of F_m = lam: nonempty iff lam is a cube c^3,
    in which case they are (c, 0), (0, -c), (-c, c)."""
    from .arith import is_cube

    ok, c = is_cube(lam)
    if not ok:
        return []
    assert c is not None
    return [Solution(c, 0, lam), Solution(0, -c, lam), Solution(-c, c, lam)]


@dataclass(frozen=True)
class CubicPoly:
    """Dense cubic a3 X^3 + a2 X^2 + a1 X + a0 with exact coefficients."""

    coeffs: tuple[Fraction | int, ...]  # (a3, a2, a1, a0), a3 != 0

    def __post_init__(self):
        if len(self.coeffs) != 4 or self.coeffs[0] == 0:
            raise ValueError("need degree exactly 3")

    def __call__(self, x):
        a3, a2, a1, a0 = self.coeffs
        return ((a3 * x + a2) * x + a1) * x + a0

    @property
    def discriminant(self):
        a, b, c, d = self.coeffs
        return (
            18 * a * b * c * d
            - 4 * b**3 * d
            + b**2 * c**2
            - 4 * a * c**3
            - 27 * a**2 * d**2
        )

    def integer_cleared(self) -> tuple[int, int, int, int]:
        """Scale to integer coefficients and divide out the content.

        The sign is normalized so the leading coefficient is positive.
        """
        fracs = [Fraction(c) for c in self.coeffs]
        den = 1
        for f in fracs:
            den = den * f.denominator // gcd(den, f.denominator)
        ints = [int(f * den) for f in fracs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        ints = [v // g for v in ints]
        if ints[0] < 0:
            ints = [-v for v in ints]
        return tuple(ints)  # type: ignore[return-value]


def poly_fm(m) -> CubicPoly:
    """f_m(X) = X^3 - m X^2 - (m+3) X - 1; m may be an exact rational."""
    return CubicPoly((1, -m, -(m + 3), -1))


def poly_gm(m) -> CubicPoly:
    """g_m(X) = X^3 + 3 X^2 - (m^2+3m+6) X + 1."""
    return CubicPoly((1, 3, -(m * m + 3 * m + 6), 1))


# --- the two resultant identities behind the solution-to-field map ---


def _H(m: int, x: int, y: int) -> int:
    return family_constant(m) * x * y * (x + y)


def _P(m: int, x: int, y: int) -> int:
    return 2 * x * x - 2 * m * x * y - x * y - m * y * y - 5 * y * y


def _Q(m: int, x: int, y: int) -> int:
    return -family_constant(m) * y * (2 * x + y)


@dataclass(frozen=True)
class IdentityWitness:
    """Evaluated pieces of the two Bezout-style identities at (m, x, y).

    Identity 1: H(x,y) P(x,y)       + F(x,y) Q(x,y)       == t * y^5
    Identity 2: H(x,y) P(-x-y, x)   + F(x,y) Q(-x-y, x)   == t * x^5

    where t = m^2 + 3m + 9. Both right-hand sides are recomputed here so a
    caller can assert the equalities directly.
    """

    m: int
    x: int
    y: int
    h: int
    p1: int
    q1: int
    p2: int
    q2: int
    f: int
    lhs1: int
    rhs1: int
    lhs2: int
    rhs2: int

    @property
    def holds(self) -> bool:
        return self.lhs1 == self.rhs1 and self.lhs2 == self.rhs2


def identity_witness(m: int, x: int, y: int) -> IdentityWitness:
    """Evaluate both identities exactly at (m, x, y)."""
    t = family_constant(m)
    f = eval_form(m, x, y)
    h = _H(m, x, y)
    p1 = _P(m, x, y)
    q1 = _Q(m, x, y)
    u, v = -x - y, x
    p2 = _P(m, u, v)
    q2 = _Q(m, u, v)
    return IdentityWitness(
        m=m,
        x=x,
        y=y,
        h=h,
        p1=p1,
        q1=q1,
        p2=p2,
        q2=q2,
        f=f,
        lhs1=h * p1 + f * q1,
        rhs1=t * y**5,
        lhs2=h * p2 + f * q2,
        rhs2=t * x**5,
    )
