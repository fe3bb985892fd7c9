"""Complete solver for F_m(x, y) = lam over the divisors lam of m^2+3m+9.

Solutions split into two regimes by the size of the normal-form y:

* small y is handled by a windowed brute-force scan: for each y only the
  integers x near y*theta_i (the three real roots of f_m) can keep
  |F_m(x, y)| <= m^2+3m+9, and the scan expands outward from those seeds
  while the exact inequality holds, so nothing inside the bound is missed;

* for m >= 30, any primitive normal-form solution with y past the brute
  bound 2(2m+3 + 27/(2m+3)) must be a convergent p_i/q_i of theta2, and
  its q_i is capped by an effective irrationality measure: with

      kappa = (log(sqrt(m^2+3m+9)) + 0.83) / (log(m + 3/2) - 1.3) < 2

  every such solution satisfies y^(2-kappa) < 17.78 * 2.59^kappa * lam.
  Enumerating convergents up to that ceiling and testing each against every
  divisor (both signs cover the six sign/rotation images) finishes the
  search, so results for m >= 30 carry a self-certifying "bounded+convergent"
  tag. For -1 <= m <= 29 the measure is useless (kappa >= 2) and the solver
  brute-forces y up to a generous fixed bound instead, tagging the result
  "bounded-only".

kappa and the ceiling are evaluated in 50-digit decimal arithmetic and
padded upward by a documented margin far above the accumulated rounding
error, so the ceiling is always an overestimate, never an underestimate.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from decimal import Decimal, ROUND_CEILING, localcontext
from math import gcd

from .arith import divisors
from .family import Solution, eval_form, family_constant, orbit
from .cf import convergent_stream, isolate_root
from .isofield import n_from_solution

# y bound used for the low-m regime where no convergent certificate exists
FALLBACK_Y_BOUND = 100_000

# decimal working precision and the upward padding factor; the padding
# exceeds the worst-case accumulated rounding error by more than 8 orders
_PREC = 50
_PAD = Decimal("1e-40")

_WORKERS_ENV = "SIMPLEST_CUBIC_WORKERS"


def lpv_kappa(m: int) -> Decimal:
    """Upper bound on the irrationality-measure exponent kappa, m >= 30.

    Returned with 50 significant digits, rounded away from the true value
    so downstream ceilings stay conservative. Strictly below 2 for every
    m >= 30 and decreasing in m.
    """
    if m < 30:
        raise ValueError("the measure only beats the trivial exponent for m >= 30")
    with localcontext() as ctx:
        ctx.prec = _PREC
        t = Decimal(family_constant(m))
        num = t.ln() / 2 + Decimal("0.83")
        den = (Decimal(2 * m + 3) / 2).ln() - Decimal("1.3")
        kappa = (num / den) * (1 + _PAD)
    if not kappa < 2:
        raise AssertionError(f"kappa >= 2 at m={m}; no finite search ceiling")
    return kappa


def y_ceiling(m: int, lam: int | None = None) -> int:
    """Outward-rounded integer Y with y <= Y for every large solution.

    Derived from y^(2-kappa) < 17.78 * 2.59^kappa * lam with lam defaulting
    to the largest divisor m^2+3m+9. Astronomically large near m=30 (kappa
    is barely below 2) but always finite.
    """
    if lam is None:
        lam = family_constant(m)
    kappa = lpv_kappa(m)
    with localcontext() as ctx:
        ctx.prec = _PREC
        log_y = (
            Decimal("17.78").ln() + kappa * Decimal("2.59").ln() + Decimal(lam).ln()
        ) / (2 - kappa)
        y = log_y.exp() * (1 + _PAD)
        return int(y.to_integral_value(rounding=ROUND_CEILING))


def brute_y_bound(m: int) -> int:
    """ceil(8(m^2+3m+9)/(2m+3)) = ceil(2(2m+3 + 27/(2m+3))), exactly."""
    t = family_constant(m)
    return -((-8 * t) // (2 * m + 3))


@dataclass(frozen=True)
class SearchPlan:
    m: int
    strategy: str  # "bounded-only" or "bounded+convergent"
    y_bound: int
    kappa: str | None  # decimal string, only for the certified regime
    ceiling: int | None


@dataclass(frozen=True)
class SolvedOrbit:
    """One orbit of non-trivial solutions plus the partner index it induces."""

    lam: int
    members: tuple[tuple[int, int], tuple[int, int], tuple[int, int]]
    n_value: int
    primitive: bool


@dataclass(frozen=True)
class SolutionSet:
    m: int
    t: int  # m^2 + 3m + 9
    plan: SearchPlan
    rows: tuple[SolvedOrbit, ...]

    @property
    def count(self) -> int:
        """Number of non-trivial solutions across all divisors."""
        return 3 * len(self.rows)


def _float_roots(m: int) -> tuple[float, float, float]:
    """Machine-precision approximations of theta1 > theta2 > theta3.

    Only used to seed integer windows; every acceptance test below is exact.
    Derived by float bisection from the exact isolating brackets.
    """
    out = []
    for which in (1, 2, 3):
        r = isolate_root(m, which)
        lo = r.lo.numerator / r.lo.denominator
        hi = r.hi.numerator / r.hi.denominator

        def f(x: float) -> float:
            return ((x - m) * x - (m + 3)) * x - 1

        flo = f(lo)
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            if mid == lo or mid == hi:
                break
            fm = f(mid)
            if (fm > 0) == (flo > 0):
                lo, flo = mid, fm
            else:
                hi = mid
        out.append(0.5 * (lo + hi))
    return out[0], out[1], out[2]


def brute_search(m: int, y_bound: int) -> list[Solution]:
    """All non-trivial solutions with some sign image having 1 <= y <= y_bound.

    For each y the integers x with |F_m(x, y)| <= m^2+3m+9 form up to three
    runs around y*theta_i; seeds next to each root are probed and every run
    is expanded outward while the exact inequality holds. Hits with
    F_m(x, y) = -lam are recorded as (-x, -y), so the returned solutions
    all have positive lam dividing m^2+3m+9.
    """
    t = family_constant(m)
    dset = set(divisors(t))
    roots = _float_roots(m)
    m3 = m + 3
    sols: list[Solution] = []

    for y in range(1, y_bound + 1):
        y2 = y * y
        y3 = y2 * y
        my = m * y
        m3y2 = m3 * y2

        def f(x: int) -> int:
            return ((x - my) * x - m3y2) * x - y3

        def record(x: int, v: int) -> None:
            if v == 0 or x * y * (x + y) == 0:
                return
            if v > 0:
                if v in dset:
                    sols.append(Solution(x, y, v))
            elif -v in dset:
                sols.append(Solution(-x, -y, -v))

        found: set[int] = set()
        for rf in roots:
            c = round(rf * y)
            for x in (c - 1, c, c + 1):
                if x in found:
                    continue
                found.add(x)
                v = f(x)
                if -t <= v <= t:
                    record(x, v)
                    xx = x - 1
                    while xx not in found:
                        found.add(xx)
                        vv = f(xx)
                        if -t <= vv <= t:
                            record(xx, vv)
                            xx -= 1
                        else:
                            break
                    xx = x + 1
                    while xx not in found:
                        found.add(xx)
                        vv = f(xx)
                        if -t <= vv <= t:
                            record(xx, vv)
                            xx += 1
                        else:
                            break
    return sols


def convergent_search(m: int, ceiling: int | None = None) -> list[Solution]:
    """Test every convergent of theta2 with q up to the certified ceiling.

    Testing F_m(p, q) against +-lam for each divisor covers all six
    symmetry images of the convergent at once.
    """
    if ceiling is None:
        ceiling = y_ceiling(m)
    t = family_constant(m)
    dset = set(divisors(t))
    sols: list[Solution] = []
    for conv in convergent_stream(m):
        if conv.q > ceiling:
            break
        p, q = conv.p, conv.q
        if p * q * (p + q) == 0:
            continue
        v = eval_form(m, p, q)
        if v > 0:
            if v in dset:
                sols.append(Solution(p, q, v))
        elif v < 0 and -v in dset:
            sols.append(Solution(-p, -q, -v))
    return sols


def solve_family(m: int) -> SolutionSet:
    """All non-trivial solutions of F_m = lam over divisors lam of m^2+3m+9.

    For m >= 30 the result is complete unconditionally; for smaller m it is
    complete within the fallback bound (min coordinate up to 10^5), which
    the classical results for this family confirm is exhaustive there.
    """
    if m < -1:
        raise ValueError("normalize the parameter to m >= -1 first")
    t = family_constant(m)
    if m >= 30:
        kappa = lpv_kappa(m)
        ceiling = y_ceiling(m)
        plan = SearchPlan(
            m=m,
            strategy="bounded+convergent",
            y_bound=brute_y_bound(m),
            kappa=str(kappa),
            ceiling=ceiling,
        )
        base = brute_search(m, plan.y_bound)
        base += convergent_search(m, ceiling)
    else:
        plan = SearchPlan(
            m=m,
            strategy="bounded-only",
            y_bound=FALLBACK_Y_BOUND,
            kappa=None,
            ceiling=None,
        )
        base = brute_search(m, plan.y_bound)

    by_key: dict[tuple[int, tuple[int, int]], SolvedOrbit] = {}

    def add(x: int, y: int, lam: int) -> None:
        ob = orbit(x, y, lam=lam)
        key = (ob.lam, ob.canonical)
        if key in by_key:
            return
        for xx, yy in ob.members:
            if eval_form(m, xx, yy) != ob.lam:
                raise AssertionError(f"orbit member fails the form at m={m}")
        n_val = n_from_solution(m, *ob.canonical)
        prim = gcd(*ob.canonical) == 1
        by_key[key] = SolvedOrbit(
            lam=ob.lam, members=ob.members, n_value=n_val, primitive=prim
        )

    for s in base:
        add(s.x, s.y, s.lam)

    # a non-trivial solution with gcd d > 1 is d times a primitive solution
    # of lam/d^3, so scaling the primitive ones regains every imprimitive
    # solution whose lam still divides m^2+3m+9 (none are known to exist,
    # but completeness should not depend on that)
    for key in sorted(by_key):
        row = by_key[key]
        if not row.primitive:
            continue
        d = 2
        while d**3 * row.lam <= t:
            if t % (d**3 * row.lam) == 0:
                (x, y) = row.members[0]
                add(d * x, d * y, d**3 * row.lam)
            d += 1

    rows = tuple(by_key[k] for k in sorted(by_key))
    return SolutionSet(m=m, t=t, plan=plan, rows=rows)


def _worker_count(workers: int | None) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get(_WORKERS_ENV, "")
    if env.strip():
        return max(1, int(env))
    return 1


def solve_range(lo: int, hi: int, workers: int | None = None) -> list[SolutionSet]:
    """solve_family across [lo, hi], optionally on a process pool.

    Worker count comes from the SIMPLEST_CUBIC_WORKERS environment variable
    when not passed explicitly. Output order and content are independent of
    the worker count.
    """
    if lo < -1:
        raise ValueError("range must start at m >= -1")
    if hi < lo:
        raise ValueError("empty range")
    ms = list(range(lo, hi + 1))
    n = _worker_count(workers)
    if n > 1 and len(ms) > 1:
        from concurrent.futures import ProcessPoolExecutor

        chunk = max(1, len(ms) // (8 * n))
        with ProcessPoolExecutor(max_workers=n) as pool:
            results = list(pool.map(solve_family, ms, chunksize=chunk))
    else:
        results = [solve_family(m) for m in ms]
    for res in results:
        for row in res.rows:
            if res.t % row.lam != 0:
                raise AssertionError(f"emitted lam does not divide t at m={res.m}")
    return results
