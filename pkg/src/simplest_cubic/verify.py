"""Recompute every reference table from first principles and diff.

Each check returns (ok, lines).  The lines are a human-readable report;
on failure the first divergent record is named.  The checks are:

* solutions       -- full solver sweep over -1 <= m <= 2500 against the
                     66-solution table, including N values, factorization
                     strings, and primitivity.
* equal-conductor -- the nine equal-conductor index pairs have matching
                     conductors and genuinely distinct fields.
* overlaps        -- classification over -1 <= m <= 10^4 yields exactly
                     the 11 known coincidence pairs.
* max-lambda      -- the seven solution blocks at lambda = m^2 + 3m + 9,
                     including the trivial block at m = 3.
* small-lambda    -- the unit-equation lists, the lambda = 2m + 3 block,
                     and the exceptional m = 1, lambda = 5 solutions.
"""

from __future__ import annotations

from .arith import factor
from .family import eval_form, family_constant, is_trivial, orbit, trivial_solutions
from .isofield import classify_range, conductor, is_isomorphic
from .solver import solve_family, solve_range
from . import tables

Report = tuple[bool, list[str]]


def _canonical(members: tuple[tuple[int, int], ...], lam: int) -> tuple[tuple[int, int], ...]:
    first = members[0]
    return orbit(first[0], first[1], lam=lam).members


def check_solutions(lo: int = -1, hi: int = 2500, results=None) -> Report:
    """Solver sweep over [lo, hi] versus the stored solution table.

    An already-computed list of solution sets covering [lo, hi] may be
    passed to avoid repeating the sweep.
    """
    lines = []
    expected = {}
    for m, n_value, lam, members in tables.SOLUTION_TABLE:
        if lo <= m <= hi:
            expected[(m, lam, _canonical(members, lam))] = n_value

    got = {}
    if results is None:
        results = solve_range(lo, hi)
    for result in results:
        for row in result.rows:
            if not row.primitive:
                return False, [f"non-primitive row at m={result.m}: {row.members[0]}"]
            got[(result.m, row.lam, row.members)] = row.n_value

    for key in sorted(expected):
        if key not in got:
            return False, [f"missing solution row: m={key[0]} lambda={key[1]} {key[2]}"]
    for key in sorted(got):
        if key not in expected:
            return False, [f"unexpected solution row: m={key[0]} lambda={key[1]} {key[2]}"]
        if got[key] != expected[key]:
            return False, [
                f"N mismatch at m={key[0]} lambda={key[1]}: "
                f"expected {expected[key]}, got {got[key]}"
            ]

    for m, _, lam, _ in tables.SOLUTION_TABLE:
        if not lo <= m <= hi:
            continue
        want_t = tables.CONSTANT_FACTORED[m]
        have_t = str(factor(family_constant(m)))
        if have_t != want_t:
            return False, [f"constant factorization at m={m}: {have_t} != {want_t}"]
        want_l = tables.LAMBDA_FACTORED[lam]
        have_l = str(factor(lam))
        if have_l != want_l:
            return False, [f"lambda factorization {lam}: {have_l} != {want_l}"]

    n_sol = 3 * len(got)
    lines.append(
        f"indices {lo}..{hi}: {len(got)} orbit rows, "
        f"{n_sol}/{3 * len(expected)} solutions matched"
    )
    return len(got) == len(expected), lines


def check_equal_conductor() -> Report:
    """Equal conductors, distinct fields, for the nine stored pairs."""
    lines = []
    for m, n, value in tables.EQUAL_CONDUCTOR_PAIRS:
        cm, cn = conductor(m), conductor(n)
        if cm.value != value or cn.value != value:
            return False, [
                f"conductor mismatch at ({m},{n}): got {cm.value}, {cn.value}, want {value}"
            ]
        same, witness = is_isomorphic(m, n)
        if same:
            return False, [f"pair ({m},{n}) unexpectedly isomorphic: {witness}"]
        lines.append(f"({m}, {n}): conductor {value}, fields distinct")
    return True, lines


def check_overlaps(lo: int = -1, hi: int = 10000) -> Report:
    """Classification sweep versus the known coincidence pairs."""
    want = [p for p in tables.overlap_pairs() if lo <= p[0] and p[1] <= hi]
    got = [p for cls in classify_range(lo, hi) for p in _pairs_of(cls)]
    got.sort()
    if got != want:
        missing = sorted(set(want) - set(got))
        extra = sorted(set(got) - set(want))
        return False, [f"pair lists differ: missing {missing}, extra {extra}"]
    return True, [f"indices {lo}..{hi}: exactly {len(got)} coincidence pairs"]


def _pairs_of(cls: list[int]) -> list[tuple[int, int]]:
    return [(a, b) for i, a in enumerate(cls) for b in cls[i + 1:]]


def check_max_lambda() -> Report:
    """The seven solution blocks at lambda = m^2 + 3m + 9."""
    lines = []
    for m, block in sorted(tables.MAX_LAMBDA_BLOCKS.items()):
        t = family_constant(m)
        for x, y in block:
            if eval_form(m, x, y) != t:
                return False, [f"block member ({x},{y}) fails F_{m} = {t}"]
        nontrivial = {p for p in block if not is_trivial(*p)}
        solved = set()
        for row in solve_family(m).rows:
            if row.lam == t:
                solved.update(row.members)
        if solved != nontrivial:
            return False, [f"solver block at m={m}: got {sorted(solved)}"]
        trivial_part = {p for p in block if is_trivial(*p)}
        if trivial_part and trivial_part != {s.pair() for s in trivial_solutions(m, t)}:
            return False, [f"trivial block at m={m} does not match"]
        lines.append(f"m={m}: {len(block)} solutions at lambda={t}")

    listed = set(tables.MAX_LAMBDA_BLOCKS)
    from_table = {m for m, _, lam, _ in tables.SOLUTION_TABLE if lam == family_constant(m)}
    if from_table | {3} != listed:
        return False, [f"block index set inconsistent: {sorted(from_table)}"]
    return True, lines


def check_small_lambda() -> Report:
    """Unit solutions, the 2m + 3 block, and the m = 1 exception."""
    lines = []
    for m, extras in sorted(tables.UNIT_SOLUTIONS.items()):
        for x, y in extras:
            if eval_form(m, x, y) != 1:
                return False, [f"({x},{y}) fails F_{m} = 1"]
        lines.append(f"m={m}: {len(extras)} nontrivial unit solutions")

    for x, y in tables.EXTRA_M1_LAMBDA5:
        if eval_form(1, x, y) != 5:
            return False, [f"({x},{y}) fails F_1 = 5"]
    lines.append("m=1: 6 exceptional solutions at lambda=5")

    for m in range(0, 51):
        for x, y in tables.small_lambda_block(m):
            if eval_form(m, x, y) != 2 * m + 3:
                return False, [f"({x},{y}) fails F_{m} = {2 * m + 3}"]

    # When 2m + 3 divides m^2 + 3m + 9 the block must also fall out of the
    # divisor solver; that happens exactly when 2m + 3 divides 27.
    for m in (0, 3, 12):
        lam = 2 * m + 3
        want = {p for p in tables.small_lambda_block(m) if not is_trivial(*p)}
        have = set()
        for row in solve_family(m).rows:
            if row.lam == lam:
                have.update(row.members)
        if have != want:
            return False, [f"solver 2m+3 block at m={m}: got {sorted(have)}"]
    lines.append("2m+3 block confirmed for m in 0..50, solver-checked at m=0,3,12")
    return True, lines


CHECKS = {
    "solutions": check_solutions,
    "equal-conductor": check_equal_conductor,
    "overlaps": check_overlaps,
    "max-lambda": check_max_lambda,
    "small-lambda": check_small_lambda,
}


def run_checks(names: list[str]) -> Report:
    """Run the named checks in order; aggregate the reports."""
    all_ok = True
    lines: list[str] = []
    for name in names:
        ok, sub = CHECKS[name]()
        all_ok = all_ok and ok
        status = "ok" if ok else "FAIL"
        lines.append(f"[{status}] {name}")
        lines.extend("  " + s for s in sub)
    return all_ok, lines
