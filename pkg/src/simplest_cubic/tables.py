"""Reference data for the family, used by the verification harness.

Three independent kinds of ground truth live here:

* the complete list of nontrivial solutions to F_m(x, y) = lambda over all
  m >= -1 and all positive divisors lambda of m^2 + 3m + 9 (66 solutions in
  22 orbit rows),
* the known coincidences among the splitting fields L_m (four classes, 11
  index pairs below 10^4, exhaustively confirmed far beyond that), and
* classical small-value facts: all solutions with lambda = 1, the six-point
  solution block at lambda = 2m + 3, and the exceptional extras at m = 1.

Every entry is data, not computation.  The verification harness recomputes
each item from first principles and diffs against these tuples.
"""

from __future__ import annotations

# ---------------------------------------------------------------------------
# Complete nontrivial solution list for divisor values of the form constant.
#
# Each row is (m, n_value, lam, members) where members is one full orbit
# under (x, y) -> (y, -x-y) and n_value is the index produced by the N-map
# n = m + (m^2+3m+9) * x*y*(x+y) / lam.  Rows are grouped by m ascending.
# ---------------------------------------------------------------------------

SOLUTION_TABLE: tuple[tuple[int, int, int, tuple[tuple[int, int], ...]], ...] = (
    (-1, -15, 1, ((-1, -1), (-1, 2), (2, -1))),
    (-1, 1259, 1, ((5, 4), (4, -9), (-9, 5))),
    (-1, 5, 7, ((2, 1), (1, -3), (-3, 2))),
    (0, 54, 1, ((2, 1), (1, -3), (-3, 2))),
    (0, -6, 3, ((-1, -1), (-1, 2), (2, -1))),
    (1, -69, 13, ((-5, -2), (-2, 7), (7, -5))),
    (2, -2392, 1, ((-7, -2), (-2, 9), (9, -7))),
    (3, -3, 9, ((-1, -1), (-1, 2), (2, -1))),
    (3, -57, 9, ((-4, -1), (-1, 5), (5, -4))),
    (5, -1, 49, ((-1, -2), (-2, 3), (3, -1))),
    (5, -15, 49, ((-4, -1), (-1, 5), (5, -4))),
    (5, 1259, 49, ((19, 3), (3, -22), (-22, 19))),
    (12, -2, 27, ((-1, -1), (-1, 2), (2, -1))),
    (12, -1262, 27, ((-13, -1), (-1, 14), (14, -13))),
    (12, -8, 189, ((-4, -1), (-1, 5), (5, -4))),
    (54, 0, 343, ((-1, -2), (-2, 3), (3, -1))),
    (54, -6, 1029, ((-4, -1), (-1, 5), (5, -4))),
    (66, -4, 4563, ((-5, -2), (-2, 7), (7, -5))),
    (1259, -1, 226981, ((-4, -5), (-5, 9), (9, -4))),
    (1259, -15, 226981, ((-13, -1), (-1, 14), (14, -13))),
    (1259, 5, 1588867, ((-3, -19), (-19, 22), (22, -3))),
    (2389, -5, 300763, ((-7, -2), (-2, 9), (9, -7))),
)

# Expected factorization strings (ascii normal form: primes ascending,
# "^" for exponents above 1, "*" between factors) for the constants and
# lambda values appearing above.

CONSTANT_FACTORED: dict[int, str] = {
    -1: "7",
    0: "3^2",
    1: "13",
    2: "19",
    3: "3^3",
    5: "7^2",
    12: "3^3*7",
    54: "3^2*7^3",
    66: "3^3*13^2",
    1259: "7*61^3",
    2389: "19*67^3",
}

LAMBDA_FACTORED: dict[int, str] = {
    1: "1",
    3: "3",
    7: "7",
    9: "3^2",
    13: "13",
    27: "3^3",
    49: "7^2",
    189: "3^3*7",
    343: "7^3",
    1029: "3*7^3",
    4563: "3^3*13^2",
    226981: "61^3",
    300763: "67^3",
    1588867: "7*61^3",
}

# ---------------------------------------------------------------------------
# Splitting-field coincidences.  Within each class every two indices give
# the same field; across classes (and for every index outside them) the
# fields are pairwise distinct.  Exhaustive below 10^4, and in fact the
# four classes are the only coincidences for all m >= -1.
# ---------------------------------------------------------------------------

OVERLAP_CLASSES: tuple[tuple[int, ...], ...] = (
    (-1, 5, 12, 1259),
    (0, 3, 54),
    (1, 66),
    (2, 2389),
)


def overlap_pairs() -> list[tuple[int, int]]:
    """All index pairs (m, n), m < n, whose fields coincide."""
    pairs = []
    for cls in OVERLAP_CLASSES:
        for i, a in enumerate(cls):
            for b in cls[i + 1:]:
                pairs.append((a, b))
    return sorted(pairs)


# Index pairs with equal conductor but distinct fields, with the shared
# conductor value.  These witness that the conductor alone cannot decide
# field isomorphism.

EQUAL_CONDUCTOR_PAIRS: tuple[tuple[int, int, int], ...] = (
    (13, 201, 217),
    (27, 48, 819),
    (33, 90, 1197),
    (51, 972, 2763),
    (53, 282, 2977),
    (79, 417, 6487),
    (105, 183, 11349),
    (261, 945, 68913),
    (516, 789, 89271),
)

# ---------------------------------------------------------------------------
# Solutions at the extreme divisor lambda = m^2 + 3m + 9.  Exactly seven
# indices admit any; for m = 3 the block is the trivial one (27 = 3^3).
# ---------------------------------------------------------------------------

MAX_LAMBDA_BLOCKS: dict[int, tuple[tuple[int, int], ...]] = {
    -1: ((2, 1), (1, -3), (-3, 2)),
    1: ((-5, -2), (-2, 7), (7, -5)),
    3: ((3, 0), (0, -3), (-3, 3)),
    5: ((-1, -2), (-2, 3), (3, -1),
        (-4, -1), (-1, 5), (5, -4),
        (19, 3), (3, -22), (-22, 19)),
    12: ((-4, -1), (-1, 5), (5, -4)),
    66: ((-5, -2), (-2, 7), (7, -5)),
    1259: ((-3, -19), (-19, 22), (22, -3)),
}

# ---------------------------------------------------------------------------
# Classical small-value solution lists.
# ---------------------------------------------------------------------------

# Nontrivial solutions of F_m(x, y) = 1.  For every other m >= -1 the unit
# equation has only the trivial solutions (1,0), (0,-1), (-1,1).

UNIT_SOLUTIONS: dict[int, tuple[tuple[int, int], ...]] = {
    -1: ((-1, -1), (-1, 2), (2, -1), (5, 4), (4, -9), (-9, 5)),
    0: ((2, 1), (1, -3), (-3, 2)),
    2: ((-7, -2), (-2, 9), (9, -7)),
}

# The exceptional solutions of F_1(x, y) = 5; no other m >= -1 has an
# extra solution with 1 < lambda < 2m + 3.

EXTRA_M1_LAMBDA5: tuple[tuple[int, int], ...] = (
    (3, 1), (1, -4), (-4, 3), (8, 3), (3, -11), (-11, 8),
)


def small_lambda_block(m: int) -> tuple[tuple[int, int], ...]:
    """The solutions of F_m(x, y) = 2m + 3, m >= 0, without duplicates.

    Two orbits in general; they coincide when m = 0.
    """
    pairs = [(-1, -1), (-1, 2), (2, -1),
             (-m - 1, -1), (-1, m + 2), (m + 2, -m - 1)]
    seen: list[tuple[int, int]] = []
    for p in pairs:
        if p not in seen:
            seen.append(p)
    return tuple(seen)
