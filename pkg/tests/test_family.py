"""The cubic form, its symmetries, and the attached polynomials."""

import random

from simplest_cubic.family import (
    eval_form,
    family_constant,
    identity_witness,
    is_trivial,
    normalize_index,
    orbit,
    poly_fm,
    poly_gm,
    sigma,
    trivial_solutions,
)

RNG_SEED = 20260819


def test_eval_form_matches_expansion():
    rng = random.Random(RNG_SEED)
    for _ in range(200):
        m, x, y = (rng.randint(-50, 50) for _ in range(3))
        expect = x**3 - m * x**2 * y - (m + 3) * x * y**2 - y**3
        assert eval_form(m, x, y) == expect


def test_sigma_has_order_three():
    rng = random.Random(RNG_SEED + 1)
    for _ in range(100):
        x, y = rng.randint(-99, 99), rng.randint(-99, 99)
        p = (x, y)
        q = sigma(*p)
        r = sigma(*q)
        assert sigma(*r) == p
        m = rng.randint(-20, 20)
        assert eval_form(m, *p) == eval_form(m, *q) == eval_form(m, *r)


def test_negation_flips_sign():
    rng = random.Random(RNG_SEED + 2)
    for _ in range(100):
        m, x, y = (rng.randint(-40, 40) for _ in range(3))
        assert eval_form(m, -x, -y) == -eval_form(m, x, y)


def test_twin_index_symmetry():
    # F_{-m-3}(-y, -x) == F_m(x, y)
    rng = random.Random(RNG_SEED + 3)
    for _ in range(100):
        m, x, y = (rng.randint(-40, 40) for _ in range(3))
        assert eval_form(-m - 3, -y, -x) == eval_form(m, x, y)
    assert normalize_index(-2) == -1
    assert normalize_index(-10) == 7
    assert normalize_index(4) == 4


def test_family_constant_invariance():
    for m in range(-30, 30):
        assert family_constant(m) == family_constant(-m - 3)
        assert family_constant(m) > 0


def test_orbit_canonical_form():
    o = orbit(5, 4, lam=1)
    assert o.members[0] == min(o.members)
    assert set(o.members) == {(5, 4), (4, -9), (-9, 5)}
    # all three members give the same orbit object
    for x, y in o.members:
        assert orbit(x, y, lam=1) == o


def test_trivial_solutions():
    assert is_trivial(1, 0) and is_trivial(0, -1) and is_trivial(-1, 1)
    assert not is_trivial(2, 1)
    sols = trivial_solutions(3, 27)
    assert {s.pair() for s in sols} == {(3, 0), (0, -3), (-3, 3)}
    for s in sols:
        assert eval_form(3, s.x, s.y) == 27
    assert trivial_solutions(5, 49) == []


def test_discriminants_small_range():
    for m in range(-10, 11):
        t = family_constant(m)
        assert poly_fm(m).discriminant == t * t
        assert poly_gm(m).discriminant == (2 * m + 3) ** 2 * t * t


def test_resultant_identities_spot():
    w = identity_witness(0, 1, 1)
    assert w.holds
    assert w.h == 18 and w.f == -3
    rng = random.Random(RNG_SEED + 4)
    for _ in range(300):
        m, x, y = (rng.randint(-100, 100) for _ in range(3))
        assert identity_witness(m, x, y).holds
