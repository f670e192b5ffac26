import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from oracles import brute_walls, default_lattice_oracle, parity_iv
from kuzwalls.character import Character, b_char, discriminant
from kuzwalls.presets import E_C, M_L
from kuzwalls.stability import StabilityParams, compare_slopes, slope
from kuzwalls.walls import (ALWAYS, BoundOverflow, describe, enumerate_walls, jh_characters,
                            search_walls, wall_between)


def as_sets(walls, beta=-1):
    return {w.alpha_sq: {frozenset(d.values(beta)) for d in w.decompositions} for w in walls}


@pytest.fixture(scope="module")
def ec_walls():
    return enumerate_walls(E_C, -1, F(1, 400))


def test_ec_against_brute_force(ec_walls):
    assert as_sets(ec_walls) == brute_walls((0, 6, 0), F(1, 400))


def test_ml_against_brute_force():
    walls = enumerate_walls(M_L, -1, F(1, 400))
    assert as_sets(walls) == brute_walls((-4, 3, F(7, 8)), F(1, 400))


def test_ec_wall_values(ec_walls):
    assert [w.alpha_sq for w in ec_walls] == [F(9, 16), F(1, 16), F(1, 144)]
    top = ec_walls[0].decompositions
    assert len(top) == 1
    assert top[0].values(-1) == ((4, 3, F(9, 8)), (-4, 3, F(-9, 8)))


def test_invariants_hold_on_every_decomposition(ec_walls):
    for w in ec_walls:
        for d in w.decompositions:
            assert (d.sub + d.quotient).same_class(d.target)
            assert discriminant(d.sub) >= 0 and discriminant(d.quotient) >= 0
            for part in (d.sub, d.quotient):
                assert slope(part, w.params) == slope(d.target, w.params)
            # the sub is the one whose slope is larger just below the wall
            below = StabilityParams(w.alpha_sq / 2, w.beta)
            assert compare_slopes(d.sub, d.target, below) > 0
            assert 0 < d.sub.at(-1).c1 < 6


def test_no_duplicate_decompositions(ec_walls):
    for w in ec_walls:
        pairs = [frozenset(d.values(-1)) for d in w.decompositions]
        assert len(pairs) == len(set(pairs))


def test_rank_zero_closed_form(ec_walls):
    # a rank-0 target (0, m, T) and sub (a, b, c): alpha^2 = 2(c m - T b) / (a m)
    for w in ec_walls:
        for d in w.decompositions:
            a, b, c = d.sub.at(-1).triple
            assert w.alpha_sq == 2 * c * 6 / (a * 6)


def test_proportional_pairs():
    res = search_walls(E_C, -1, F(1, 400))
    got = {frozenset(d.values(-1)) for d in res.proportional}
    assert got == {frozenset({(0, 2, 0), (0, 4, 0)})}


@pytest.mark.parametrize("beta", [F(-1), F(-5, 4), F(-3, 2), F(-2)])
def test_b1_has_no_walls(beta):
    assert enumerate_walls(b_char(1), beta, F(1, 400)) == []


def test_annotations(ec_walls):
    names = [notes for _, _, notes in jh_characters(ec_walls[0])]
    assert names == [{"sub": "B(2)", "quotient": "B(-1)[1]"}]
    assert describe(E_C) == "lambda(2,1)"
    assert describe(Character.make(8, 2, F(1, 4), beta=-1)) == "B(1)^2"


def test_box_limit():
    with pytest.raises(BoundOverflow):
        search_walls(E_C, -1, F(1, 400), box_limit=10)
    with pytest.raises(ValueError):
        search_walls(E_C, -1, 0)


@pytest.mark.parametrize("workers", [1, 2, 4])
def test_determinism_across_workers(workers, ec_walls):
    assert enumerate_walls(E_C, -1, F(1, 400), workers=workers) == ec_walls


def test_wall_between_examples():
    assert wall_between(E_C, b_char(2), -1) == F(9, 16)
    assert wall_between(E_C, E_C * 2, -1) == ALWAYS
    assert wall_between(b_char(0), b_char(0) * 3, -1) == ALWAYS
    assert wall_between(Character.make(0, 1, 0, beta=-1), Character.make(0, 1, 1, beta=-1), -1) is None


@given(st.integers(-5, 5), st.integers(-5, 5))
def test_wall_between_symmetric(i, j):
    a, b = b_char(i), b_char(j) + E_C
    assert wall_between(a, b, -1) == wall_between(b, a, -1)


def _random_decompositions(n, seed=7):
    """Valid (sub, quotient) pairs built from lattice coordinates, with their wall."""
    rng = random.Random(seed)
    lat = default_lattice_oracle()
    out = []
    while len(out) < n:
        parts = []
        for _ in range(2):
            r = 4 * rng.randint(-4, 4)
            b = rng.randint(1, 5)
            e = rng.randint(-40, 40)
            v = (F(r), F(b), F(e, 8))
            if (r, b, e) not in lat or not parity_iv(*v) or b * b - 2 * v[0] * v[2] < 0:
                continue
            parts.append(v)
        if len(parts) < 2:
            continue
        s, q = (Character.make(*p, beta=-1) for p in parts)
        t = s + q
        a2 = wall_between(s, t, -1)
        if a2 is None or a2 == ALWAYS or a2 < F(1, 50):
            continue
        out.append((s, q, t, a2))
    return out


def test_wall_between_agrees_with_enumeration():
    cases = _random_decompositions(100)
    assert len(cases) == 100
    for s, q, t, a2 in cases:
        walls = {w.alpha_sq: w for w in enumerate_walls(t, -1, a2)}
        assert a2 in walls, (s, q)
        pairs = {frozenset(d.values(-1)) for d in walls[a2].decompositions}
        assert frozenset((s.at(-1).triple, q.at(-1).triple)) in pairs
