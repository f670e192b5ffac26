from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from conftest import characters, rationals
from oracles import default_lattice_oracle, twist_values
from kuzwalls.character import (Character, NonIntegralCoordinates, b_char, b_index, discriminant,
                                half_twist, hermite_normal_form, in_row_span, lattice_member,
                                modify, ordinary_parity_ok, printed_parity_ok, shift, twist, unmodify)
from kuzwalls.presets import E_C, LAMBDA1, LAMBDA2, M_L, default_lattice, parse_character


def test_modify_examples():
    assert modify(Character.make(1, 0, 0)).triple == (1, 0, F(-11, 32))
    assert modify(Character.make(0, 0, 1)).triple == (0, 0, 1)
    assert modify(Character.make(4, -3, F(9, 8))).triple == (4, -3, F(-1, 4))


def test_modify_rejects_twisted_input():
    with pytest.raises(ValueError):
        modify(Character(F(1), F(0), F(0), None, F(-1)))


def test_twist_example():
    assert twist(Character.make(4, -3, F(9, 8)), -1).triple == (4, 1, F(1, 8))


@given(characters(full=True, frame=0), rationals(8, 4))
def test_twist_matches_series(v, beta):
    got = twist(v, beta)
    assert list(got.triple) + [got.c3] == twist_values([v.rank, v.c1, v.c2, v.c3], beta)
    assert got.frame == beta


@given(characters(full=True), rationals(6, 4), rationals(6, 4))
def test_twist_group_law(v, b1, b2):
    assert twist(twist(v, b1), b2) == twist(v, b1 + b2)
    assert twist(twist(v, b1), -b1) == v
    assert twist(v, 0) == v


@given(characters(), rationals(6, 4), st.integers(-3, 3))
def test_discriminant_invariance(v, beta, n):
    d = discriminant(v)
    assert discriminant(twist(v, beta)) == d
    assert discriminant(shift(v, n)) == d
    assert discriminant(half_twist(v)) == d


def test_discriminant_examples():
    assert discriminant(E_C) == 36
    assert discriminant(M_L) == 16


@pytest.mark.parametrize("i", range(-10, 11))
def test_b_char_anchors(i):
    b = b_char(i).at(-1)
    assert discriminant(b) == 0
    assert b.c1 / b.rank == F(i, 2) - F(1, 4)
    assert b_index(b_char(i)) == (i, 1)


def test_b_char_examples():
    assert b_char(0).at(-1).triple == (4, -1, F(1, 8))
    assert b_char(-1).at(-1).triple == (4, -3, F(9, 8))
    assert b_char(3).at(-1).triple == (4, 5, F(25, 8))


@pytest.mark.parametrize("i", range(-5, 6))
def test_half_twist_steps_b(i):
    assert half_twist(b_char(i)).same_class(b_char(i + 1))


@given(characters())
def test_half_twist_twice_is_twist(v):
    hh = half_twist(half_twist(v))
    t = twist(v, -1)
    assert hh.triple == t.triple


def test_half_twist_example():
    w = half_twist(Character.make(0, 6, 0))
    assert w.triple == (0, 6, 3)


def test_shift():
    assert shift(b_char(-1), 1).at(-1).triple == (-4, 3, F(-9, 8))
    v = Character.make(4, 1, F(1, 8))
    assert shift(v, 2) == v
    assert shift(shift(v, 1), 1) == v


@given(characters(frame=0))
def test_unmodify_inverts(v):
    assert unmodify(modify(v)) == v


def test_frame_tags_are_aligned_on_addition():
    a = Character.make(4, 1, F(1, 8), beta=-1)
    b = Character.make(0, 6, 0, beta=-1)
    assert (a + b).at(-1).triple == (4, 7, F(1, 8))


def test_parse_character_forms():
    assert parse_character("B(-1)[1]").at(-1).triple == (-4, 3, F(-9, 8))
    assert parse_character("E_C").same_class(E_C)
    assert parse_character("0,6,0@beta=-1").same_class(E_C)
    assert parse_character("1,0,0,0").c3 == 0
    with pytest.raises(ValueError):
        parse_character("1,2")


# --- lattice --------------------------------------------------------------------

def test_default_lattice_index_and_basis():
    L = default_lattice()
    assert L.index() == 64 == default_lattice_oracle().index()
    # HNF spans the generators and vice versa
    for g in L.generators:
        assert in_row_span(g.coords(), L.basis)
    gens_hnf = hermite_normal_form(g.coords() for g in L.generators)
    for row in L.basis:
        assert in_row_span(row, gens_hnf)


@given(st.integers(-40, 40), st.integers(-20, 20), st.integers(-80, 80))
def test_lattice_membership_matches_coset_oracle(r, c1, e):
    v = Character.make(r, c1, F(e, 8), beta=-1)
    assert lattice_member(v, default_lattice()) == ((r, c1, e) in default_lattice_oracle())


@given(st.lists(st.integers(-5, 5), min_size=5, max_size=5),
       st.lists(st.integers(-5, 5), min_size=5, max_size=5))
def test_lattice_subgroup(a, b):
    L = default_lattice()
    u = sum((k * g for k, g in zip(a, L.generators)), Character.make(0, 0, 0, beta=-1))
    w = sum((k * g for k, g in zip(b, L.generators)), Character.make(0, 0, 0, beta=-1))
    assert lattice_member(u + w, L) and lattice_member(-u, L)


def test_lattice_examples():
    L = default_lattice()
    assert lattice_member(b_char(2), L)
    assert lattice_member(E_C, L)
    for e in range(-40, 41):
        assert not lattice_member(Character.make(0, 3, F(e, 8), beta=-1), L)


def test_non_integral_coordinates_raise():
    with pytest.raises(NonIntegralCoordinates):
        lattice_member(Character.make(0, 3, F(1, 16), beta=-1), default_lattice())


def test_generators_pass_first_principles_parity():
    for g in (LAMBDA1, LAMBDA2, b_char(1), b_char(2), b_char(3)):
        assert ordinary_parity_ok(g)


def test_printed_coefficient_rejects_b1():
    # the displayed -5/16 coefficient cannot be right: B1 itself fails it
    assert not printed_parity_ok(b_char(1))
