from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from conftest import characters
from oracles import ch_line_bundle, chi_line_bundle
from kuzwalls.character import Character, b_char, modify, twist
from kuzwalls.euler import (DERIVED_RANK_COEFF, PRINTED_RANK_COEFF, b0_frame_minus1, chi_b2_chain,
                            chi_p3, chi_twisted_down)


def line(n, mult=1):
    r, c1, c2, c3 = ch_line_bundle(n)
    return Character(F(mult), mult * c1, mult * c2, mult * c3, F(0))


def direct_sum(*parts):
    out = parts[0]
    for p in parts[1:]:
        out = out + p
    return out


# Forg(B_0) = O + O(-1) + O(-2)^2, and B_{2j} = B_0 (x) O(j)
def forg_b(i):
    assert i % 2 == 0
    j = i // 2
    return direct_sum(line(j), line(j - 1), line(j - 2, 2))


def test_chi_examples():
    assert chi_p3(Character.make(1, 0, 0, 0)) == 1
    assert chi_p3(Character.make(1, 1, F(1, 2), F(1, 6))) == 4
    assert chi_p3(Character.make(1, -1, F(1, 2), F(-1, 6))) == 0


@pytest.mark.parametrize("n", range(-5, 6))
def test_chi_line_bundles(n):
    assert chi_p3(line(n)) == chi_line_bundle(n)


def test_chi_needs_c3():
    with pytest.raises(ValueError):
        chi_p3(Character.make(1, 0, 0))


@given(characters(full=True, frame=0), characters(full=True, frame=0))
def test_chi_additive(v, w):
    assert chi_p3(v + w) == chi_p3(v) + chi_p3(w)


@given(characters(full=True, frame=0))
def test_first_line_is_chi_of_twist(v):
    assert chi_twisted_down(v) == chi_p3(_down(v))


def _down(v):
    # ch(F(-h)) as a frame-0 character
    w = twist(v, 1)
    return Character(w.rank, w.c1, w.c2, w.c3, F(0))


@pytest.mark.parametrize("i", [-2, 0, 2])
def test_forgetful_images_match_b_char(i):
    assert b0_frame_minus1(forg_b(i)).same_class(b_char(i))


@settings(max_examples=1000)
@given(characters(full=True, frame=0))
def test_chain_with_derived_coefficient(v):
    chain = chi_b2_chain(b0_frame_minus1(v), chi_p3(v), DERIVED_RANK_COEFF)
    assert chain == chi_twisted_down(v)


def test_b2_is_exceptional_only_with_derived_coefficient():
    f = forg_b(2)
    v = b0_frame_minus1(f)
    assert chi_twisted_down(f) == 1
    assert chi_b2_chain(v, chi_p3(f), DERIVED_RANK_COEFF) == 1
    assert chi_b2_chain(v, chi_p3(f), PRINTED_RANK_COEFF) != 1


@pytest.mark.parametrize("n", [1, 2, 5])
def test_displayed_substitution_step(n):
    # ch^{-1}_{B0} = n (-4, 1, -1/8): -ch2 - ch1/2 - k rk = (-1/32 + 1/8 - k) rk
    v = Character.make(-4 * n, n, F(-n, 8), beta=-1)
    rk = v.rank
    for k in (PRINTED_RANK_COEFF, DERIVED_RANK_COEFF):
        assert chi_b2_chain(v, 0, k) == (F(-1, 32) + F(1, 8) - k) * rk
    # with either coefficient the step is positive for negative rank
    assert chi_b2_chain(v, 0, DERIVED_RANK_COEFF) > 0


def test_zero_character():
    assert chi_b2_chain(Character.make(0, 0, 0), F(7, 3)) == F(7, 3)
