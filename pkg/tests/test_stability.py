import math
from fractions import Fraction as F

import pytest
from hypothesis import assume, given

from conftest import characters, rationals
from kuzwalls.character import Character, b_char, shift
from kuzwalls.presets import E_C
from kuzwalls.stability import (ChargeValue, StabilityParams, central_charge, compare_slopes,
                                rotate_second_tilt, slope, slope_expanded, weakly_positive)

params = lambda: rationals(30, 16).filter(lambda q: q > 0).flatmap(
    lambda a2: rationals(6, 4).map(lambda b: StabilityParams(a2, b)))


def test_params_validate():
    with pytest.raises(ValueError):
        StabilityParams(0, -1)
    assert StabilityParams(F(5, 16), -1).alpha == pytest.approx(math.sqrt(5) / 4)


def test_central_charge_examples():
    assert central_charge(E_C, StabilityParams(F(9, 16), -1)) == ChargeValue(0, 6)
    assert central_charge(b_char(1), StabilityParams(F(1, 16), -1)) == ChargeValue(0, 1)
    assert central_charge(Character.make(0, 0, 0), StabilityParams(1, 0)) == ChargeValue(0, 0)


def test_slope_examples():
    for a2 in (F(1, 400), F(1, 16), F(9, 16), F(5)):
        assert slope(E_C, StabilityParams(a2, -1)) == 0
    assert slope(shift(b_char(-1), 1), StabilityParams(F(9, 16), -1)) == 0
    assert slope(Character.make(0, 0, 1), StabilityParams(1, 0)) == math.inf


@given(characters(), params())
def test_expanded_slope_agrees(v, p):
    assume(v.at(p.beta).c1 != 0)
    assert slope(v, p) == slope_expanded(v, p)


@given(characters(), params())
def test_shift_negates_charge(v, p):
    assert central_charge(shift(v, 1), p) == -central_charge(v, p)


@given(characters(), params(), rationals(10, 3).filter(lambda q: q > 0))
def test_slope_scale_invariant(v, p, k):
    assert slope(v, p) == slope(k * v, p)


@given(characters(), characters(), params())
def test_compare_matches_division(v, w, p):
    sv, sw = slope(v, p), slope(w, p)
    expected = 0 if sv == sw else (1 if sv > sw else -1)
    assert compare_slopes(v, w, p) == expected


def test_weakly_positive():
    p = StabilityParams(F(1, 16), -1)
    assert weakly_positive(E_C, p)
    assert weakly_positive(Character.make(0, 0, 0), p)
    assert not weakly_positive(-E_C, p)


def test_rotation():
    assert rotate_second_tilt(ChargeValue(0, 6)) == ChargeValue(6, 0)
    assert rotate_second_tilt(ChargeValue(0, 0)) == ChargeValue(0, 0)
    z = ChargeValue(F(3, 7), F(-2))
    r = z
    for _ in range(4):
        r = rotate_second_tilt(r)
    assert r == z


@given(characters(), characters(), params())
def test_walls_survive_rotation(v, w, p):
    zv, zw = central_charge(v, p), central_charge(w, p)
    assume(zv.im > 0 and zw.im > 0)
    rv, rw = rotate_second_tilt(zv), rotate_second_tilt(zw)
    # equal slope before <=> rotated charges proportional (positive ratio of the old ims)
    same = compare_slopes(v, w, p) == 0
    assert same == (rv.re * rw.im == rw.re * rv.im)
