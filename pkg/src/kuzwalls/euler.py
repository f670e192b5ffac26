"""Riemann-Roch on P^3 and the chi(B_2, -) re-expression in B_0 coordinates."""

from __future__ import annotations

from fractions import Fraction

from .character import Character, modify, twist

# Todd class of P^3 paired against (c3, c2, c1, rank)
TODD = (Fraction(1), Fraction(2), Fraction(11, 6), Fraction(1))

# rank coefficient as displayed in the chain of equalities for chi(B_2, E)
PRINTED_RANK_COEFF = Fraction(13, 16)
# the coefficient that makes the chain an identity with ch_{B0} = ch(1 - 11/32 l)
DERIVED_RANK_COEFF = Fraction(11, 32)


def require_full(v: Character) -> Character:
    if v.c3 is None:
        raise ValueError(f"{v} has no degree-3 part")
    return v


def chi_p3(v: Character) -> Fraction:
    """chi(O, F) = ch3 + 2 ch2 + 11/6 ch1 + rk for an untwisted ordinary character."""
    require_full(v)
    if v.frame != 0:
        raise ValueError("chi_p3 expects an untwisted (frame 0) ordinary character")
    t3, t2, t1, t0 = TODD
    return t3 * v.c3 + t2 * v.c2 + t1 * v.c1 + t0 * v.rank


def chi_twisted_down(v: Character) -> Fraction:
    """chi(O, F(-h)) via the first line of the chain: expand ch(F).e^{-h} termwise."""
    require_full(v)
    r, c1, c2, c3 = v.rank, v.c1, v.c2, v.c3
    d3 = c3 - c2 + c1 / 2 - r / 6
    d2 = c2 - c1 + r / 2
    d1 = c1 - r
    return d3 + 2 * d2 + Fraction(11, 6) * d1 + r


def chi_b2_chain(v_b0: Character, chi_forg: Fraction,
                 rank_coeff: Fraction = PRINTED_RANK_COEFF) -> Fraction:
    """chi(B_2, E) = chi(Forg E) - ch2^{-1} - 1/2 ch1^{-1} - k rk.

    ``v_b0`` is the modified character; it is read in frame -1.  The
    default ``k`` is the displayed 13/16; the value consistent with the
    11/32 modification is :data:`DERIVED_RANK_COEFF`.
    """
    w = v_b0.at(-1)
    return chi_forg - w.c2 - w.c1 / 2 - rank_coeff * w.rank


def b0_frame_minus1(ordinary: Character) -> Character:
    """ch^{-1}_{B0} of an object whose forgetful image has ``ordinary`` character."""
    return twist(modify(ordinary), -1)
