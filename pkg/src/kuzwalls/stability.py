"""Central charges and slopes of the weak stability conditions sigma_{alpha, beta}.

Parameters are stored as (alpha^2, beta) so every comparison is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .character import Character, Q

INF = math.inf
Slope = Union[Fraction, float]


@dataclass(frozen=True)
class StabilityParams:
    alpha_sq: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha_sq", Q(self.alpha_sq))
        object.__setattr__(self, "beta", Q(self.beta))
        if self.alpha_sq <= 0:
            raise ValueError(f"alpha^2 must be positive, got {self.alpha_sq}")

    @property
    def alpha(self) -> float:
        """Display only; alpha itself may be irrational."""
        return math.sqrt(self.alpha_sq)

    def __str__(self):
        return f"(alpha^2={self.alpha_sq}, beta={self.beta})"


@dataclass(frozen=True)
class ChargeValue:
    re: Fraction
    im: Fraction

    def __neg__(self):
        return ChargeValue(-self.re, -self.im)

    def __add__(self, other):
        return ChargeValue(self.re + other.re, self.im + other.im)


def central_charge(v: Character, p: StabilityParams) -> ChargeValue:
    """Z = i ch1^beta + alpha^2/2 ch0 - ch2^beta."""
    w = v.at(p.beta)
    return ChargeValue(p.alpha_sq / 2 * w.rank - w.c2, w.c1)


def slope(v: Character, p: StabilityParams) -> Slope:
    """-Re Z / Im Z, or ``math.inf`` when Im Z = 0."""
    z = central_charge(v, p)
    if z.im == 0:
        return INF
    return -z.re / z.im


def slope_expanded(v: Character, p: StabilityParams) -> Slope:
    """The same slope written through untwisted values:

        (ch2 - (alpha^2 + beta^2)/2 rk) / (ch1 - beta rk) - beta
    """
    w = v.at(0)
    den = w.c1 - p.beta * w.rank
    if den == 0:
        return INF
    return (w.c2 - (p.alpha_sq + p.beta ** 2) / 2 * w.rank) / den - p.beta


def compare_slopes(v: Character, w: Character, p: StabilityParams) -> int:
    """Sign of mu(v) - mu(w), by cross-multiplication; two infinite slopes tie."""
    zv, zw = central_charge(v, p), central_charge(w, p)
    if zv.im == 0 and zw.im == 0:
        return 0
    if zv.im == 0:
        return 1
    if zw.im == 0:
        return -1
    # mu = -re/im; compare -re_v*im_w with -re_w*im_v, fixing signs of the ims
    lhs = -zv.re * zw.im
    rhs = -zw.re * zv.im
    sign = 1 if zv.im * zw.im > 0 else -1
    diff = (lhs - rhs) * sign
    return (diff > 0) - (diff < 0)


def weakly_positive(v: Character, p: StabilityParams) -> bool:
    """Im Z > 0, or Im Z = 0 and Re Z <= 0."""
    z = central_charge(v, p)
    return z.im > 0 or (z.im == 0 and z.re <= 0)


def rotate_second_tilt(z: ChargeValue) -> ChargeValue:
    """Multiply by -i, the central charge of the doubly tilted heart."""
    return ChargeValue(z.im, -z.re)
