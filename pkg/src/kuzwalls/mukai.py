"""The A2 sublattice <lambda1, lambda2> of the algebraic Mukai lattice of Ku(Y)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .character import Character, discriminant
from .presets import LAMBDA1, LAMBDA2

# Gram matrix on (lambda1, lambda2); the diagonal 2 plus the dimensions
# 4 (for l1 + l2) and 8 (for 2 l1 + l2) force the off-diagonal -1.
GRAM = ((2, -1), (-1, 2))


class NegativeDimension(ValueError):
    pass


@dataclass(frozen=True)
class MukaiVector:
    a: int
    b: int

    def __add__(self, other):
        return MukaiVector(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return MukaiVector(self.a - other.a, self.b - other.b)

    def __neg__(self):
        return MukaiVector(-self.a, -self.b)

    def __rmul__(self, k: int):
        return MukaiVector(k * self.a, k * self.b)

    @classmethod
    def parse(cls, text: str) -> "MukaiVector":
        a, b = text.split(",")
        return cls(int(a), int(b))

    def __str__(self):
        return f"{self.a}*lambda1 + {self.b}*lambda2"


def pairing(v: MukaiVector, w: MukaiVector) -> int:
    x, y = (v.a, v.b), (w.a, w.b)
    return sum(x[i] * GRAM[i][j] * y[j] for i in range(2) for j in range(2))


def euler(v: MukaiVector, w: MukaiVector) -> int:
    """chi(v, w) = -(v, w); sign convention only, nothing downstream depends on it."""
    return -pairing(v, w)


def moduli_dim(v: MukaiVector) -> int:
    sq = pairing(v, v)
    if sq < -2:
        raise NegativeDimension(f"v^2 = {sq} < -2 for {v}")
    return sq + 2


def to_character(v: MukaiVector) -> Character:
    return v.a * LAMBDA1 + v.b * LAMBDA2


def delta_on_lattice(v: MukaiVector) -> int:
    d = discriminant(to_character(v))
    assert d.denominator == 1
    return int(d)


def delta_closed_form(v: MukaiVector) -> int:
    return 9 * v.a ** 2 + 7 * (v.a - 2 * v.b) ** 2


def from_character(c: Character):
    """Inverse of :func:`to_character`, or None when ``c`` is not a lambda-class."""
    w = c.at(-1)
    a = w.c1 / 3
    b = (4 * a - w.rank) / 8
    if a.denominator != 1 or b.denominator != 1:
        return None
    v = MukaiVector(int(a), int(b))
    return v if to_character(v).same_class(c) else None


def on_lambda_plane(c: Character) -> bool:
    """c2 = -7/32 rank in frame -1."""
    w = c.at(-1)
    return w.c2 == Fraction(-7, 32) * w.rank
