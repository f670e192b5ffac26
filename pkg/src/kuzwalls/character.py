"""Truncated Chern characters on P^3 with exact rational entries.

A :class:`Character` stores ``(rank, c1, c2[, c3])`` where ``c_k`` is the
coefficient of ``h^k``.  Every character carries the twist ``frame`` it is
expressed in: values in frame ``beta`` are ``e^{-beta h} . ch``.  Presets are
normalised to frame 0; :meth:`Character.at` moves between frames.

Integral structure is checked on the coordinates ``(rank, c1, 8 c2)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

Number = Union[int, Fraction, str]

# coefficient of the line class in the B_0 modification (1 - 11/32 l)
MODIFICATION = Fraction(11, 32)


class NonIntegralCoordinates(ValueError):
    """Raised when (rank, c1, 8*c2) of a character is not an integer vector."""


def Q(x: Number) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; use Fraction or 'p/q'")
    return Fraction(x)


@dataclass(frozen=True)
class Character:
    rank: Fraction
    c1: Fraction
    c2: Fraction
    c3: Optional[Fraction] = None
    frame: Fraction = field(default=Fraction(0))

    def __post_init__(self):
        for name in ("rank", "c1", "c2", "frame"):
            object.__setattr__(self, name, Q(getattr(self, name)))
        if self.c3 is not None:
            object.__setattr__(self, "c3", Q(self.c3))

    @classmethod
    def make(cls, rank, c1, c2, c3=None, beta=0) -> "Character":
        """Build from values given in frame ``beta`` and normalise to frame 0."""
        return cls(rank, c1, c2, c3, frame=beta).at(0)

    @property
    def triple(self) -> tuple:
        return (self.rank, self.c1, self.c2)

    @property
    def has_c3(self) -> bool:
        return self.c3 is not None

    def at(self, beta: Number) -> "Character":
        """The same class expressed in frame ``beta``."""
        return twist(self, Q(beta) - self.frame)

    def truncate(self) -> "Character":
        return Character(self.rank, self.c1, self.c2, None, self.frame)

    def coords(self) -> tuple:
        """Integer coordinates (rank, c1, 8*c2) in the current frame."""
        vals = (self.rank, self.c1, 8 * self.c2)
        if any(v.denominator != 1 for v in vals):
            raise NonIntegralCoordinates(
                f"(rank, c1, 8c2) = {tuple(str(v) for v in vals)} is not integral")
        return tuple(int(v) for v in vals)

    def _aligned(self, other: "Character") -> "Character":
        if not isinstance(other, Character):
            return NotImplemented
        return other if other.frame == self.frame else other.at(self.frame)

    def __add__(self, other):
        other = self._aligned(other)
        if other is NotImplemented:
            return other
        c3 = None if (self.c3 is None or other.c3 is None) else self.c3 + other.c3
        return Character(self.rank + other.rank, self.c1 + other.c1,
                         self.c2 + other.c2, c3, self.frame)

    def __neg__(self):
        c3 = None if self.c3 is None else -self.c3
        return Character(-self.rank, -self.c1, -self.c2, c3, self.frame)

    def __sub__(self, other):
        other = self._aligned(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, k):
        k = Q(k)
        c3 = None if self.c3 is None else k * self.c3
        return Character(k * self.rank, k * self.c1, k * self.c2, c3, self.frame)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.rank == 0 and self.c1 == 0 and self.c2 == 0 and not self.c3

    def same_class(self, other: "Character") -> bool:
        """Equality of the underlying classes, ignoring the frame they are written in."""
        a, b = self.at(0), other.at(0)
        if a.triple != b.triple:
            return False
        return a.c3 is None or b.c3 is None or a.c3 == b.c3

    def __str__(self):
        vals = [self.rank, self.c1, self.c2] + ([self.c3] if self.c3 is not None else [])
        body = ", ".join(str(v) for v in vals)
        return f"({body})@beta={self.frame}"


def modify(ordinary: Character) -> Character:
    """Multiply an ordinary character by (1 - 11/32 l)."""
    if ordinary.frame != 0:
        raise ValueError("modify expects a frame-0 (untwisted) character")
    c3 = None if ordinary.c3 is None else ordinary.c3 - MODIFICATION * ordinary.c1
    return Character(ordinary.rank, ordinary.c1,
                     ordinary.c2 - MODIFICATION * ordinary.rank, c3, 0)


def unmodify(modified: Character) -> Character:
    """Inverse of :func:`modify` (multiplication by 1 + 11/32 l)."""
    modified = modified.at(0)
    c3 = None if modified.c3 is None else modified.c3 + MODIFICATION * modified.c1
    return Character(modified.rank, modified.c1,
                     modified.c2 + MODIFICATION * modified.rank, c3, 0)


def twist(v: Character, beta: Number) -> Character:
    """Multiply by e^{-beta h}; the frame tag moves by ``beta``."""
    b = Q(beta)
    if b == 0:
        return v
    r, c1, c2 = v.rank, v.c1, v.c2
    n1 = c1 - b * r
    n2 = c2 - b * c1 + b * b / 2 * r
    n3 = None
    if v.c3 is not None:
        n3 = v.c3 - b * c2 + b * b / 2 * c1 - b ** 3 / 6 * r
    return Character(r, n1, n2, n3, v.frame + b)


def half_twist(v: Character) -> Character:
    """Multiply by e^{h/2}, the character-level shadow of tensoring with B_1.

    The degree-3 term is carried along but has not been checked against
    any known B_1 twist, so callers should not rely on it.
    """
    r, c1, c2 = v.rank, v.c1, v.c2
    c3 = None
    if v.c3 is not None:
        c3 = v.c3 + c2 / 2 + c1 / 8 + r / 48
    return Character(r, c1 + r / 2, c2 + c1 / 2 + r / 8, c3, v.frame)


def shift(v: Character, n: int) -> Character:
    return v if n % 2 == 0 else -v


def discriminant(v: Character) -> Fraction:
    """c1^2 - 2 rank c2; independent of the frame."""
    return v.c1 * v.c1 - 2 * v.rank * v.c2


def b_char(i: int) -> Character:
    """Truncated character of B_i: (4, 2i-1, (2i-1)^2/8) in frame -1."""
    k = 2 * i - 1
    return Character.make(4, k, Fraction(k * k, 8), beta=-1)


def b_index(v: Character) -> Optional[tuple]:
    """Match ``v`` against n * B_i (n != 0); returns (i, n) or None."""
    w = v.at(-1)
    if w.rank == 0 or w.rank % 4 != 0:
        return None
    n = w.rank / 4
    if n.denominator != 1:
        return None
    k = w.c1 / n
    if k.denominator != 1 or k.numerator % 2 == 0:
        return None
    if w.c2 != n * k * k / 8:
        return None
    return (int(k + 1) // 2, int(n))


# --- integral lattices --------------------------------------------------------

def hermite_normal_form(rows: Iterable[Sequence[int]]) -> list:
    """Row-style HNF of the integer span of ``rows`` (zero rows dropped)."""
    m = [list(map(int, r)) for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    basis = []
    pivot_row = 0
    for col in range(ncols):
        # gcd-reduce column ``col`` among rows pivot_row..end
        while True:
            nz = [i for i in range(pivot_row, len(m)) if m[i][col] != 0]
            if not nz:
                break
            i_min = min(nz, key=lambda i: abs(m[i][col]))
            m[pivot_row], m[i_min] = m[i_min], m[pivot_row]
            p = m[pivot_row]
            done = True
            for i in range(pivot_row + 1, len(m)):
                if m[i][col]:
                    q = m[i][col] // p[col]
                    m[i] = [a - q * b for a, b in zip(m[i], p)]
                    if m[i][col]:
                        done = False
            if done:
                break
        if pivot_row < len(m) and m[pivot_row][col] != 0:
            if m[pivot_row][col] < 0:
                m[pivot_row] = [-a for a in m[pivot_row]]
            p = m[pivot_row]
            for i in range(pivot_row):
                q = m[i][col] // p[col]
                m[i] = [a - q * b for a, b in zip(m[i], p)]
            basis.append(pivot_row)
            pivot_row += 1
    return [m[i] for i in basis]


def in_row_span(vec: Sequence[int], hnf: Sequence[Sequence[int]]) -> bool:
    vec = list(vec)
    for row in hnf:
        col = next(j for j, a in enumerate(row) if a)
        if vec[col] % row[col]:
            return False
        q = vec[col] // row[col]
        vec = [a - q * b for a, b in zip(vec, row)]
    return not any(vec)


@dataclass(frozen=True)
class CharLattice:
    generators: tuple
    frame: Fraction
    basis: tuple

    @classmethod
    def spanned_by(cls, generators: Iterable[Character], frame: Number = -1) -> "CharLattice":
        frame = Q(frame)
        gens = tuple(g.at(frame).truncate() for g in generators)
        basis = hermite_normal_form(g.coords() for g in gens)
        return cls(gens, frame, tuple(tuple(r) for r in basis))

    def index(self) -> Optional[int]:
        """Index in Z^3 when the lattice has full rank."""
        if len(self.basis) < 3:
            return None
        out = 1
        for k, row in enumerate(self.basis):
            out *= row[k]
        return abs(out)

    def __contains__(self, v: Character) -> bool:
        return lattice_member(v, self)


def lattice_member(v: Character, lattice: CharLattice) -> bool:
    """Is ``v`` an integral combination of the lattice generators?

    Raises NonIntegralCoordinates when (rank, c1, 8*c2) is not integral in
    the lattice frame.
    """
    return in_row_span(v.at(lattice.frame).coords(), lattice.basis)


def ordinary_parity_ok(v: Character) -> bool:
    """Condition derived from integrality of the ordinary Chern character.

    Undo the twist and the (1 - 11/32 l) modification; the result
    (R, C, D/2) must have 4 | R, C and D integers, and C = D mod 2.
    """
    o = unmodify(v.at(0))
    if o.rank.denominator != 1 or o.rank % 4 != 0:
        return False
    if o.c1.denominator != 1:
        return False
    d = 2 * o.c2
    if d.denominator != 1:
        return False
    return (o.c1 - d) % 2 == 0


def printed_parity_ok(v: Character) -> bool:
    """The same test with the degree-2 coefficient -5/16 R as displayed in print.

    Kept only to document that it rejects B_1 and other generators.
    """
    w = v.at(-1)
    r, c = w.rank, w.c1 - w.rank
    if r.denominator != 1 or r % 4 != 0 or c.denominator != 1:
        return False
    d = 2 * (w.c2 - c + Fraction(5, 16) * r)
    if d.denominator != 1:
        return False
    return (c - d) % 2 == 0
