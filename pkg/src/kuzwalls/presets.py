"""Named characters and the default integral lattice.

Values are written in frame beta = -1 (as they are quoted in the source
material) and normalised to frame 0 on construction.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .character import CharLattice, Character, b_char, shift

# twisted-cubic object E_C, image of 2*lambda1 + lambda2
E_C = Character.make(0, 6, 0, beta=-1)
# line object M_l, image of lambda1 + lambda2
M_L = Character.make(-4, 3, Fraction(7, 8), beta=-1)

# solved from the two anchors: 2 l1 + l2 = (0, 6, 0), l1 + l2 = (-4, 3, 7/8)
LAMBDA1 = E_C - M_L                # (4, 3, -7/8)
LAMBDA2 = 2 * M_L - E_C            # (-8, 0, 7/4)

# both lie on the plane c2 = -7/32 rank
LAMBDA_PLANE_SLOPE = Fraction(-7, 32)


def default_lattice() -> CharLattice:
    """Span of lambda1, lambda2, B1, B2, B3 in frame -1."""
    return CharLattice.spanned_by([LAMBDA1, LAMBDA2, b_char(1), b_char(2), b_char(3)], frame=-1)


PRESETS = {
    "lambda1": LAMBDA1,
    "lambda2": LAMBDA2,
    "E_C": E_C,
    "M_l": M_L,
}

_B_RE = re.compile(r"^B\((-?\d+)\)$")
_SHIFT_RE = re.compile(r"^(.*)\[(-?\d+)\]$")
_FRAME_RE = re.compile(r"^(.*)@beta=(\S+)$")


def parse_character(text: str, presets: dict | None = None) -> Character:
    """Parse ``rk,c1,c2[,c3][@beta=b]`` or a preset name such as ``B(-1)[1]``.

    Numeric input is read in the frame given by the suffix (default 0) and
    returned normalised to frame 0.
    """
    table = dict(PRESETS)
    if presets:
        table.update(presets)
    s = text.strip().replace(" ", "")
    n = 0
    m = _SHIFT_RE.match(s)
    if m:
        s, n = m.group(1), int(m.group(2))
    m = _B_RE.match(s)
    if m:
        return shift(b_char(int(m.group(1))), n)
    if s in table:
        return shift(table[s], n)
    beta = Fraction(0)
    m = _FRAME_RE.match(s)
    if m:
        s, beta = m.group(1), Fraction(m.group(2))
    parts = s.strip("()").split(",")
    if len(parts) not in (3, 4):
        raise ValueError(f"cannot parse character {text!r}")
    try:
        vals = [Fraction(p) for p in parts]
    except ValueError as exc:
        raise ValueError(f"cannot parse character {text!r}: {exc}") from None
    return shift(Character.make(*vals, beta=beta), n)


def format_values(v: Character, beta=None) -> str:
    w = v if beta is None else v.at(beta)
    vals = [w.rank, w.c1, w.c2] + ([w.c3] if w.c3 is not None else [])
    return "(" + ", ".join(str(x) for x in vals) + ")"
