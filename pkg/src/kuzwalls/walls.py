"""Numerical walls for sigma_{alpha, beta} at fixed beta.

For a target ``t`` with twisted values (R, m, T) and a candidate sub-character
(r, b, x) at the same beta, equal slope is

    (alpha^2/2 r - x) m = (alpha^2/2 R - T) b,

i.e. ``x = alpha^2 d / 2 + b T / m`` with ``d = r - b R / m``.  Substituting
into the discriminants of the sub and the quotient (r', b') = (R - r, m - b)

    Delta(sub)  = b^2  - alpha^2 r d  - 2 r b T / m
    Delta(quot) = b'^2 + alpha^2 r' d - 2 r' b' T / m

and for d != 0 at least one of r d > 0, r' d < 0 holds, so alpha^2 is bounded
above on every cell (r, b).  Together with alpha^2 >= alpha_sq_min this
bounds x, and the bound on the r-range comes from the quadratic
``alpha_sq_min r d <= b^2 - 2 r b T / m``.  See docs/wall_bounds.md.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .character import (CharLattice, Character, Q, b_index, discriminant,
                        in_row_span, ordinary_parity_ok)
from .mukai import from_character
from .presets import default_lattice
from .stability import StabilityParams, compare_slopes

ALWAYS = "always"
DEFAULT_ALPHA_SQ_MIN = Fraction(1, 400)
DEFAULT_BOX_LIMIT = 2_000_000


class BoundOverflow(RuntimeError):
    """The derived search box is larger than the configured limit."""


@dataclass(frozen=True)
class Decomposition:
    sub: Character
    quotient: Character
    target: Character

    def values(self, beta) -> tuple:
        return (self.sub.at(beta).triple, self.quotient.at(beta).triple)


@dataclass(frozen=True)
class Wall:
    alpha_sq: Fraction
    beta: Fraction
    decompositions: tuple

    @property
    def params(self) -> StabilityParams:
        return StabilityParams(self.alpha_sq, self.beta)

    @property
    def alpha(self) -> float:
        return math.sqrt(self.alpha_sq)


@dataclass
class WallSearch:
    walls: list
    proportional: list = field(default_factory=list)
    box_size: int = 0


def wall_between(v: Character, w: Character, beta) -> Optional[object]:
    """alpha^2 where v and w have equal slope at ``beta``.

    Returns None without a positive root, and ``ALWAYS`` when the equation
    holds identically.
    """
    beta = Q(beta)
    a, b = v.at(beta), w.at(beta)
    coeff = (a.rank * b.c1 - b.rank * a.c1) / 2
    rhs = a.c2 * b.c1 - b.c2 * a.c1
    if coeff == 0:
        return ALWAYS if rhs == 0 else None
    root = rhs / coeff
    return root if root > 0 else None


# --- search ------------------------------------------------------------------

def _sqrt_upper(q: Fraction) -> Fraction:
    """A rational upper bound for sqrt(q), q >= 0."""
    n, d = q.numerator, q.denominator
    return Fraction(math.isqrt(n * d) + 1, d)


def _ceil(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def _floor(q: Fraction) -> int:
    return q.numerator // q.denominator


@dataclass(frozen=True)
class _Ctx:
    R: Fraction
    m: Fraction
    T: Fraction
    beta: Fraction
    delta: Fraction          # lattice frame - beta
    alpha_sq_min: Fraction
    basis: tuple
    lattice_frame: Fraction


def _rank_range(ctx: _Ctx, b: Fraction) -> tuple:
    """Multiples of 4 that can carry a wall with im(sub) = b."""
    R, m, T, amin = ctx.R, ctx.m, ctx.T, ctx.alpha_sq_min
    # amin r^2 + (2 b T/m - amin b R/m) r - b^2 <= 0
    A = amin
    B = 2 * b * T / m - amin * b * R / m
    C = -b * b
    s = _sqrt_upper(B * B - 4 * A * C)
    lo = min((-B - s) / (2 * A), b * R / m)
    hi = max((-B + s) / (2 * A), b * R / m)
    return 4 * _ceil(lo / 4), 4 * _floor(hi / 4)


def _b_values(ctx: _Ctx):
    """im(sub) in (0, m) whose lattice-frame c1 = b - delta r can be integral for some r."""
    step = 4 * ctx.delta
    period = step.denominator
    fracs = sorted({(step * j) % 1 for j in range(period)})
    for f in fracs:
        k = 0 if f > 0 else 1
        while k + f < ctx.m:
            yield k + f
            k += 1


def _cells(ctx: _Ctx):
    """Yield (r, b, e_lo, e_hi); x = e/8 + offset(r, b) spans the admissible band.

    ``e_lo`` is None for cells with d = 0 (sub proportional in direction).
    """
    R, m, T, amin = ctx.R, ctx.m, ctx.T, ctx.alpha_sq_min
    for b in _b_values(ctx):
        lo, hi = _rank_range(ctx, b)
        for r in range(lo, hi + 1, 4):
            if (b - ctx.delta * r).denominator != 1:
                continue
            d = r - b * R / m
            if d == 0:
                yield (r, b, None, None)
                continue
            rq, bq = R - r, m - b
            bounds = []
            if r * d > 0:
                bounds.append((b * b - 2 * r * b * T / m) / (r * d))
            if rq * d < 0:
                bounds.append((bq * bq - 2 * rq * bq * T / m) / (-rq * d))
            hi_a = min(bounds)
            if hi_a < amin:
                continue
            x1 = amin * d / 2 + b * T / m
            x2 = hi_a * d / 2 + b * T / m
            xlo, xhi = min(x1, x2), max(x1, x2)
            off = ctx.delta * b - ctx.delta ** 2 * r / 2
            e_lo = _ceil(8 * (xlo - off))
            e_hi = _floor(8 * (xhi - off))
            if e_lo <= e_hi:
                yield (r, b, e_lo, e_hi)


def _check(ctx: _Ctx, r: int, b: Fraction, x: Fraction):
    """Full conditions on one candidate; returns alpha^2 or None."""
    R, m, T = ctx.R, ctx.m, ctx.T
    d = r - b * R / m
    a2 = 2 * (x - b * T / m) / d
    if a2 <= 0 or a2 < ctx.alpha_sq_min:
        return None
    sub = Character(r, b, x, None, ctx.beta)
    quot = Character(R - r, m - b, T - x, None, ctx.beta)
    if discriminant(sub) < 0 or discriminant(quot) < 0:
        return None
    for part in (sub, quot):
        try:
            if not in_row_span(part.at(ctx.lattice_frame).coords(), ctx.basis):
                return None
        except ValueError:
            return None
        if not ordinary_parity_ok(part):
            return None
    return a2


def _scan(ctx: _Ctx, cells):
    found, prop = [], []
    for r, b, e_lo, e_hi in cells:
        if e_lo is None:
            prop.append((r, b))
            continue
        off = ctx.delta * b - ctx.delta ** 2 * r / 2
        for e in range(e_lo, e_hi + 1):
            x = Fraction(e, 8) + off
            a2 = _check(ctx, r, b, x)
            if a2 is not None:
                found.append((a2, r, b, x))
    return found, prop


def _scan_star(args):
    return _scan(*args)


def _workers_default() -> int:
    return int(os.environ.get("KUZWALLS_WORKERS", "1"))


def search_walls(target: Character, beta=-1, alpha_sq_min=DEFAULT_ALPHA_SQ_MIN,
                 lattice: Optional[CharLattice] = None,
                 box_limit: int = DEFAULT_BOX_LIMIT,
                 workers: Optional[int] = None) -> WallSearch:
    beta, alpha_sq_min = Q(beta), Q(alpha_sq_min)
    if alpha_sq_min <= 0:
        raise ValueError("alpha_sq_min must be positive")
    lattice = lattice or default_lattice()
    t = target.at(beta).truncate()
    if t.c1 < 0:
        raise ValueError(f"target {t} has negative imaginary part at beta={beta}")
    if t.c1 == 0:
        return WallSearch([])
    ctx = _Ctx(t.rank, t.c1, t.c2, beta, lattice.frame - beta, alpha_sq_min,
               lattice.basis, lattice.frame)
    cells = list(_cells(ctx))
    size = sum(1 if c[2] is None else c[3] - c[2] + 1 for c in cells)
    if size > box_limit:
        raise BoundOverflow(f"search box has {size} points (limit {box_limit}); "
                            "raise alpha_sq_min")
    workers = workers or _workers_default()
    if workers <= 1 or len(cells) < 2:
        found, prop = _scan(ctx, cells)
    else:
        chunks = [cells[k::workers] for k in range(workers)]
        found, prop = [], []
        with ProcessPoolExecutor(max_workers=workers) as ex:
            for f, p in ex.map(_scan_star, [(ctx, c) for c in chunks]):
                found.extend(f)
                prop.extend(p)
    walls = _assemble(t, beta, found)
    proportional, seen = [], set()
    for r, b in sorted(set(prop)):
        x = b * t.c2 / t.c1
        sub = Character(r, b, x, None, beta)
        if (sub - t).is_zero():
            continue
        try:
            ok = in_row_span(sub.at(lattice.frame).coords(), lattice.basis)
        except ValueError:
            ok = False
        pair = frozenset((sub.triple, (t - sub).triple))
        if ok and pair not in seen and discriminant(sub) >= 0 and discriminant(t - sub) >= 0:
            seen.add(pair)
            proportional.append(Decomposition(sub.at(0), (t - sub).at(0), t.at(0)))
    return WallSearch(walls, proportional, size)


def _orient(t: Character, s: Character, a2: Fraction, beta: Fraction) -> Decomposition:
    """Put the part whose slope exceeds the target's just below the wall first."""
    q = t - s
    below = StabilityParams(a2 / 2, beta)
    if compare_slopes(s, t, below) < 0:
        s, q = q, s
    return Decomposition(s.at(0), q.at(0), t.at(0))


def _assemble(t: Character, beta: Fraction, found) -> list:
    by_wall = {}
    for a2, r, b, x in found:
        s = Character(r, b, x, None, beta)
        dec = _orient(t, s, a2, beta)
        key = dec.sub.at(beta).triple
        by_wall.setdefault(a2, {})[key] = dec
    walls = []
    for a2 in sorted(by_wall, reverse=True):
        decs = tuple(by_wall[a2][k] for k in sorted(by_wall[a2]))
        walls.append(Wall(a2, beta, decs))
    return walls


def enumerate_walls(target: Character, beta=-1, alpha_sq_min=DEFAULT_ALPHA_SQ_MIN,
                    lattice: Optional[CharLattice] = None, **kw) -> list:
    """All numerical walls with alpha^2 >= alpha_sq_min, largest first."""
    return search_walls(target, beta, alpha_sq_min, lattice, **kw).walls


# --- Jordan-Hoelder annotation ---------------------------------------------------

def describe(v: Character) -> Optional[str]:
    """Name ``v`` as n*B_i, its shift, or a lambda-class when possible."""
    for sign, suffix in ((1, ""), (-1, "[1]")):
        m = b_index(sign * v)
        if m is not None and m[1] > 0:
            i, n = m
            power = "" if n == 1 else f"^{n}"
            return f"B({i}){power}{suffix}"
    mv = from_character(v)
    if mv is not None and (mv.a, mv.b) != (0, 0):
        return f"lambda({mv.a},{mv.b})"
    return None


def jh_characters(wall: Wall) -> list:
    """(sub, quotient, annotations) for every decomposition on the wall."""
    out = []
    for dec in wall.decompositions:
        notes = {}
        for role in ("sub", "quotient"):
            name = describe(getattr(dec, role))
            if name:
                notes[role] = name
        out.append((dec.sub, dec.quotient, notes))
    return out
