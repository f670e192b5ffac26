"""Tri-state Hom-vanishing propagation.

A scenario declares objects (atoms), the hearts they sit in, where they are
semistable, triangles between them and a few seed facts.  Every deduction
rule is compiled to a clause over facts ``Hom(A, B[j]) != 0``:

    R0  identity       Hom(X, X) != 0 for X != 0
    R1  slope          mu_p(X[a]) > mu_p(Y[b]), both semistable at p  =>  Hom(X[a], Y[b]) = 0
    R2  heart          X[a], Y[b] in a common heart  =>  Hom(X[a], Y[b][n]) = 0 for n < 0
    R3  Serre          Hom(B_s, X[j]) = Hom(X, B_{s-3}[3-j])^*
    R4  semiorthogonal X in Ku  =>  Hom(B_s, X[j]) = 0 for s = 1, 2, 3
    R5  Euler          chi(A, X) = sum (-1)^j hom(A, X[j]), with additivity on triangles
    R6  exactness      long exact Hom sequences of declared triangles
    R7  filtration     X an iterated extension of copies of G
    R8  Ku lattice     a class in Ku has a character a*lambda1 + b*lambda2

Clauses are read as "head nonzero => one of alts nonzero" and propagated to
a fixpoint; chi values are integer intervals.  The shift window bounds the
facts that exist; for R5 every Hom outside the window is taken to vanish.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

import yaml

from .character import Character, b_char, shift as shift_char
from .mukai import from_character
from .presets import parse_character
from .stability import StabilityParams, compare_slopes, slope

DEFAULT_WINDOW = (-2, 5)
KU_BIMODULES = (1, 2, 3)


class State(enum.Enum):
    ZERO = "zero"
    NONZERO = "nonzero"
    UNKNOWN = "unknown"


class ScenarioError(ValueError):
    pass


class UnknownObject(KeyError):
    pass


class ContradictionDetected(Exception):
    def __init__(self, what, first, second, table=None):
        self.what = what
        self.first = first
        self.second = second
        self.table = table
        super().__init__(f"contradiction on {what}: [{first}] vs [{second}]")


@dataclass(frozen=True)
class HomKey:
    source: str
    target: str
    shift: int

    def __str__(self):
        return f"Hom({self.source}, {self.target}[{self.shift}])"


@dataclass
class HomFact:
    key: HomKey
    state: State
    rule: str
    premises: tuple = ()

    @property
    def source(self):
        return self.key.source

    @property
    def target(self):
        return self.key.target

    @property
    def shift(self):
        return self.key.shift


@dataclass(frozen=True)
class Clause:
    """``head`` nonzero implies some ``alts`` nonzero.

    With ``head=None`` the clause just asks for one alt to be nonzero; with
    no alts it forces ``head`` to zero.
    """
    head: Optional[HomKey]
    alts: tuple
    rule: str


@dataclass
class ObjectDecl:
    name: str
    char: Optional[Character] = None
    in_ku: bool = False
    heart: list = field(default_factory=list)
    shift: int = 0
    semistable: list = field(default_factory=list)
    bimodule: Optional[int] = None
    nonzero: bool = False

    def is_nonzero(self) -> bool:
        return self.nonzero or (self.char is not None and not self.char.is_zero())

    def placed_char(self) -> Optional[Character]:
        return None if self.char is None else shift_char(self.char, self.shift)


@dataclass
class Triangle:
    sub: tuple          # (name, shift)
    obj: tuple
    quot: tuple
    heart: Optional[Fraction] = None


@dataclass
class Scenario:
    name: str = "scenario"
    cites: str = ""
    expect: str = "consistent"
    window: tuple = DEFAULT_WINDOW
    points: dict = field(default_factory=dict)
    objects: dict = field(default_factory=dict)
    slope_orders: list = field(default_factory=list)   # (point, [(ref, rel), ...])
    triangles: list = field(default_factory=list)
    filtrations: dict = field(default_factory=dict)
    seeds: list = field(default_factory=list)          # (HomKey, State, note)
    chi_bounds: list = field(default_factory=list)     # ((A, X), lo, hi, note)
    same_class: list = field(default_factory=list)
    expect_facts: list = field(default_factory=list)
    expect_ku: list = field(default_factory=list)
    expect_chi: list = field(default_factory=list)     # ((A, X), lo, hi)

    # --- loading -------------------------------------------------------------

    @classmethod
    def load(cls, path) -> "Scenario":
        data = yaml.safe_load(Path(path).read_text())
        return cls.from_dict(data or {})

    @classmethod
    def from_dict(cls, data: dict) -> "Scenario":
        sc = cls(name=data.get("name", "scenario"), cites=data.get("cites", ""),
                 expect=data.get("expect", "consistent"))
        if "window" in data:
            lo, hi = data["window"]
            sc.window = (int(lo), int(hi))
        for name, p in (data.get("points") or {}).items():
            sc.points[name] = StabilityParams(Fraction(str(p["alpha_sq"])), Fraction(str(p["beta"])))
        for i in data.get("bimodules") or []:
            sc.add_bimodule(int(i))
        for name, decl in (data.get("objects") or {}).items():
            decl = decl or {}
            char = decl.get("char")
            sc.objects[name] = ObjectDecl(
                name=name,
                char=parse_character(str(char)) if char is not None else None,
                in_ku=bool(decl.get("in_ku", False)),
                heart=[Fraction(str(b)) for b in decl.get("heart", [])],
                shift=int(decl.get("shift", 0)),
                semistable=list(decl.get("semistable", [])),
                nonzero=bool(decl.get("nonzero", False)),
            )
        for t in data.get("triangles") or []:
            heart = t.get("heart")
            sc.triangles.append(Triangle(parse_ref(t["sub"]), parse_ref(t["object"]),
                                         parse_ref(t["quotient"]),
                                         None if heart is None else Fraction(str(heart))))
        for name, factors in (data.get("filtrations") or {}).items():
            sc.filtrations[name] = list(factors)
        for s in data.get("slopes") or []:
            sc.slope_orders.append((s["at"], parse_chain(s["order"])))
        lo, hi = sc.window
        for f in data.get("facts") or []:
            src, tgt = f["hom"][:2]
            shifts = f.get("shifts", [f["hom"][2]] if len(f["hom"]) > 2 else "all")
            if shifts == "all":
                shifts = range(lo, hi + 1)
            excl = set(f.get("except", []))
            state = State(f["state"])
            for j in shifts:
                if j not in excl:
                    sc.seeds.append((HomKey(src, tgt, int(j)), state, f.get("note", "premise")))
        for c in data.get("chi") or []:
            lo_b, hi_b = _bounds(c)
            sc.chi_bounds.append((tuple(c["pair"]), lo_b, hi_b, c.get("note", "premise")))
        for c in data.get("expect_chi") or []:
            lo_b, hi_b = _bounds(c)
            sc.expect_chi.append((tuple(c["pair"]), lo_b, hi_b))
        sc.same_class = [tuple(p) for p in data.get("same_class") or []]
        for f in data.get("expect_facts") or []:
            src, tgt, j = f["hom"]
            sc.expect_facts.append((HomKey(src, tgt, int(j)), State(f["state"])))
        sc.expect_ku = list(data.get("expect_ku") or [])
        return sc

    def add_bimodule(self, i: int):
        name = bname(i)
        if name not in self.objects:
            self.objects[name] = ObjectDecl(name=name, char=b_char(i), bimodule=i, nonzero=True)
        return name


def _bounds(c: dict) -> tuple:
    lo, hi = None, None
    if "eq" in c:
        lo = hi = int(c["eq"])
    if "le" in c:
        hi = int(c["le"])
    if "ge" in c:
        lo = int(c["ge"])
    if "lt" in c:
        hi = int(c["lt"]) - 1
    if "gt" in c:
        lo = int(c["gt"]) + 1
    return lo, hi


def bname(i: int) -> str:
    return f"B({i})"


_REF = re.compile(r"^(.*?)(?:\[(-?\d+)\])?$")


def parse_ref(text) -> tuple:
    m = _REF.match(str(text).strip())
    return (m.group(1), int(m.group(2) or 0))


def parse_chain(tokens) -> list:
    """["A", "<", "B", "=", "C"] -> [(("A",0), None), (("B",0), "<"), (("C",0), "=")]"""
    out = [(parse_ref(tokens[0]), None)]
    for k in range(1, len(tokens), 2):
        rel = tokens[k]
        if rel not in ("<", "="):
            raise ScenarioError(f"bad relation {rel!r} in slope chain")
        out.append((parse_ref(tokens[k + 1]), rel))
    return out


def ref_str(ref) -> str:
    name, n = ref
    return name if n == 0 else f"{name}[{n}]"


# --- compilation -----------------------------------------------------------------

class Compiled:
    """Clauses, unit facts and chi constraints generated from a scenario."""

    def __init__(self, sc: Scenario):
        self.sc = sc
        if any(o.in_ku for o in sc.objects.values()):
            for s in KU_BIMODULES:
                sc.add_bimodule(s)
        self.atoms = list(sc.objects)
        self.lo, self.hi = sc.window
        self.clauses: list = []
        self.chi_vars: set = set()
        self.chi_eqs: list = []        # ([(coef, var)], note)
        self.chi_bounds: list = []
        self._placements()
        self._check_decls()
        self._units()
        self._serre()
        self._triangles()
        self._filtrations()
        self._chi()

    def in_window(self, j) -> bool:
        return self.lo <= j <= self.hi

    def key(self, a, b, j) -> Optional[HomKey]:
        return HomKey(a, b, j) if self.in_window(j) else None

    # placements: name -> {beta: shift}; semistable: name -> set(points)
    def _placements(self):
        sc = self.sc
        betas = {p.beta for p in sc.points.values()}
        for o in sc.objects.values():
            betas.update(o.heart)
        self.heart = {}
        self.semistable = {}
        for o in sc.objects.values():
            if o.bimodule is not None:
                # B_i is a slope-stable bundle of slope i/2 - 5/4
                mu = Fraction(o.bimodule, 2) - Fraction(5, 4)
                self.heart[o.name] = {b: (0 if mu > b else 1) for b in betas}
                self.semistable[o.name] = set(sc.points)
            else:
                self.heart[o.name] = {b: o.shift for b in o.heart}
                self.semistable[o.name] = set(o.semistable)

    def _check_decls(self):
        sc = self.sc
        for o in sc.objects.values():
            for p in self.semistable[o.name]:
                if p not in sc.points:
                    raise ScenarioError(f"{o.name}: unknown point {p!r}")
        names = set(sc.objects)
        for t in sc.triangles:
            for ref in (t.sub, t.obj, t.quot):
                if ref[0] not in names:
                    raise ScenarioError(f"triangle mentions undeclared {ref[0]!r}")
        for key, _, _ in sc.seeds:
            for n in (key.source, key.target):
                if n not in names:
                    raise ScenarioError(f"fact mentions undeclared {n!r}")
        for (a, x), *_ in sc.chi_bounds:
            if a not in names or x not in names:
                raise ScenarioError(f"chi premise mentions undeclared object in {(a, x)}")

    def add(self, head, alts, rule):
        if head is None and not alts:
            return
        self.clauses.append(Clause(head, tuple(alts), rule))

    def _units(self):
        sc = self.sc
        for key, state, note in sc.seeds:
            if not self.in_window(key.shift):
                continue
            if state is State.ZERO:
                self.add(key, (), f"seed: {note}")
            elif state is State.NONZERO:
                self.add(None, (key,), f"seed: {note}")
        # R0
        for o in sc.objects.values():
            if o.is_nonzero() and self.in_window(0):
                self.add(None, (HomKey(o.name, o.name, 0),), "R0 identity")
        # R1 / R2
        self._slope_rules()
        placed = [(n, b, s) for n, hb in self.heart.items() for b, s in hb.items()]
        for x, bx, a in placed:
            for y, by, b in placed:
                if bx != by:
                    continue
                for j in range(self.lo, b - a):
                    self.add(HomKey(x, y, j), (),
                             f"R2 heart: {ref_str((x, a))}, {ref_str((y, b))} in Coh^{bx}, shift {j - b + a} < 0")
        # R4
        for o in sc.objects.values():
            if o.in_ku:
                for s in KU_BIMODULES:
                    for j in range(self.lo, self.hi + 1):
                        self.add(HomKey(bname(s), o.name, j), (),
                                 f"R4 semiorthogonal: {o.name} in Ku")
        # R6 quotient / sub maps of short exact sequences are nonzero
        for t in sc.triangles:
            if t.heart is None:
                continue
            for ref in (t.sub, t.obj, t.quot):
                if self.heart.get(ref[0], {}).get(t.heart) != ref[1]:
                    raise ScenarioError(f"{ref_str(ref)} is not declared in Coh^{t.heart}")
            q, x, y = t.quot, t.obj, t.sub
            if sc.objects[q[0]].is_nonzero():
                k = self.key(x[0], q[0], q[1] - x[1])
                if k:
                    self.add(None, (k,), f"R6 exactness: {ref_str(x)} ->> {ref_str(q)} nonzero")
            if sc.objects[y[0]].is_nonzero():
                k = self.key(y[0], x[0], x[1] - y[1])
                if k:
                    self.add(None, (k,), f"R6 exactness: {ref_str(y)} >-> {ref_str(x)} nonzero")

    def slope_relations(self):
        """(point, (x, a), (y, b), sign) with sign = sign(mu(x[a]) - mu(y[b]))."""
        sc = self.sc
        rels = {}
        for pname, p in sc.points.items():
            here = [n for n in sc.objects
                    if pname in self.semistable[n] and p.beta in self.heart[n]]
            for x in here:
                for y in here:
                    if x == y:
                        continue
                    cx = sc.objects[x].char
                    cy = sc.objects[y].char
                    if cx is None or cy is None:
                        continue
                    a, b = self.heart[x][p.beta], self.heart[y][p.beta]
                    sgn = compare_slopes(shift_char(cx, a), shift_char(cy, b), p)
                    rels[(pname, (x, a), (y, b))] = (sgn, "computed")
        for pname, chain in sc.slope_orders:
            if pname not in sc.points:
                raise ScenarioError(f"slope chain at unknown point {pname!r}")
            for i in range(len(chain)):
                for j in range(i + 1, len(chain)):
                    rel = [r for _, r in chain[i + 1:j + 1]]
                    sgn = -1 if "<" in rel else 0
                    x, y = chain[i][0], chain[j][0]
                    for k, s in (((pname, x, y), sgn), ((pname, y, x), -sgn)):
                        old = rels.get(k)
                        if old is not None and old[0] != s:
                            raise ScenarioError(f"asserted slope order {k} contradicts computed slopes")
                        if old is None:
                            rels[k] = (s, "asserted")
        return rels

    def _slope_rules(self):
        sc = self.sc
        for (pname, (x, a), (y, b)), (sgn, how) in self.slope_relations().items():
            if sgn <= 0:
                continue
            p = sc.points[pname]
            if pname not in self.semistable[x] or pname not in self.semistable[y]:
                continue
            if self.heart[x].get(p.beta) != a or self.heart[y].get(p.beta) != b:
                continue
            k = self.key(x, y, b - a)
            if k is None:
                continue
            note = f"R1 slope ({how}) at {pname}: mu({ref_str((x, a))}) > mu({ref_str((y, b))})"
            if how == "computed":
                mx = slope(shift_char(sc.objects[x].char, a), p)
                my = slope(shift_char(sc.objects[y].char, b), p)
                note += f" [{mx} > {my}]"
            self.add(k, (), note)

    def _serre(self):
        bims = {o.bimodule: o.name for o in self.sc.objects.values() if o.bimodule is not None}
        for s, bs in bims.items():
            partner = bims.get(s - 3)
            if partner is None:
                continue
            for x in self.atoms:
                for j in range(self.lo, self.hi + 1):
                    k1 = HomKey(bs, x, j)
                    k2 = self.key(x, partner, 3 - j)
                    if k2 is None:
                        continue
                    rule = f"R3 Serre: {k1} = {k2}^*"
                    self.add(k1, (k2,), rule)
                    self.add(k2, (k1,), rule)

    def _exact(self, seq, rule):
        for l, m, n in zip(seq, seq[1:], seq[2:]):
            # a neighbour outside the window is unknown, so nothing follows
            if None not in (l, m, n):
                self.add(m, (l, n), rule)

    def _triangles(self):
        span = range(self.lo - 8, self.hi + 9)
        for t in self.sc.triangles:
            (y, ys), (x, xs), (z, zs) = t.sub, t.obj, t.quot
            label = f"R6 exactness: {ref_str(t.sub)} -> {ref_str(t.obj)} -> {ref_str(t.quot)}"
            for w in self.atoms:
                contra, co = [], []
                for n in span:
                    contra += [self.key(z, w, n - zs), self.key(x, w, n - xs), self.key(y, w, n - ys)]
                    co += [self.key(w, y, ys + n), self.key(w, x, xs + n), self.key(w, z, zs + n)]
                self._exact(contra, label)
                self._exact(co, label)

    def _filtrations(self):
        for f, factors in self.sc.filtrations.items():
            rule = f"R7 filtration: {f} is an extension of {', '.join(factors)}"
            for w in self.atoms:
                for j in range(self.lo, self.hi + 1):
                    self.add(HomKey(f, w, j), tuple(HomKey(g, w, j) for g in factors), rule)
                    self.add(HomKey(w, f, j), tuple(HomKey(w, g, j) for g in factors), rule)

    def _chi(self):
        sc = self.sc
        sources = [o.name for o in sc.objects.values() if o.bimodule is not None]
        for (a, x), lo, hi, note in sc.chi_bounds:
            self.chi_vars.add((a, x))
            self.chi_bounds.append(((a, x), lo, hi, f"premise: {note}"))
        for t in sc.triangles:
            (y, ys), (x, xs), (z, zs) = t.sub, t.obj, t.quot
            for a in sources:
                terms = [((-1) ** xs, (a, x)), (-((-1) ** ys), (a, y)), (-((-1) ** zs), (a, z))]
                self.chi_eqs.append((terms, f"R5 additivity on {ref_str(t.sub)} -> {ref_str(t.obj)} -> {ref_str(t.quot)}"))
                self.chi_vars.update(v for _, v in terms)
        for x, y in sc.same_class:
            for a in sources:
                self.chi_eqs.append(([(1, (a, x)), (-1, (a, y))], f"R5 [{x}] = [{y}]"))
                self.chi_vars.update({(a, x), (a, y)})
        for o in sc.objects.values():
            if o.bimodule is None:
                self.chi_vars.update((a, o.name) for a in sources)

    def window_keys(self, pair):
        a, x = pair
        return [HomKey(a, x, j) for j in range(self.lo, self.hi + 1)]


# --- propagation -------------------------------------------------------------------

@dataclass
class FactTable:
    scenario: Scenario
    facts: dict = field(default_factory=dict)
    chi: dict = field(default_factory=dict)          # var -> (lo, hi, note)
    contradiction: Optional[ContradictionDetected] = None

    def state(self, key: HomKey) -> State:
        f = self.facts.get(key)
        return f.state if f else State.UNKNOWN

    def known(self) -> list:
        return sorted(self.facts.values(), key=lambda f: (f.key.source, f.key.target, f.key.shift))

    def derived_in_ku(self, window) -> list:
        lo, hi = window
        out = []
        for name, o in self.scenario.objects.items():
            if o.bimodule is not None:
                continue
            if all(self.state(HomKey(bname(s), name, j)) is State.ZERO
                   for s in KU_BIMODULES for j in range(lo, hi + 1)):
                out.append(name)
        return out


class _Engine:
    def __init__(self, sc: Scenario):
        self.sc = sc
        self.comp = Compiled(sc)
        self.table = FactTable(sc)
        self.changed = False

    def set(self, key: HomKey, state: State, rule: str, premises=()):
        old = self.table.facts.get(key)
        if old is not None:
            if old.state is state:
                return
            new = HomFact(key, state, rule, tuple(premises))
            raise ContradictionDetected(str(key), describe_fact(old), describe_fact(new), self.table)
        self.table.facts[key] = HomFact(key, state, rule, tuple(premises))
        self.changed = True

    def set_chi(self, var, lo, hi, note):
        olo, ohi, onote = self.table.chi.get(var, (None, None, None))
        nlo = lo if olo is None else (olo if lo is None else max(lo, olo))
        nhi = hi if ohi is None else (ohi if hi is None else min(hi, ohi))
        if (nlo, nhi) == (olo, ohi):
            return
        if nlo is not None and nhi is not None and nlo > nhi:
            raise ContradictionDetected(
                f"chi{var}", f"{onote}: chi in {interval(olo, ohi)}",
                f"{note}: chi in {interval(lo, hi)}", self.table)
        self.table.chi[var] = (nlo, nhi, note)
        self.changed = True

    def unit_pass(self):
        st = self.table.state
        for c in self.comp.clauses:
            head_nz = c.head is None or st(c.head) is State.NONZERO
            head_z = c.head is not None and st(c.head) is State.ZERO
            if head_z:
                continue
            alt_states = [st(k) for k in c.alts]
            if any(s is State.NONZERO for s in alt_states):
                continue
            open_alts = [k for k, s in zip(c.alts, alt_states) if s is State.UNKNOWN]
            zero_alts = [k for k, s in zip(c.alts, alt_states) if s is State.ZERO]
            if head_nz and not open_alts:
                # every way out is closed
                if c.head is None:
                    raise ContradictionDetected(c.rule, "clause needs a nonzero alternative",
                                                ", ".join(f"{k} = 0" for k in zero_alts), self.table)
                self.set(c.head, State.ZERO, c.rule, zero_alts)  # raises
            if head_nz and len(open_alts) == 1:
                prem = ([c.head] if c.head is not None else []) + zero_alts
                self.set(open_alts[0], State.NONZERO, c.rule, prem)
            elif not open_alts and c.head is not None:
                self.set(c.head, State.ZERO, c.rule, zero_alts)

    def chi_pass(self):
        comp = self.comp
        st = self.table.state
        for var, lo, hi, note in comp.chi_bounds:
            self.set_chi(var, lo, hi, note)
        for var in sorted(comp.chi_vars):
            keys = comp.window_keys(var)
            open_ = [k for k in keys if st(k) is not State.ZERO]
            nz = [k for k in keys if st(k) is State.NONZERO]
            parities = {k.shift % 2 for k in open_}
            if not open_:
                self.set_chi(var, 0, 0, f"R5 all Hom({var[0]}, {var[1]}[j]) vanish")
            elif parities == {1}:
                self.set_chi(var, None, -len(nz), f"R5 only odd shifts can be nonzero for {var}")
            elif parities == {0}:
                self.set_chi(var, len(nz), None, f"R5 only even shifts can be nonzero for {var}")
            lo, hi, _ = self.table.chi.get(var, (None, None, None))
            if parities == {1} and lo is not None and lo >= 0:
                for k in open_:
                    self.set(k, State.ZERO, f"R5 Euler: chi{var} = 0, only odd shifts open",
                             [k2 for k2 in keys if k2 not in open_])
            if parities == {0} and hi is not None and hi <= 0:
                for k in open_:
                    self.set(k, State.ZERO, f"R5 Euler: chi{var} = 0, only even shifts open",
                             [k2 for k2 in keys if k2 not in open_])
            if len(open_) == 1 and ((lo is not None and lo > 0) or (hi is not None and hi < 0)):
                self.set(open_[0], State.NONZERO, f"R5 Euler: chi{var} != 0",
                         [k2 for k2 in keys if k2 not in open_])
        for terms, note in comp.chi_eqs:
            for i, (ci, vi) in enumerate(terms):
                # ci*vi = -sum_{j != i} cj*vj
                lo, hi = 0, 0
                for j, (cj, vj) in enumerate(terms):
                    if j == i:
                        continue
                    vlo, vhi, _ = self.table.chi.get(vj, (None, None, None))
                    a, b = (vlo, vhi) if -cj > 0 else (neg(vhi), neg(vlo))
                    lo = None if lo is None or a is None else lo + a
                    hi = None if hi is None or b is None else hi + b
                if ci < 0:
                    lo, hi = neg(hi), neg(lo)
                if lo is not None or hi is not None:
                    self.set_chi(vi, lo, hi, note)

    def ku_lattice_pass(self):
        for name in self.table.derived_in_ku(self.sc.window):
            o = self.sc.objects[name]
            if o.char is None:
                continue
            if from_character(o.char) is None:
                raise ContradictionDetected(
                    f"character of {name}",
                    f"{name} derived in Ku (all Hom(B_s, {name}[j]) = 0)",
                    f"R8 Ku lattice: {o.char.at(-1)} is not a*lambda1 + b*lambda2", self.table)

    def run(self) -> FactTable:
        while True:
            self.changed = False
            self.unit_pass()
            self.chi_pass()
            self.ku_lattice_pass()
            if not self.changed:
                return self.table


def neg(x):
    return None if x is None else -x


def interval(lo, hi) -> str:
    return f"[{'-inf' if lo is None else lo}, {'inf' if hi is None else hi}]"


def describe_fact(f: HomFact) -> str:
    return f"{f.key} = {f.state.value} by {f.rule}"


def propagate(sc: Scenario) -> FactTable:
    """Run all rules to a fixpoint; raises ContradictionDetected (table attached)."""
    return _Engine(sc).run()


def run_scenario(sc: Scenario) -> FactTable:
    """Like :func:`propagate` but records a contradiction on the table instead of raising."""
    eng = _Engine(sc)
    try:
        return eng.run()
    except ContradictionDetected as exc:
        eng.table.contradiction = exc
        return eng.table


def query(table: FactTable, source: str, target: str, shift: int):
    """State of Hom(source, target[shift]) and its derivation lines."""
    objs = table.scenario.objects
    for n in (source, target):
        if n not in objs:
            raise UnknownObject(n)
    key = HomKey(source, target, shift)
    return table.state(key), trace(table, key)


def trace(table: FactTable, key: HomKey, depth: int = 0, seen=None) -> list:
    seen = set() if seen is None else seen
    f = table.facts.get(key)
    if f is None:
        return []
    lines = ["  " * depth + describe_fact(f)]
    if key in seen:
        return lines
    seen.add(key)
    for p in f.premises:
        lines += trace(table, p, depth + 1, seen)
    return lines


def outcome(table: FactTable) -> str:
    return "contradiction" if table.contradiction else "consistent"


def check_expectations(table: FactTable) -> list:
    """Human-readable list of unmet expectations (empty when the scenario replays)."""
    sc = table.scenario
    problems = []
    if outcome(table) != sc.expect:
        problems.append(f"expected {sc.expect}, got {outcome(table)}")
    for key, state in sc.expect_facts:
        got = table.state(key)
        if got is not state:
            problems.append(f"{key}: expected {state.value}, got {got.value}")
    for var, lo, hi in sc.expect_chi:
        glo, ghi, _ = table.chi.get(var, (None, None, None))
        if (lo is not None and (glo is None or glo < lo)) or (hi is not None and (ghi is None or ghi > hi)):
            problems.append(f"chi{var} in {interval(glo, ghi)}, expected within {interval(lo, hi)}")
    ku = set(table.derived_in_ku(sc.window))
    for name in sc.expect_ku:
        if name not in ku:
            problems.append(f"{name} not derived in Ku")
    return problems


def report(table: FactTable) -> str:
    sc = table.scenario
    lines = [f"scenario: {sc.name}" + (f"  ({sc.cites})" if sc.cites else "")]
    for f in table.known():
        lines.append(f"  {f.key} = {f.state.value:8s} {f.rule}")
    for var in sorted(table.chi):
        lo, hi, note = table.chi[var]
        lines.append(f"  chi{var} in {interval(lo, hi)}  {note}")
    ku = table.derived_in_ku(sc.window)
    lines.append(f"derived in Ku: {', '.join(ku) if ku else '-'}")
    if table.contradiction:
        c = table.contradiction
        lines.append(f"CONTRADICTION on {c.what}")
        lines.append(f"  {c.first}")
        lines.append(f"  {c.second}")
    lines.append(f"outcome: {outcome(table)} (expected {sc.expect})")
    return "\n".join(lines)


def bundled_scenarios() -> list:
    here = Path(__file__).parent / "scenarios"
    return sorted(here.glob("*.yaml"))
