"""Brute-force models for small scenarios, used to check the prover.

A model assigns zero/nonzero to every Hom slot in the window and an integer
to every chi variable, such that every compiled clause holds, each chi lies
in the range its nonzero slots allow, the chi premises and linear relations
hold, and no object of non-lambda class has all its B_1..B_3 slots zero.
A derived fact is sound when no model has the opposite value.
"""

from __future__ import annotations

import itertools

from .mukai import from_character
from .vanishing import KU_BIMODULES, Compiled, FactTable, HomKey, Scenario, State, bname

CHI_RANGE = 8          # chi values are searched in [-CHI_RANGE, CHI_RANGE]
MAX_OBJECTS = 4


class TooLarge(ValueError):
    pass


class _Search:
    def __init__(self, sc: Scenario):
        self.comp = Compiled(sc)
        if len(self.comp.atoms) > MAX_OBJECTS:
            raise TooLarge(f"{len(self.comp.atoms)} objects (limit {MAX_OBJECTS})")
        lo, hi = self.comp.lo, self.comp.hi
        self.vars = [HomKey(a, b, j) for a in self.comp.atoms for b in self.comp.atoms
                     for j in range(lo, hi + 1)]
        self.index = {k: i for i, k in enumerate(self.vars)}
        # literals (slot, wanted value); a clause holds when one literal does
        self.clauses = []
        for c in self.comp.clauses:
            lits = [(self.index[c.head], False)] if c.head else []
            lits += [(self.index[k], True) for k in c.alts]
            self.clauses.append(lits)
        self.chi_slots = sorted({self.index[k] for v in self.comp.chi_vars
                                 for k in self.comp.window_keys(v)})

    def chi_ok(self, val) -> bool:
        comp = self.comp
        ranges = {}
        for var in comp.chi_vars:
            ev = od = 0
            for k in comp.window_keys(var):
                if val[self.index[k]]:
                    if k.shift % 2:
                        od += 1
                    else:
                        ev += 1
            if not od and not ev:
                ranges[var] = [0, 0]
            else:
                ranges[var] = [-CHI_RANGE if od else ev, CHI_RANGE if ev else -od]
        for var, lo, hi, _ in comp.chi_bounds:
            r = ranges.setdefault(var, [-CHI_RANGE, CHI_RANGE])
            if lo is not None:
                r[0] = max(r[0], lo)
            if hi is not None:
                r[1] = min(r[1], hi)
        if any(r[0] > r[1] for r in ranges.values()):
            return False
        if not comp.chi_eqs:
            return True
        names = sorted({v for terms, _ in comp.chi_eqs for _, v in terms})
        for values in itertools.product(*(range(ranges[n][0], ranges[n][1] + 1) for n in names)):
            env = dict(zip(names, values))
            if all(sum(c * env[v] for c, v in terms) == 0 for terms, _ in comp.chi_eqs):
                return True
        return False

    def lattice_ok(self, val) -> bool:
        sc = self.comp.sc
        lo, hi = self.comp.lo, self.comp.hi
        atoms = set(self.comp.atoms)
        if not all(bname(s) in atoms for s in KU_BIMODULES):
            return True
        for name, o in sc.objects.items():
            if o.bimodule is not None or o.char is None or from_character(o.char) is not None:
                continue
            if not any(val[self.index[HomKey(bname(s), name, j)]]
                       for s in KU_BIMODULES for j in range(lo, hi + 1)):
                return False
        return True

    def _propagate(self, val: dict) -> bool:
        changed = True
        while changed:
            changed = False
            for lits in self.clauses:
                open_ = []
                for i, want in lits:
                    v = val.get(i)
                    if v is None:
                        open_.append((i, want))
                    elif v == want:
                        break
                else:
                    if not open_:
                        return False
                    if len(open_) == 1:
                        val[open_[0][0]] = open_[0][1]
                        changed = True
        return True

    def _open_clause_var(self, val: dict):
        for lits in self.clauses:
            if any(val.get(i) == want for i, want in lits):
                continue
            for i, _ in lits:
                if i not in val:
                    return i
        return None

    def _rec(self, val: dict):
        if not self._propagate(val):
            return None
        i = self._open_clause_var(val)
        if i is None:
            i = next((k for k in self.chi_slots if k not in val), None)
        if i is None:
            full = [bool(val.get(k, False)) for k in range(len(self.vars))]
            return full if self.chi_ok(full) and self.lattice_ok(full) else None
        for v in (False, True):
            got = self._rec({**val, i: v})
            if got is not None:
                return got
        return None

    def find(self, fixed: dict):
        """A model agreeing with ``fixed`` (key -> bool), or None.

        Branching follows open clauses and the chi slots; once every clause
        holds, the remaining slots can take any value and are set to zero.
        """
        return self._rec({self.index[k]: v for k, v in fixed.items()})


def has_model(sc: Scenario) -> bool:
    return _Search(sc).find({}) is not None


def unsound_facts(table: FactTable) -> list:
    """Derived facts that some model contradicts (empty means sound)."""
    search = _Search(table.scenario)
    bad = []
    for f in table.known():
        if search.find({f.key: f.state is not State.NONZERO}) is not None:
            bad.append(f)
    return bad


def check(table: FactTable) -> list:
    """Problems with ``table`` against the model semantics."""
    if table.contradiction is not None:
        return [] if not has_model(table.scenario) else ["contradiction reported but a model exists"]
    return [f"{f.key} = {f.state.value} is not forced" for f in unsound_facts(table)]
