#!/usr/bin/env python3
"""Compare the lattice condition with the parity condition on a coordinate box.

Counts the frame -1 points (rank, c1, c2) that pass one test and not the
other, and lists a few of them.  Also reports how the printed -5/16 variant
of the parity test treats the lattice generators.
"""

import argparse
from fractions import Fraction

from kuzwalls.character import (Character, b_char, lattice_member, ordinary_parity_ok,
                                printed_parity_ok)
from kuzwalls.presets import LAMBDA1, LAMBDA2, default_lattice


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rank", type=int, default=12)
    ap.add_argument("--c1", type=int, default=6)
    ap.add_argument("--e", type=int, default=24, help="bound on 8*c2")
    ap.add_argument("--show", type=int, default=8)
    args = ap.parse_args()
    lat = default_lattice()
    only_iv, only_iii, total = [], [], 0
    for r in range(-args.rank, args.rank + 1):
        for c1 in range(-args.c1, args.c1 + 1):
            for e in range(-args.e, args.e + 1):
                v = Character.make(r, c1, Fraction(e, 8), beta=-1)
                iii, iv = lattice_member(v, lat), ordinary_parity_ok(v)
                total += 1
                if iv and not iii:
                    only_iv.append((r, c1, Fraction(e, 8)))
                elif iii and not iv:
                    only_iii.append((r, c1, Fraction(e, 8)))
    print(f"{total} points; parity only: {len(only_iv)}; lattice only: {len(only_iii)}")
    for p in sorted(only_iv, key=lambda p: sum(abs(x) for x in p))[: args.show]:
        print("  parity only:", ", ".join(map(str, p)))
    gens = {"B(1)": b_char(1), "B(2)": b_char(2), "B(3)": b_char(3), "lambda1": LAMBDA1, "lambda2": LAMBDA2}
    print("printed -5/16 variant on generators:",
          {k: printed_parity_ok(v) for k, v in gens.items()})


if __name__ == "__main__":
    main()
