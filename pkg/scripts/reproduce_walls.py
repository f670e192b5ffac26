#!/usr/bin/env python3
"""Print the wall lists for E_C and M_l, each wall with its decompositions."""

import argparse
from fractions import Fraction

from kuzwalls.presets import E_C, M_L, format_values, parse_character
from kuzwalls.walls import describe, search_walls


def show(name, target, beta, amin):
    res = search_walls(target, beta, amin)
    print(f"{name}: {format_values(target, beta)} at beta={beta}, alpha^2 >= {amin}, box {res.box_size}")
    for w in res.walls:
        print(f"  alpha^2 = {w.alpha_sq}  (alpha ~ {w.alpha:.4f})")
        for d in w.decompositions:
            names = [n or "-" for n in (describe(d.sub), describe(d.quotient))]
            print(f"    {format_values(d.sub, beta)} + {format_values(d.quotient, beta)}   {' / '.join(names)}")
    for d in res.proportional:
        print(f"  proportional: {format_values(d.sub, beta)} + {format_values(d.quotient, beta)}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--beta", type=Fraction, default=Fraction(-1))
    ap.add_argument("--alpha2-min", type=Fraction, default=Fraction(1, 400))
    ap.add_argument("--target", action="append", help="extra targets (preset or values)")
    args = ap.parse_args()
    targets = [("E_C", E_C), ("M_l", M_L)] + [(t, parse_character(t)) for t in args.target or []]
    for name, t in targets:
        show(name, t, args.beta, args.alpha2_min)


if __name__ == "__main__":
    main()
