#!/usr/bin/env python3
"""Replay the bundled vanishing scenarios and the HN instances of the E_C walls."""

import sys
import time

from kuzwalls import modelcheck
from kuzwalls.presets import E_C
from kuzwalls.replay import wall_instances
from kuzwalls.vanishing import Scenario, bundled_scenarios, check_expectations, outcome, run_scenario
from kuzwalls.walls import enumerate_walls


def main():
    failed = 0
    for path in bundled_scenarios():
        t0 = time.perf_counter()
        table = run_scenario(Scenario.load(path))
        problems = check_expectations(table)
        try:
            problems += modelcheck.check(table)
            checked = "model-checked"
        except modelcheck.TooLarge:
            checked = "too large to model-check"
        dt = time.perf_counter() - t0
        print(f"{path.stem:18s} {outcome(table):13s} {dt:.3f}s  {checked}")
        for p in problems:
            print(f"    UNMET {p}")
        failed += bool(problems)

    print("\nHN instances below each E_C wall (alpha^2 = wall / 2):")
    for w in enumerate_walls(E_C, -1):
        for sc in wall_instances(w, w.alpha_sq / 2):
            print(f"  {sc.name:10s} {outcome(run_scenario(sc))}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
