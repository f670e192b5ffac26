"""Vanishing scenarios instantiated from the walls the search finds.

For a wall of a target in Ku, take the two-step HN filtration F -> E -> Q
just below it with the characters of the decomposition.  Slopes are then
computed rather than asserted, and the prover either places both factors in
Ku (where their classes are checked against the lambda lattice) or stops.
"""

from __future__ import annotations

from fractions import Fraction

from .stability import StabilityParams
from .vanishing import ObjectDecl, Scenario, Triangle
from .walls import Decomposition, Wall


def hn_instance(dec: Decomposition, wall: Wall, below, name: str = "hn-instance") -> Scenario:
    below = Fraction(below)
    if not 0 < below < wall.alpha_sq:
        raise ValueError("the witness below the wall must satisfy 0 < alpha^2 < wall")
    beta = wall.beta
    sc = Scenario(name=name, cites="wall instance", expect="contradiction")
    sc.points = {"wall": StabilityParams(wall.alpha_sq, beta),
                 "below": StabilityParams(below, beta)}
    for i in (-2, -1, 0, 1, 2, 3):
        sc.add_bimodule(i)
    sc.objects["E"] = ObjectDecl("E", dec.target, in_ku=True, heart=[beta], semistable=["wall"])
    sc.objects["F"] = ObjectDecl("F", dec.sub, heart=[beta], semistable=["wall", "below"])
    sc.objects["Q"] = ObjectDecl("Q", dec.quotient, heart=[beta], semistable=["wall", "below"])
    sc.triangles.append(Triangle(("F", 0), ("E", 0), ("Q", 0), beta))
    return sc


def wall_instances(wall: Wall, below) -> list:
    return [hn_instance(d, wall, below, name=f"{wall.alpha_sq}#{k}")
            for k, d in enumerate(wall.decompositions)]
