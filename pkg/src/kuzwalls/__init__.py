"""Wall-crossing computations for tilt stability on (P^3, B_0)."""

from .character import Character, b_char, discriminant, twist
from .stability import StabilityParams, central_charge, slope
from .walls import enumerate_walls, search_walls, wall_between
from .mukai import MukaiVector, moduli_dim
from .vanishing import Scenario, propagate, query, run_scenario

__all__ = [
    "Character", "b_char", "discriminant", "twist",
    "StabilityParams", "central_charge", "slope",
    "enumerate_walls", "search_walls", "wall_between",
    "MukaiVector", "moduli_dim",
    "Scenario", "propagate", "query", "run_scenario",
]
