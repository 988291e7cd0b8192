"""Hardness-gadget generators, constructive colouring lemmas and instance
suppliers."""

from .dimacs import Assignment, CnfFormula, parse_dimacs, satisfies
from .colouring import (
    c5_walk,
    reduce_3col_to_star3col,
    reduce_5col_to_c5col,
    star_colour_subdivision,
)
from .random_free import gen_random_free
from .sat_gadget import GadgetLayout, build_hole_certificate, gen_2idp_sat
from .girth_gadget import build_gadget_star_colouring, gen_bipartite_star_gadget

__all__ = [
    "Assignment",
    "CnfFormula",
    "parse_dimacs",
    "satisfies",
    "c5_walk",
    "reduce_5col_to_c5col",
    "reduce_3col_to_star3col",
    "star_colour_subdivision",
    "gen_random_free",
    "GadgetLayout",
    "gen_2idp_sat",
    "build_hole_certificate",
    "gen_bipartite_star_gadget",
    "build_gadget_star_colouring",
]
