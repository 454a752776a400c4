"""Graded intersections of Lagrangians in a punctured disc, for braid closures.

The main entry points are ``omega_q`` (the two-variable graded intersection),
``alexander_of_braid`` / ``jones_of_braid`` and, for knots, the Heegaard
diagram and its bigraded generators.
"""

__version__ = "0.1.0"

from .braid_core import BraidWord, closure_info, parse_braid
from .heegaard import build_heegaard_diagram
from .hfk_desk import bigon_homology_ranks, bigraded_generators, euler_char_check
from .intersection_form import alexander_of_braid, jones_of_braid, omega_q, specialize
from .laurent import LaurentPoly1, LaurentPoly2
from .oracles import alexander_burau, jones_kauffman

__all__ = [
    "BraidWord",
    "LaurentPoly1",
    "LaurentPoly2",
    "alexander_burau",
    "alexander_of_braid",
    "bigon_homology_ranks",
    "bigraded_generators",
    "build_heegaard_diagram",
    "closure_info",
    "euler_char_check",
    "jones_kauffman",
    "jones_of_braid",
    "omega_q",
    "parse_braid",
    "specialize",
]
