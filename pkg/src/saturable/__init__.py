"""Exact tools for deciding whether a homogeneous ideal is a limit of saturated ideals."""

from .apolarity import DualPolynomial, annihilator, apolar_hilbert, contract, ideal_from_dual, perp_degree, perp_dual
from .decide import decide_saturable, sticky_screen
from .groebner import groebner, syzygies
from .hilbert import classify_quotient, hilbert_function, jump_degree, macaulay_admissible
from .ideal import Ideal, colon, ideal, minimal_generators, saturate, transverse_element
from .limits import limit_ideal, limit_subspace, verify_limit_forms
from .obstruction import hom0, obfib_dimension, obfib_table, underived_hom, verdict
from .problem import load_problem, parse_problem
from .rank3 import cactus_via_square, exclude_wild, middle_generator, special_case_3, special_case_4
from .ring import GradedRing, Polynomial

__version__ = "0.1.0"
