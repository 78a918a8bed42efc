"""Cohomological dimension, relative systems of parameters and relative Cohen-Macaulayness."""

from .errors import (ContextMismatch, DegenerateModule, HypothesisFailure, InternalInconsistency,
                     NotInIdeal, ParseError, RelcohError, UnsupportedInput, WrongLength)
from .ideals import (Ideal, ideal_membership, ideal_quotient, ideal_quotient_ideal, intersect,
                     is_regular_element, is_regular_sequence, radical_equal, radical_membership)
from .local_cohomology import NEG_INF, cd_monomial, cech_profile, lemma24_verify, lyubeznik_check, mult_surjective
from .modules import free_resolution, koszul_grade, lift, syzygies
from .monomial import (BettiTable, MonomialIdeal, SimplicialComplex, alexander_dual, associated_primes,
                       hochster_betti, projective_dimension, stanley_reisner)
from .poly import GREVLEX, LEX, Field, MonomialOrder, Poly, Ring
from .relcm import (ModulePresentation, SearchConfig, ara_bounds, cd, corollary34_check, dr_injectivity,
                    find_rsop, grade, is_rcm, is_rsop, lemma26_check, theorem32_check)
from .session import Session, parse_polynomial, parse_session

__version__ = "0.1.0"

__all__ = [
    "BettiTable", "ContextMismatch", "DegenerateModule", "Field", "GREVLEX", "HypothesisFailure",
    "Ideal", "InternalInconsistency", "LEX", "ModulePresentation", "MonomialIdeal", "MonomialOrder",
    "NEG_INF", "NotInIdeal", "ParseError", "Poly", "RelcohError", "Ring", "SearchConfig", "Session",
    "SimplicialComplex", "UnsupportedInput", "WrongLength", "alexander_dual", "ara_bounds",
    "associated_primes", "cd", "cd_monomial", "cech_profile", "corollary34_check", "dr_injectivity",
    "find_rsop", "free_resolution", "grade", "hochster_betti", "ideal_membership", "ideal_quotient",
    "ideal_quotient_ideal", "intersect", "is_rcm", "is_regular_element", "is_regular_sequence",
    "is_rsop", "koszul_grade", "lemma24_verify", "lemma26_check", "lift", "lyubeznik_check",
    "mult_surjective", "parse_polynomial", "parse_session", "projective_dimension", "radical_equal",
    "radical_membership", "stanley_reisner", "syzygies", "theorem32_check",
]
