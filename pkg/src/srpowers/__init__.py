"""Stanley-Reisner ideals, symbolic powers and Waldschmidt constants in exact arithmetic."""

from .alpha import AlphaQuery, AlphaResult, alpha_bruteforce, alpha_symbolic, alpha_table
from .ideal import (
    Monomial,
    SquarefreeMonomialIdeal,
    bipyramid_ideal,
    minimal_primes,
    reduce_base,
    rotate_base,
    symbolic_membership,
    symmetrize_apexes,
    weight,
)
from .lp import LinearProgram, LPSolution, LPStatus, solve_lp
from .simplicial import (
    SimplicialComplex,
    build_bipyramid,
    enumerate_base_paths,
    facet_complement_primes,
    is_face,
    minimal_nonfaces,
)
from .waldschmidt import GammaReport, gamma_closed_form, gamma_lp, gamma_report

__all__ = [
    "AlphaQuery", "AlphaResult", "GammaReport", "LPSolution", "LPStatus", "LinearProgram",
    "Monomial", "SimplicialComplex", "SquarefreeMonomialIdeal", "alpha_bruteforce",
    "alpha_symbolic", "alpha_table", "bipyramid_ideal", "build_bipyramid",
    "enumerate_base_paths", "facet_complement_primes", "gamma_closed_form", "gamma_lp",
    "gamma_report", "is_face", "minimal_nonfaces", "minimal_primes", "reduce_base",
    "rotate_base", "solve_lp", "symbolic_membership", "symmetrize_apexes", "weight",
]
