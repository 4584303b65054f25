"""Rational quartic residue symbols and constructive checks of rational quartic reciprocity laws."""

from .alpha import AlphaTriple, alpha_triple, eval_alpha_symbol
from .arith import factorize, is_prime, jacobi, mod_pow, sqrt_mod_prime
from .errors import DomainError, InvariantError, NoNegativeNormUnit
from .genus import DiscSplit, enumerate_splits, explore, prime_discriminants, scholz_real_criterion
from .laws import (
    LawReport,
    is_admissible,
    sweep,
    verify_burde,
    verify_ec,
    verify_furuta,
    verify_gauss2,
    verify_scholz,
    verify_scholz_mutual,
)
from .pell import (
    PellUnit,
    eval_unit_symbol,
    eval_unit_symbol_composite,
    fundamental_negative_unit,
    unit_times_sqrt_as_alpha,
)
from .quartic import quartic_symbol_composite, quartic_symbol_prime, quartic_symbol_two
from .twosquares import TwoSquaresRep, all_two_squares, cornacchia_prime, two_squares_composite

__version__ = "0.1.0"

__all__ = [
    "all_two_squares",
    "alpha_triple",
    "AlphaTriple",
    "cornacchia_prime",
    "DiscSplit",
    "DomainError",
    "enumerate_splits",
    "eval_alpha_symbol",
    "eval_unit_symbol",
    "eval_unit_symbol_composite",
    "explore",
    "factorize",
    "fundamental_negative_unit",
    "InvariantError",
    "is_admissible",
    "is_prime",
    "jacobi",
    "LawReport",
    "mod_pow",
    "NoNegativeNormUnit",
    "PellUnit",
    "prime_discriminants",
    "quartic_symbol_composite",
    "quartic_symbol_prime",
    "quartic_symbol_two",
    "scholz_real_criterion",
    "sqrt_mod_prime",
    "sweep",
    "two_squares_composite",
    "TwoSquaresRep",
    "unit_times_sqrt_as_alpha",
    "verify_burde",
    "verify_ec",
    "verify_furuta",
    "verify_gauss2",
    "verify_scholz",
    "verify_scholz_mutual",
]
