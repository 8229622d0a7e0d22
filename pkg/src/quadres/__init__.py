"""Exact-arithmetic number theory: quadratic congruences, residue symbols,
Gaussian integers, sums of two squares and Pythagorean triples/quadruples."""

from .core import (
    CrtComponent,
    Factorization,
    ResidueSet,
    crt_combine,
    ext_gcd,
    factorize,
    is_prime,
    mod_inverse,
    mod_pow,
)
from .congruences import (
    QuadCongruence,
    solve_linear,
    solve_quadratic,
    solve_quadratic_coprime,
)
from .diophantine import (
    CZ2Solution,
    PythQuadruple,
    PythTriple,
    ZlSolution,
    cz2_solution,
    cz2_solvable,
    enumerate_primitive_triples,
    enumerate_quadruples,
    pyth_quadruple,
    pyth_triple,
    vn_poly,
    zl_solution,
)
from .gaussian import (
    GaussianFactorization,
    GaussianInt,
    associates,
    canonical_associate,
    div_rem,
    factor,
    format_gaussian,
    is_gaussian_prime,
    is_unit,
    norm,
    parse_gaussian,
)
from .gaussian import gcd as gaussian_gcd
from .oracle import brute_legendre, brute_quadratic, brute_sqrt_mod, brute_two_squares
from .sqrtmod import (
    is_quadratic_residue,
    lift_odd_prime_power,
    sqrt_mod,
    sqrt_mod_2e,
    sqrt_mod_prime,
)
from .symbols import jacobi, jacobi_by_definition, legendre_euler, legendre_gauss_lemma
from .two_squares import (
    TwoSquareRep,
    all_representations,
    count_representations,
    count_representations_by_factorization,
    has_primitive_representation,
    is_sum_of_two_squares,
    primitive_representations,
    rep_from_root,
    represent_prime,
)

__version__ = "0.1.0"

__all__ = [
    "CZ2Solution",
    "CrtComponent",
    "Factorization",
    "GaussianFactorization",
    "GaussianInt",
    "PythQuadruple",
    "PythTriple",
    "QuadCongruence",
    "ResidueSet",
    "TwoSquareRep",
    "ZlSolution",
    "all_representations",
    "associates",
    "brute_legendre",
    "brute_quadratic",
    "brute_sqrt_mod",
    "brute_two_squares",
    "canonical_associate",
    "count_representations",
    "count_representations_by_factorization",
    "crt_combine",
    "cz2_solution",
    "cz2_solvable",
    "div_rem",
    "enumerate_primitive_triples",
    "enumerate_quadruples",
    "ext_gcd",
    "factor",
    "factorize",
    "format_gaussian",
    "gaussian_gcd",
    "has_primitive_representation",
    "is_gaussian_prime",
    "is_prime",
    "is_quadratic_residue",
    "is_sum_of_two_squares",
    "is_unit",
    "jacobi",
    "jacobi_by_definition",
    "legendre_euler",
    "legendre_gauss_lemma",
    "lift_odd_prime_power",
    "mod_inverse",
    "mod_pow",
    "norm",
    "parse_gaussian",
    "primitive_representations",
    "pyth_quadruple",
    "pyth_triple",
    "rep_from_root",
    "represent_prime",
    "solve_linear",
    "solve_quadratic",
    "solve_quadratic_coprime",
    "sqrt_mod",
    "sqrt_mod_2e",
    "sqrt_mod_prime",
    "vn_poly",
    "zl_solution",
]
