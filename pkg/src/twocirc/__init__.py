"""Exact closed forms for circulant matrices with two nonzero coefficients."""

from .circulant import (Circulant, PolynomialQ, TwoParamCirculant, associated_polynomial,
                        circ_to_dense, rank_circulant, to_dense)
from .closedform import (DetResult, GenInverseResult, InverseKind, base_drazin_minus,
                         base_drazin_plus, det_closed, drazin_axioms_check, drazin_closed,
                         generalized_inverse, inverse_closed, perm_closed, rho, rho_star)
from .core import (DomainError, IntPair, NonsingularMatrixError, Rational, SingularMatrixError,
                   gcd, mod, n_without_s, parse_rational)
from .matrix import DenseMatrix
from .permutation import Permutation, compose, cycle_type, inverse, matrix_of, tau
from .untangle import block_diagonalize, nu, sigma, untangle_poly

__version__ = "0.1.0"

__all__ = [
    "Circulant", "PolynomialQ", "TwoParamCirculant", "associated_polynomial", "circ_to_dense",
    "rank_circulant", "to_dense",
    "DetResult", "GenInverseResult", "InverseKind", "base_drazin_minus", "base_drazin_plus",
    "det_closed", "drazin_axioms_check", "drazin_closed", "generalized_inverse", "inverse_closed",
    "perm_closed", "rho", "rho_star",
    "DomainError", "IntPair", "NonsingularMatrixError", "Rational", "SingularMatrixError", "gcd",
    "mod", "n_without_s", "parse_rational",
    "DenseMatrix",
    "Permutation", "compose", "cycle_type", "inverse", "matrix_of", "tau",
    "block_diagonalize", "nu", "sigma", "untangle_poly",
]
