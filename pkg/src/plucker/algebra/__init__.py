"""Exact scalar fields, sparse polynomials, and the linear algebra and
factorization helpers the rest of the package is built on."""

from .fields import (ExtScalar, FpScalar, PrimeField, QQ, Rationals,
                     SimpleExtension, base_field_of, parse_field)
from .multipoly import (Homography, MultiPoly, apply_homography, det_bareiss,
                        hessian, partial_derivative, resultant,
                        sylvester_matrix, univariate_coeffs)
from .parser import (homogenize_affine, parse_in_vars, parse_poly,
                     poly_to_string, scalar_to_string)

__all__ = [
    "ExtScalar", "FpScalar", "PrimeField", "QQ", "Rationals",
    "SimpleExtension", "base_field_of", "parse_field",
    "Homography", "MultiPoly", "apply_homography", "det_bareiss",
    "hessian", "partial_derivative", "resultant", "sylvester_matrix",
    "univariate_coeffs",
    "homogenize_affine", "parse_in_vars", "parse_poly", "poly_to_string",
    "scalar_to_string",
]
