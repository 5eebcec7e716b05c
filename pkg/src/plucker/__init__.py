"""Exact invariants of plane projective algebraic curves.

The package computes Newton-Puiseux branches, intersection divisors,
pencil jacobians, the geometric genus, dual curves and the classical
identities tying degree, class, nodes and flexes together, all in
exact arithmetic over the rationals, prime fields of odd order, or a
single simple extension of either.
"""

from .algebra.fields import PrimeField, Rationals, SimpleExtension
from .algebra.multipoly import MultiPoly
from .algebra.parser import parse_poly, poly_to_string, scalar_to_string
from .curve import Branch, FlexRecord, PlaneCurve, PointP2, SingularityReport
from .duality import (DUAL_CLASS_LIMIT, DualityReport, FormulaCheck,
                      MultipleTangent, PluckerVerdict, bidual_check,
                      branch_transform_check, class_of, dual_curve,
                      duality_report, multiple_tangents, plucker_suite,
                      translation_pencil_audit)
from .errors import (GenericityError, InvariantViolation, ParseError,
                     PluckerError, PrecisionExhausted, UnsupportedFieldError,
                     ValidationError)
from .genus import (DecompositionReport, dhdx, differential_decomposition,
                    genus, genus_from_nodes, genus_from_singularities,
                    is_rational, proper_frame)
from .puiseux import (BranchParam, TruncatedSeries, branches_of_germ,
                      newton_puiseux)
from .sampling import RESAMPLE_BUDGET, Sampler
from .series import (INFINITY, JacobianData, LinearSystem, Pencil,
                     WeightedSet, branch_series, divisor_of,
                     form_order_on_branch, intersect_branchwise,
                     linear_equiv_witness, pencil_value_and_index,
                     rational_divisor, series_dim_from_forms)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
