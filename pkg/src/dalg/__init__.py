"""dalg: an exact-arithmetic toolkit for finite-dimensional double algebras.

A double algebra is a space V with a bilinear double bracket
V x V -> V (x) V.  The package provides exact scalars (Q, GF(p), GF(p)(t)),
exact linear algebra, the correspondence between double brackets and linear
operators on End V via the trace form, classifiers for the Lie / associative
/ commutative identities, ideal search with simplicity verdicts, and
exhaustive finite-field sweeps that machine-verify the structure theory at
desk scale.
"""

from .algebra import (ClassificationFlags, DoubleAlgebra, classify_direct,
                      commutator_algebra, dual_algebra, extend,
                      opposite_algebra, tensor_product)
from .catalog import (EXAMPLE_NAMES, dyangian, gf2t_example, gf2t_operator,
                      l2, l2_dual, l2n, make_example, make_operator_example,
                      module_ext, p1_quotient, phi_algebra, real_example,
                      real_operator, v2, vc)
from .field import (GF, GFt, QQ, Field, FieldMismatchError, FieldScalar,
                    PrimeField, RationalField, RationalFunctionField,
                    RootSearchCapError, UniPoly, parse_field_tag, poly_gcd,
                    roots_in_field)
from .ideals import (IdealVerdict, OneDimSearchResult, enumerate_subspaces,
                     exhaustive_ideal_search, invariant_ideal_search,
                     is_ideal, projective_1d_ideal_search, simplicity_report)
from .io import (format_algebra, format_operator, load_algebra, load_operator,
                 parse_algebra, parse_operator, save_algebra, save_operator)
from .linalg import (DimensionMismatchError, MatrixOverField, Subspace,
                     cyclic_closure, kernel_basis, rref)
from .operators import (EndOperator, IdentityReport, averaging_difference,
                        bracket_from_operator, check_identities,
                        classify_operator, conjugate, dual_basis,
                        matrix_unit, matrix_units, operator_from_bracket,
                        trace_form)
from .suite import (ExampleReport, RepresentabilityReport, YangianReport,
                    run_examples, run_negative_representability_check,
                    run_yangian_check)
from .sweep import SweepReport, operator_flags_batch, run_sweep
from .tensors import (Tensor2, Tensor3, format_tensor2, parse_tensor2, sleeve,
                      tensor2_of_vectors)

__version__ = "0.1.0"

__all__ = [
    "ClassificationFlags", "DoubleAlgebra", "classify_direct",
    "commutator_algebra", "dual_algebra", "extend", "opposite_algebra",
    "tensor_product",
    "EXAMPLE_NAMES", "dyangian", "gf2t_example", "gf2t_operator", "l2",
    "l2_dual", "l2n", "make_example", "make_operator_example", "module_ext",
    "p1_quotient", "phi_algebra", "real_example", "real_operator", "v2", "vc",
    "GF", "GFt", "QQ", "Field", "FieldMismatchError", "FieldScalar",
    "PrimeField", "RationalField", "RationalFunctionField",
    "RootSearchCapError", "UniPoly", "parse_field_tag", "poly_gcd",
    "roots_in_field",
    "IdealVerdict", "OneDimSearchResult", "enumerate_subspaces",
    "exhaustive_ideal_search", "invariant_ideal_search", "is_ideal",
    "projective_1d_ideal_search", "simplicity_report",
    "format_algebra", "format_operator", "load_algebra", "load_operator",
    "parse_algebra", "parse_operator", "save_algebra", "save_operator",
    "DimensionMismatchError", "MatrixOverField", "Subspace", "cyclic_closure",
    "kernel_basis", "rref",
    "EndOperator", "IdentityReport", "averaging_difference",
    "bracket_from_operator", "check_identities", "classify_operator",
    "conjugate", "dual_basis", "matrix_unit", "matrix_units",
    "operator_from_bracket", "trace_form",
    "ExampleReport", "RepresentabilityReport", "SweepReport", "YangianReport",
    "run_examples", "run_negative_representability_check", "run_yangian_check",
    "operator_flags_batch", "run_sweep",
    "Tensor2", "Tensor3", "format_tensor2", "parse_tensor2", "sleeve",
    "tensor2_of_vectors",
]
