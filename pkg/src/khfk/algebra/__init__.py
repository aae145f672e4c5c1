"""Exact algebra: Laurent polynomials, Smith normal form, filtered complexes."""

from .complexes import (BigradedComplex, ComplexError, GradedGenerator, HomologyEntry,
                        HomologyTable, SpectralPages, complex_from_table,
                        filtered_euler_characteristic, filtered_reduce, homology,
                        parse_coefficients, poincare_polynomial, table_euler_characteristic,
                        table_from_polynomial, total_homology)
from .laurent import LaurentPolynomial, parse_polynomial, poly_sum
from .snf import dense_rank, rank_mod_p, rank_rational, smith_normal_form

__all__ = [
    "BigradedComplex", "ComplexError", "GradedGenerator", "HomologyEntry", "HomologyTable",
    "SpectralPages", "complex_from_table", "filtered_euler_characteristic", "filtered_reduce",
    "homology", "parse_coefficients", "poincare_polynomial", "table_euler_characteristic",
    "table_from_polynomial", "total_homology", "LaurentPolynomial", "parse_polynomial",
    "poly_sum", "dense_rank", "rank_mod_p", "rank_rational", "smith_normal_form",
]
