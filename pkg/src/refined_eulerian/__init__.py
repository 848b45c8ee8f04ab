"""Exact arithmetic for parity-refined descent statistics of permutations.

The package computes, entirely over exact integers and rationals:

- the bivariate polynomials counting permutations by descents at odd and
  even positions, with both a brute-force sweep oracle and fast convolution
  recurrences;
- the classical descent triangle, the even-descent triangle, the gamma
  coefficient rows, zigzag (secant/tangent) numbers, and Catalan numbers;
- a registry of machine checks for the identities tying all of these
  together, each reporting pass/fail with a diffable witness.

See the ``refined-eulerian`` command-line tool for table export and
verification runs.
"""
from .algebra import (
    BivariatePolynomial,
    RationalSubstitution,
    TruncatedSeries,
    UnivariatePolynomial,
    catalan_numbers,
    catalan_series,
    egf_eulerian,
    evaluate_at_series,
    is_palindromic,
)
from .identities import (
    GfSubstitution,
    IdentityReport,
    UnknownIdentityError,
    Witness,
    identity_ids,
    run_suite,
)
from .permutations import (
    DescentStats,
    EnumerationCapError,
    append_max,
    brute_a_count,
    brute_c_count,
    brute_eulerian,
    brute_refined_poly,
    complement,
    descent_stats,
    is_alternating,
    is_reverse_alternating,
    reflect_insert,
    reflect_insert_inverse,
    reversal,
    reversal_complement,
    rotate_insert,
    rotate_insert_inverse,
    standardize_to,
    validate_permutation,
)
from .triangles import (
    SequenceTable,
    TriangleTable,
    a_from_eulerian,
    a_row,
    a_triangle,
    c_coeffs,
    c_triangle,
    catalan_power_coefficient,
    catalan_sequence,
    euler_from_eulerian,
    euler_number,
    euler_numbers,
    eulerian_from_a,
    eulerian_polynomial,
    eulerian_row,
    eulerian_triangle,
    even_descent_polynomial,
    odd_descent_polynomial,
    refined_poly,
    refined_polys,
    tilde_poly,
)

__version__ = "0.1.0"
