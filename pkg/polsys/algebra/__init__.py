from .field import FieldSpec, field_arith, field_inv, field_neg, field_pow, element_coeffs, check_same_field  # noqa
from .poly import (  # noqa
    poly,
    poly_from_vector,
    degree,
    max_degree,
    monic,
    poly_eval,
    poly_interpolate,
    poly_gcd,
    poly_gcd_all,
    poly_divrem,
    parse_poly,
    format_poly,
)
from .matrix import (  # noqa
    matrix,
    rank,
    right_kernel_basis,
    vandermonde,
    poly_matrix_eval,
    poly_vector_eval,
    poly_matvec,
)
