"""Exact expansions of scaled Legendre polynomials and their derivatives.

All arithmetic runs over `fractions.Fraction`: identities are verified by
exact coefficient equality, never by floating-point closeness.
"""

from .derivatives import (
    DegeneratePivotError,
    DerivExpansion,
    alpha_closed_recurrence,
    deriv_expand_recurrence,
    deriv_expand_telescoping,
    deriv_expand_triangular,
    murphy_deriv_series,
)
from .polynomials import (
    LegendreSeries,
    Poly,
    differentiate,
    inner_product,
    legendre_bonnet,
    legendre_murphy,
    legendre_rodrigues,
    project_to_legendre,
    scale_argument,
    to_poly,
)
from .rationals import (
    Rational,
    as_rational,
    binomial,
    falling_factorial,
    format_rational,
    parse_rational,
    rising_factorial,
)
from .scaling import (
    FORM_DERIVATIVE,
    FORM_LEGENDRE,
    ScalingExpansion,
    a_coefficient,
    alpha_nki,
    b_coefficient,
    b_coefficient_untruncated,
    expand_derivative_form,
    expand_legendre_form,
    expand_legendre_form_untruncated,
)
from .verify import (
    DEFAULT_LAMBDAS,
    NONZERO_LAMBDAS,
    Counterexample,
    VerificationReport,
    random_lambdas,
    replay_rodrigues_derivation,
    verify_derivative_identity,
    verify_recurrence_vs_telescoping,
    verify_replay,
    verify_scaling_identity,
    verify_surplus_rows,
)

__version__ = "0.1.0"

__all__ = [
    "Rational",
    "as_rational",
    "parse_rational",
    "format_rational",
    "falling_factorial",
    "rising_factorial",
    "binomial",
    "Poly",
    "LegendreSeries",
    "legendre_bonnet",
    "legendre_rodrigues",
    "legendre_murphy",
    "differentiate",
    "scale_argument",
    "inner_product",
    "project_to_legendre",
    "to_poly",
    "DerivExpansion",
    "DegeneratePivotError",
    "deriv_expand_telescoping",
    "deriv_expand_triangular",
    "deriv_expand_recurrence",
    "murphy_deriv_series",
    "alpha_closed_recurrence",
    "FORM_DERIVATIVE",
    "FORM_LEGENDRE",
    "ScalingExpansion",
    "a_coefficient",
    "b_coefficient",
    "b_coefficient_untruncated",
    "alpha_nki",
    "expand_derivative_form",
    "expand_legendre_form",
    "expand_legendre_form_untruncated",
    "DEFAULT_LAMBDAS",
    "NONZERO_LAMBDAS",
    "Counterexample",
    "VerificationReport",
    "verify_scaling_identity",
    "verify_derivative_identity",
    "verify_surplus_rows",
    "verify_recurrence_vs_telescoping",
    "verify_replay",
    "replay_rodrigues_derivation",
    "random_lambdas",
]
