"""Exact computation of reduced Groebner bases of vanishing ideals for
interpolation conditions with differential multiplicities."""

from .counters import OpCounters
from .elimination import ExactMatrix, Team, is_reverse_reduced_team, reverse_reduced_team, rref
from .errors import (
    DependentConditions,
    DependentPolynomials,
    DocumentError,
    IdealInterpError,
    NotDInvariant,
    ParseError,
    SpliceNotApplicable,
    SpliceVerificationFailed,
)
from .functionals import (
    ConditionSpace,
    Problem,
    are_independent,
    eval_functional,
    eval_on_polynomial,
    is_d_invariant,
    lambda_truncate,
)
from .multi_point import groebner_multi, groebner_via_mmm, mmm_quotient
from .parsing import format_monomial, format_polynomial, parse_polynomial, parse_rational
from .polynomials import Monomial, MonomialOrder, Polynomial, lcm
from .single_point import (
    GroebnerResult,
    border_leading_monomials,
    groebner_single,
    quotient_basis,
    read_basis,
)
from .splice import SpliceInput, extended_gcd_univariate, splice_two
from .verify import Certificate, certify, interreduce, normal_form, s_polynomial, staircase

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "ConditionSpace",
    "DependentConditions",
    "DependentPolynomials",
    "DocumentError",
    "ExactMatrix",
    "GroebnerResult",
    "IdealInterpError",
    "Monomial",
    "MonomialOrder",
    "NotDInvariant",
    "OpCounters",
    "ParseError",
    "Polynomial",
    "Problem",
    "SpliceInput",
    "SpliceNotApplicable",
    "SpliceVerificationFailed",
    "Team",
    "are_independent",
    "border_leading_monomials",
    "certify",
    "eval_functional",
    "eval_on_polynomial",
    "extended_gcd_univariate",
    "format_monomial",
    "format_polynomial",
    "groebner_multi",
    "groebner_single",
    "groebner_via_mmm",
    "interreduce",
    "is_d_invariant",
    "is_reverse_reduced_team",
    "lambda_truncate",
    "lcm",
    "mmm_quotient",
    "normal_form",
    "parse_polynomial",
    "parse_rational",
    "quotient_basis",
    "read_basis",
    "reverse_reduced_team",
    "rref",
    "s_polynomial",
    "splice_two",
    "staircase",
]
