"""Exception types shared across the package."""

from __future__ import annotations


class IdealInterpError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(IdealInterpError):
    """Syntax or semantic error in a polynomial expression string."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


class DocumentError(IdealInterpError):
    """Invalid problem document (schema or semantic violation)."""

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.message = message
        self.path = path


class DependentPolynomials(IdealInterpError):
    """Input polynomials were linearly dependent."""


class DependentConditions(IdealInterpError):
    """Condition functionals were linearly dependent."""


class NotDInvariant(IdealInterpError):
    """A condition space is not closed under partial differentiation.

    `witness` is the offending pair (polynomial, variable index): the
    derivative of that polynomial w.r.t. that variable falls outside the span.
    """

    def __init__(self, witness):
        poly, var = witness
        super().__init__(
            f"condition space not closed under differentiation: "
            f"d/dx_{var} of a basis polynomial is outside the span"
        )
        self.witness = witness


class SpliceNotApplicable(IdealInterpError):
    """Splicing preconditions do not hold for the given pair of bases."""


class SpliceVerificationFailed(IdealInterpError):
    """The spliced candidate basis did not pass verification."""
