"""Interpolation condition functionals: evaluation at a point composed with a
constant-coefficient differential operator.

A condition is the pair (theta, P): the functional maps f to the value of
P(D)f at theta, where P(D) substitutes the partial derivative d/dx_j for the
j-th variable of P.  Spaces of such conditions at a point must be closed
under differentiation for the vanishing set to be an ideal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .counters import OpCounters
from .elimination import ExactMatrix, rref
from .errors import DependentConditions
from .polynomials import Monomial, MonomialOrder, Polynomial, Rational

Point = tuple[Fraction, ...]


def as_point(coords: Sequence[Rational]) -> Point:
    return tuple(Fraction(c) for c in coords)


def eval_functional(theta: Sequence[Rational], p: Polynomial, t: Monomial) -> Fraction:
    """Value of the condition (theta, p) on the monomial X^t.

    Closed form: sum over exponents beta <= alpha (componentwise) of
    p_hat(beta) * alpha!/(alpha-beta)! * theta^(alpha-beta), with alpha the
    exponent vector of t.  No series or derivative objects are built.
    """
    alpha = t.exponents
    if len(theta) != len(alpha) or p.nvars != len(alpha):
        raise ValueError(f"dimension mismatch: {len(theta)} vs {len(alpha)}")
    total = Fraction(0)
    for mono, coeff in p.items():
        beta = mono.exponents
        if any(b > a for a, b in zip(alpha, beta)):
            continue
        value = coeff
        for a, b, x in zip(alpha, beta, theta):
            value *= math.perm(a, b)
            if a > b:
                value *= Fraction(x) ** (a - b)
        total += value
    return total


def eval_on_polynomial(theta: Sequence[Rational], p: Polynomial, f: Polynomial) -> Fraction:
    """Linear extension of eval_functional from monomials to polynomials."""
    total = Fraction(0)
    for mono, coeff in f.items():
        total += coeff * eval_functional(theta, p, mono)
    return total


def lambda_truncate(
    theta: Sequence[Rational],
    p: Polynomial,
    monomials: Iterable[Monomial],
    counters: OpCounters | None = None,
) -> Polynomial:
    """Truncation of the shifted series exp(theta.X)*p to the given support.

    The coefficient of X^alpha in the truncation is the alpha-th Taylor
    coefficient of the series, obtained as the functional value on X^alpha
    divided by alpha!; the series itself is never materialized.  One
    functional evaluation is counted per requested monomial.
    """
    terms = {}
    for t in monomials:
        value = eval_functional(theta, p, t)
        if counters is not None:
            counters.functional_evals_lambda += 1
        if value:
            terms[t] = value / t.factorial()
    return Polynomial(p.nvars, terms)


@dataclass
class ConditionSpace:
    """One interpolation point together with the polynomials defining its conditions."""

    point: Point
    basis: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        self.point = as_point(self.point)
        self.basis = tuple(self.basis)
        if not self.basis:
            raise ValueError("condition space needs at least one polynomial")
        for p in self.basis:
            if p.is_zero():
                raise ValueError("zero polynomial in condition space")
            if p.nvars != len(self.point):
                raise ValueError(
                    f"dimension mismatch: point has {len(self.point)} coordinates, "
                    f"polynomial has {p.nvars} variables"
                )
        if len(set(self.basis)) != len(self.basis):
            raise ValueError("duplicate polynomial in condition space")

    @property
    def nvars(self) -> int:
        return len(self.point)

    @property
    def size(self) -> int:
        return len(self.basis)


def is_d_invariant(space: ConditionSpace) -> tuple[bool, tuple[Polynomial, int] | None]:
    """Check closure of the span under every partial derivative.

    Returns (True, None) when closed, otherwise (False, (p, j)) for the first
    basis polynomial p whose derivative in variable j leaves the span.
    """
    nvars = space.nvars
    derivatives = [
        (p, j, p.derivative(j)) for p in space.basis for j in range(nvars)
    ]
    support: set[Monomial] = set()
    for p in space.basis:
        support |= p.support()
    for _, _, dp in derivatives:
        support |= dp.support()
    order = MonomialOrder.grlex(tuple(range(nvars)))
    labels = order.ascending(support)
    col_of = {m: i for i, m in enumerate(labels)}
    base = ExactMatrix(
        tuple(tuple(p.coefficient(m) for m in labels) for p in space.basis)
    )
    reduced, pivots, _ = rref(base)
    rows = [list(r) for r in reduced.entries[: len(pivots)]]
    for p, j, dp in derivatives:
        if dp.is_zero():
            continue
        vec = [Fraction(0)] * len(labels)
        for m, c in dp.items():
            vec[col_of[m]] = c
        for row, pc in zip(rows, pivots):
            c = vec[pc]
            if c:
                for k in range(pc, len(labels)):
                    if row[k]:
                        vec[k] -= c * row[k]
        if any(vec):
            return False, (p, j)
    return True, None


def are_independent(conds: Sequence[tuple[Sequence[Rational], Polynomial]]) -> bool:
    """Linear independence of a flattened list of (point, polynomial) conditions.

    Decided by running the incremental quotient-basis construction to
    completion: the conditions are independent exactly when it finds a full
    interpolation monomial basis.
    """
    if not conds:
        return True
    from .multi_point import mmm_quotient  # deferred: multi_point imports this module

    nvars = conds[0][1].nvars
    order = MonomialOrder.grlex(tuple(range(nvars)))
    try:
        mmm_quotient([(as_point(theta), p) for theta, p in conds], order)
    except DependentConditions:
        return False
    return True


@dataclass
class Problem:
    """A full interpolation problem: variables, order, and condition spaces."""

    variables: tuple[str, ...]
    order: MonomialOrder
    conditions: tuple[ConditionSpace, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        self.variables = tuple(self.variables)
        self.conditions = tuple(self.conditions)
        if not self.variables or len(set(self.variables)) != len(self.variables):
            raise ValueError("variables must be nonempty and distinct")
        if self.order.nvars != len(self.variables):
            raise ValueError(
                f"order is over {self.order.nvars} variables, problem has {len(self.variables)}"
            )
        if not self.conditions:
            raise ValueError("problem needs at least one condition space")
        for cond in self.conditions:
            if cond.nvars != len(self.variables):
                raise ValueError("condition space dimension does not match variables")
        points = [c.point for c in self.conditions]
        if len(set(points)) != len(points):
            raise ValueError("interpolation points must be pairwise distinct")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def n_conditions(self) -> int:
        return sum(c.size for c in self.conditions)

    def flatten(self) -> list[tuple[Point, Polynomial]]:
        """All (point, polynomial) condition pairs, in document order."""
        return [(c.point, p) for c in self.conditions for p in c.basis]
