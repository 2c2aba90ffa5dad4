"""Reduced Groebner basis for conditions at a single point.

The pipeline: normalize the condition polynomials into a team, read the
quotient monomial basis straight off the team's least monomials (no rank
computations), derive the basis leading monomials from the border of that
set, truncate the shifted condition series onto the combined support,
normalize once more, and read the basis coefficients out of the result.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Sequence

from .counters import OpCounters
from .elimination import Team, reverse_reduced_team
from .errors import NotDInvariant
from .functionals import ConditionSpace, is_d_invariant, lambda_truncate
from .polynomials import Monomial, MonomialOrder, Polynomial

if TYPE_CHECKING:
    from .verify import Certificate


@dataclass
class GroebnerResult:
    """Quotient monomial basis, basis leading monomials, the reduced basis
    itself (ascending by leading monomial), and the operation counters."""

    quotient_basis: tuple[Monomial, ...]
    leading_monomials: tuple[Monomial, ...]
    basis: tuple[Polynomial, ...]
    counters: OpCounters
    certificate: "Certificate | None" = None

    @property
    def n(self) -> int:
        return len(self.quotient_basis)

    @property
    def m(self) -> int:
        return len(self.leading_monomials)


def quotient_basis(team: Team) -> tuple[Monomial, ...]:
    """Least monomials of a team, ascending: the quotient-ring monomial basis."""
    return tuple(team.order.ascending(team.least_monomials))


def border_leading_monomials(
    quotient: Sequence[Monomial], nvars: int, order: MonomialOrder
) -> tuple[Monomial, ...]:
    """Minimal generators of the monomial ideal complementing the quotient set.

    Walks the border (variable multiples of quotient monomials, minus the set
    itself) in increasing order, keeping each monomial not divisible by one
    already kept.
    """
    qset = set(quotient)
    border = {
        t * Monomial.variable(nvars, i) for t in qset for i in range(nvars)
    } - qset
    out: list[Monomial] = []
    for t in order.ascending(border):
        if not any(g.divides(t) for g in out):
            out.append(t)
    return tuple(out)


def read_basis(team: Team, leading: Sequence[Monomial]) -> tuple[Polynomial, ...]:
    """Basis elements read off a normalized truncation team.

    For each leading monomial X^alpha the element is X^alpha minus, for every
    team member with least monomial X^beta, (alpha!/beta!) times that member's
    coefficient at alpha, times X^beta.
    """
    nvars = team.order.nvars
    pivots = team.least_monomials
    out = []
    for alpha in leading:
        terms: dict[Monomial, Fraction] = {alpha: Fraction(1)}
        fact_alpha = alpha.factorial()
        for q, beta in zip(team.polys, pivots):
            c = q.coefficient(alpha)
            if c:
                terms[beta] = -Fraction(fact_alpha, beta.factorial()) * c
        out.append(Polynomial(nvars, terms))
    return tuple(out)


def groebner_single(
    cond: ConditionSpace,
    order: MonomialOrder,
    *,
    check_d_invariance: bool = True,
    counters: OpCounters | None = None,
) -> GroebnerResult:
    """Reduced Groebner basis of the vanishing ideal of a one-point problem.

    The input span is normalized first, so callers need not supply a team.
    The quotient basis is read from the team without any rank decision; the
    truncation phase performs exactly n*(m+n) functional evaluations.
    """
    if check_d_invariance:
        ok, witness = is_d_invariant(cond)
        if not ok:
            raise NotDInvariant(witness)
    if counters is None:
        counters = OpCounters()
    team = reverse_reduced_team(cond.basis, order, counters)
    quotient = quotient_basis(team)
    leading = border_leading_monomials(quotient, cond.nvars, order)
    support = order.ascending(list(quotient) + list(leading))
    truncated = [
        lambda_truncate(cond.point, p, support, counters) for p in team.polys
    ]
    normalized = reverse_reduced_team(truncated, order, counters)
    basis = read_basis(normalized, leading)
    return GroebnerResult(quotient, leading, basis, counters)
