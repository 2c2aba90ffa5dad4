"""Reduced Groebner bases for several points: the MMM baseline and the
truncation pipeline driven by it.

The incremental construction (`mmm_quotient`) processes candidate monomials
in increasing order, testing each evaluation vector against the span of the
accepted ones by incremental elimination.  Accepted monomials form the
quotient basis; rejected ones yield both the basis leading monomials and the
basis elements themselves.  `groebner_via_mmm` then re-derives the basis
through series truncation and team normalization, and cross-checks the two.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Sequence

from .counters import OpCounters
from .elimination import reverse_reduced_team
from .errors import DependentConditions, NotDInvariant
from .functionals import Point, Problem, eval_functional, is_d_invariant, lambda_truncate
from .polynomials import Monomial, MonomialOrder, Polynomial
from .single_point import GroebnerResult, groebner_single, read_basis

Functional = tuple[Point, Polynomial]


def mmm_quotient(
    funcs: Sequence[Functional],
    order: MonomialOrder,
    counters: OpCounters | None = None,
) -> tuple[tuple[Monomial, ...], tuple[Monomial, ...], tuple[Polynomial, ...]]:
    """Quotient basis, leading monomials, and reduced basis by incremental
    elimination on the functional evaluation matrix.

    Each processed candidate costs n functional evaluations and one rank
    decision.  Dependent candidates yield a basis element whose tail carries
    the dependency coefficients over the quotient monomials found so far;
    their multiples are pruned from the candidate pool.

    Raises DependentConditions when the pool is exhausted before n monomials
    are accepted.
    """
    if not funcs:
        raise ValueError("empty functional list")
    n = len(funcs)
    nvars = order.nvars
    if counters is None:
        counters = OpCounters()

    one = Monomial.one(nvars)
    pool: list[tuple[tuple, Monomial]] = [(order.key(one), one)]
    seen = {one}
    quotient: list[Monomial] = []
    leading: list[Monomial] = []
    basis: list[Polynomial] = []
    # accepted rows: (pivot coordinate, reduced vector, expression of the
    # vector as a combination of candidate monomials)
    rows: list[tuple[int, list[Fraction], dict[Monomial, Fraction]]] = []

    while pool:
        _, t = heapq.heappop(pool)
        if any(g.divides(t) for g in leading):
            continue
        vec = [eval_functional(theta, p, t) for theta, p in funcs]
        counters.functional_evals_mmm += n
        expr: dict[Monomial, Fraction] = {t: Fraction(1)}
        for pivot, row, row_expr in rows:
            c = vec[pivot]
            if c:
                for k in range(n):
                    if row[k]:
                        vec[k] -= c * row[k]
                        counters.field_ops += 1
                for m, rc in row_expr.items():
                    expr[m] = expr.get(m, Fraction(0)) - c * rc
                    counters.field_ops += 1
        counters.rank_decisions += 1
        if any(vec):
            pivot = next(k for k in range(n) if vec[k])
            lead = vec[pivot]
            if lead != 1:
                for k in range(n):
                    if vec[k]:
                        vec[k] /= lead
                        counters.field_ops += 1
                for m in expr:
                    expr[m] /= lead
                    counters.field_ops += 1
            rows.append((pivot, vec, expr))
            quotient.append(t)
            for i in range(nvars):
                nxt = t * Monomial.variable(nvars, i)
                if nxt not in seen and not any(g.divides(nxt) for g in leading):
                    seen.add(nxt)
                    heapq.heappush(pool, (order.key(nxt), nxt))
        else:
            leading.append(t)
            basis.append(Polynomial(nvars, {m: c for m, c in expr.items() if c}))

    if len(quotient) != n:
        raise DependentConditions(
            f"conditions span only {len(quotient)} dimensions, not {n}"
        )
    return tuple(quotient), tuple(leading), tuple(basis)


def groebner_via_mmm(
    problem: Problem,
    *,
    check_d_invariance: bool = True,
    counters: OpCounters | None = None,
) -> GroebnerResult:
    """Reduced Groebner basis for a general problem, driven by mmm_quotient.

    After the quotient basis and leading monomials are known, each condition
    is truncated onto their union (n*(m+n) functional evaluations), the
    truncations are normalized into a team, and the basis is read out.  The
    result must coincide with the basis produced incrementally; the equality
    is verified and a mismatch reported as an internal error.
    """
    if check_d_invariance:
        for cond in problem.conditions:
            ok, witness = is_d_invariant(cond)
            if not ok:
                raise NotDInvariant(witness)
    if counters is None:
        counters = OpCounters()
    funcs = problem.flatten()
    quotient, leading, mmm_basis = mmm_quotient(funcs, problem.order, counters)
    support = problem.order.ascending(list(quotient) + list(leading))
    truncated = [
        lambda_truncate(theta, p, support, counters) for theta, p in funcs
    ]
    team = reverse_reduced_team(truncated, problem.order, counters)
    basis = read_basis(team, leading)
    if basis != mmm_basis:
        raise RuntimeError(
            "internal consistency failure: truncation pipeline and incremental "
            "elimination produced different bases"
        )
    return GroebnerResult(quotient, leading, basis, counters)


def groebner_multi(
    problem: Problem,
    *,
    check_d_invariance: bool = True,
    counters: OpCounters | None = None,
) -> GroebnerResult:
    """Dispatch: the single-point pipeline when there is one point, the
    MMM-driven pipeline otherwise."""
    if len(problem.conditions) == 1:
        return groebner_single(
            problem.conditions[0],
            problem.order,
            check_d_invariance=check_d_invariance,
            counters=counters,
        )
    return groebner_via_mmm(
        problem, check_d_invariance=check_d_invariance, counters=counters
    )
