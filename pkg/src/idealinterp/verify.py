"""Independent certification of Groebner-basis claims.

All checks here use the conventional leading term (the greatest monomial of
the support): on the bases produced by this package the greatest monomial of
each element is its designated generator monomial, so the two conventions
agree on everything this module inspects.

The certificate combines four checks: every basis element is annihilated by
every condition functional; the basis is reduced; every S-polynomial reduces
to zero modulo the basis; and the staircase under the leading monomials has
exactly n monomials.  Together these prove the basis is THE reduced Groebner
basis of the vanishing ideal.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Sequence

from .functionals import Problem, eval_on_polynomial
from .parsing import format_monomial, format_polynomial
from .polynomials import Monomial, MonomialOrder, Polynomial, lcm
from .single_point import GroebnerResult


@dataclass
class Certificate:
    vanishing_ok: bool
    reduced_ok: bool
    buchberger_ok: bool
    dimension_ok: bool
    dimension: int | None = None
    details: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return (
            self.vanishing_ok
            and self.reduced_ok
            and self.buchberger_ok
            and self.dimension_ok
        )

    def to_json(self) -> dict:
        return {
            "pass": self.ok,
            "vanishingOk": self.vanishing_ok,
            "reducedOk": self.reduced_ok,
            "buchbergerOk": self.buchberger_ok,
            "dimensionOk": self.dimension_ok,
            "dimension": self.dimension,
            "details": dict(sorted(self.details.items())),
        }


def normal_form(
    f: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder
) -> Polynomial:
    """Remainder of multivariate division of f by the basis.

    Divisors are tried in increasing order of leading monomial, first match
    wins; the greatest reducible term is rewritten at each step.  No monomial
    of the result is divisible by any basis leading monomial.
    """
    divisors = sorted(
        ((g.leading_monomial(order), g.leading_coefficient(order), g) for g in basis if not g.is_zero()),
        key=lambda item: order.key(item[0]),
    )
    remainder = Polynomial.zero(f.nvars)
    work = f
    while not work.is_zero():
        reduced = False
        for t, c in work.sorted_terms(order, reverse=True):
            for lm, lc, g in divisors:
                if lm.divides(t):
                    work = work - Polynomial.from_monomial(t / lm, c / lc) * g
                    reduced = True
                    break
            if reduced:
                break
            remainder = remainder + Polynomial.from_monomial(t, c)
            work = work - Polynomial.from_monomial(t, c)
    return remainder


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """Leading-term cancellation combination of two nonzero polynomials."""
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    both = lcm(lf, lg)
    left = Polynomial.from_monomial(both / lf, 1 / f.leading_coefficient(order)) * f
    right = Polynomial.from_monomial(both / lg, 1 / g.leading_coefficient(order)) * g
    return left - right


def interreduce(polys: Sequence[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    """Fully reduce each polynomial modulo the others; drop zeros, make monic."""
    current = [p.monic(order) for p in polys if not p.is_zero()]
    changed = True
    while changed:
        changed = False
        for i in range(len(current)):
            rest = current[:i] + current[i + 1 :]
            r = normal_form(current[i], rest, order)
            if r != current[i]:
                changed = True
                if r.is_zero():
                    current.pop(i)
                else:
                    current[i] = r.monic(order)
                break
    return sorted(current, key=lambda p: order.key(p.leading_monomial(order)))


def staircase(
    leading: Sequence[Monomial], nvars: int, order: MonomialOrder, limit: int
) -> list[Monomial] | None:
    """Monomials outside the ideal generated by `leading`, ascending.

    Returns None as soon as more than `limit` monomials are found (the
    quotient is too large, possibly infinite)."""
    one = Monomial.one(nvars)
    pool = [(order.key(one), one)]
    seen = {one}
    out: list[Monomial] = []
    while pool:
        _, t = heapq.heappop(pool)
        if any(g.divides(t) for g in leading):
            continue
        out.append(t)
        if len(out) > limit:
            return None
        for i in range(nvars):
            nxt = t * Monomial.variable(nvars, i)
            if nxt not in seen:
                seen.add(nxt)
                heapq.heappush(pool, (order.key(nxt), nxt))
    return out


def certify(result: GroebnerResult, problem: Problem) -> Certificate:
    """Run all four checks against the defining conditions of the problem.

    Failures are reported in the certificate details with a first witness;
    nothing is raised."""
    order = problem.order
    names = problem.variables
    basis = result.basis
    n = problem.n_conditions
    details: dict[str, str] = {}

    vanishing_ok = True
    for space in problem.conditions:
        for p in space.basis:
            for g in basis:
                value = eval_on_polynomial(space.point, p, g)
                if value != 0:
                    vanishing_ok = False
                    details["vanishing"] = (
                        f"condition at ({', '.join(str(c) for c in space.point)}) with "
                        f"operator {format_polynomial(p, names, order)} maps "
                        f"{format_polynomial(g, names, order)} to {value}"
                    )
                    break
            if not vanishing_ok:
                break
        if not vanishing_ok:
            break

    reduced_ok = bool(basis)
    if not basis:
        details["reduced"] = "empty basis"
    leads = [g.leading_monomial(order) for g in basis] if basis else []
    for g, lm in zip(basis, leads):
        if not reduced_ok:
            break
        if g.coefficient(lm) != 1:
            reduced_ok = False
            details["reduced"] = (
                f"{format_polynomial(g, names, order)} is not monic"
            )
            break
        for h, lm_h in zip(basis, leads):
            if h is g:
                continue
            hit = next((t for t, _ in h.sorted_terms(order) if lm.divides(t)), None)
            if hit is not None:
                reduced_ok = False
                details["reduced"] = (
                    f"leading monomial {format_monomial(lm, names)} divides term "
                    f"{format_monomial(hit, names)} of {format_polynomial(h, names, order)}"
                )
                break

    buchberger_ok = True
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            s = s_polynomial(basis[i], basis[j], order)
            r = normal_form(s, basis, order)
            if not r.is_zero():
                buchberger_ok = False
                details["buchberger"] = (
                    f"S({format_polynomial(basis[i], names, order)}, "
                    f"{format_polynomial(basis[j], names, order)}) leaves remainder "
                    f"{format_polynomial(r, names, order)}"
                )
                break
        if not buchberger_ok:
            break

    lower = staircase(leads, problem.nvars, order, n) if basis else None
    if lower is None:
        dimension_ok = False
        dimension = None
        details["dimension"] = f"quotient dimension exceeds {n}"
    else:
        dimension = len(lower)
        dimension_ok = dimension == n
        if not dimension_ok:
            details["dimension"] = f"quotient dimension {dimension}, expected {n}"

    return Certificate(
        vanishing_ok, reduced_ok, buchberger_ok, dimension_ok, dimension, details
    )
