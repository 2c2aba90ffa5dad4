"""Combine the reduced bases of two point-disjoint sub-problems.

Under a lex order, each reduced basis of a zero-dimensional vanishing ideal
contains exactly one polynomial univariate in the least variable.  When the
two univariate generators are coprime, a Bezout identity lets candidates for
the combined basis be assembled from products and crosswise combinations;
after inter-reduction the outcome is submitted to the verification module and
returned only with a passing certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .counters import OpCounters
from .errors import SpliceNotApplicable, SpliceVerificationFailed
from .functionals import Problem
from .polynomials import Monomial, MonomialOrder, Polynomial
from .single_point import GroebnerResult
from .verify import certify, interreduce, staircase


@dataclass
class SpliceInput:
    basis_a: GroebnerResult
    problem_a: Problem
    basis_b: GroebnerResult
    problem_b: Problem
    order: MonomialOrder


def _is_univariate(p: Polynomial, var: int) -> bool:
    return all(
        all(e == 0 for i, e in enumerate(m.exponents) if i != var)
        for m in p.support()
    )


def _degree_in(p: Polynomial, var: int) -> int:
    return max(m.exponents[var] for m in p.support())


def _divmod_univariate(
    f: Polynomial, g: Polynomial, var: int
) -> tuple[Polynomial, Polynomial]:
    deg_g = _degree_in(g, var)
    lc_g = g.coefficient(_pure_power(f.nvars, var, deg_g))
    quotient = Polynomial.zero(f.nvars)
    remainder = f
    while not remainder.is_zero() and _degree_in(remainder, var) >= deg_g:
        deg_r = _degree_in(remainder, var)
        lc_r = remainder.coefficient(_pure_power(f.nvars, var, deg_r))
        step = Polynomial.from_monomial(_pure_power(f.nvars, var, deg_r - deg_g), lc_r / lc_g)
        quotient = quotient + step
        remainder = remainder - step * g
    return quotient, remainder


def _pure_power(nvars: int, var: int, e: int) -> Monomial:
    exps = [0] * nvars
    exps[var] = e
    return Monomial(tuple(exps))


def extended_gcd_univariate(
    f: Polynomial, g: Polynomial, var: int
) -> tuple[Polynomial, Polynomial, Polynomial]:
    """Monic gcd and Bezout cofactors: u*f + v*g = gcd."""
    if f.is_zero() or g.is_zero():
        raise ValueError("extended gcd of a zero polynomial")
    if not _is_univariate(f, var) or not _is_univariate(g, var):
        raise ValueError("inputs must be univariate in the given variable")
    nvars = f.nvars
    one = Polynomial.constant(nvars, 1)
    zero = Polynomial.zero(nvars)
    r0, r1 = f, g
    u0, u1 = one, zero
    v0, v1 = zero, one
    while not r1.is_zero():
        q, r = _divmod_univariate(r0, r1, var)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    lead = r0.coefficient(_pure_power(nvars, var, _degree_in(r0, var)))
    inv = 1 / lead
    return r0 * inv, u0 * inv, v0 * inv


def splice_two(inp: SpliceInput) -> GroebnerResult:
    """Reduced basis of the combined conditions, assembled from the two inputs.

    Candidates: the product of the two least-variable generators; every other
    element of either basis times the opposite generator; and for each leading
    monomial present in both bases, the Bezout combination (u*a1)*b + (v*b1)*a.
    Candidates dominated by another candidate's leading monomial are dropped
    and the rest inter-reduced.  Raises SpliceNotApplicable when the
    preconditions fail and SpliceVerificationFailed when the assembled basis
    does not certify; callers should then fall back to the general pipeline.
    """
    order = inp.order
    if order.kind != "lex":
        raise SpliceNotApplicable("splicing requires a lex order")
    if inp.problem_a.variables != inp.problem_b.variables or inp.problem_a.order != order or inp.problem_b.order != order:
        raise SpliceNotApplicable("sub-problems must share variables and order")
    points_a = {c.point for c in inp.problem_a.conditions}
    points_b = {c.point for c in inp.problem_b.conditions}
    if points_a & points_b:
        raise SpliceNotApplicable("point sets are not disjoint")

    least_var = order.priority[-1]
    basis_a = list(inp.basis_a.basis)
    basis_b = list(inp.basis_b.basis)
    uni_a = [p for p in basis_a if _is_univariate(p, least_var)]
    uni_b = [p for p in basis_b if _is_univariate(p, least_var)]
    if len(uni_a) != 1 or len(uni_b) != 1:
        raise SpliceNotApplicable(
            "each basis must contain exactly one element univariate in the least variable"
        )
    a1, b1 = uni_a[0], uni_b[0]
    gcd, u, v = extended_gcd_univariate(a1, b1, least_var)
    if gcd != Polynomial.constant(gcd.nvars, 1):
        raise SpliceNotApplicable("least-variable generators are not coprime")

    candidates = [a1 * b1]
    candidates.extend(a * b1 for a in basis_a if a is not a1)
    candidates.extend(b * a1 for b in basis_b if b is not b1)
    lead_a = {p.leading_monomial(order): p for p in basis_a}
    lead_b = {p.leading_monomial(order): p for p in basis_b}
    common = [t for t in lead_a if t in lead_b and not _is_univariate_monomial(t, least_var)]
    for t in order.ascending(common):
        a, b = lead_a[t], lead_b[t]
        candidates.append((u * a1) * b + (v * b1) * a)

    lead_of = [(c.leading_monomial(order), c) for c in candidates]
    kept = [
        c
        for lm, c in lead_of
        if not any(other.divides(lm) and other != lm for other, _ in lead_of)
    ]
    reduced = interreduce(kept, order)

    combined = Problem(
        inp.problem_a.variables,
        order,
        inp.problem_a.conditions + inp.problem_b.conditions,
    )
    n = combined.n_conditions
    leading = tuple(g.leading_monomial(order) for g in reduced)
    lower = staircase(leading, combined.nvars, order, n)
    if lower is None:
        raise SpliceVerificationFailed(
            f"spliced basis has quotient dimension above {n}"
        )
    counters = OpCounters()
    counters.merge(inp.basis_a.counters)
    counters.merge(inp.basis_b.counters)
    result = GroebnerResult(tuple(lower), leading, tuple(reduced), counters)
    certificate = certify(result, combined)
    if not certificate.ok:
        raise SpliceVerificationFailed(
            "; ".join(f"{k}: {m}" for k, m in sorted(certificate.details.items()))
            or "certificate failed"
        )
    result.certificate = certificate
    return result


def _is_univariate_monomial(m: Monomial, var: int) -> bool:
    return all(e == 0 for i, e in enumerate(m.exponents) if i != var)
