"""Sparse multivariate polynomials over exact rationals, with lex/grlex orders.

Coefficients are `fractions.Fraction` throughout: always in lowest terms,
positive denominator, arbitrary precision.  Values are immutable after
construction and safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

Rational = Union[Fraction, int]

LT, EQ, GT = -1, 0, 1


@dataclass(frozen=True, slots=True)
class Monomial:
    """Exponent vector of a power product in d variables."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")

    @classmethod
    def one(cls, nvars: int) -> Monomial:
        return cls((0,) * nvars)

    @classmethod
    def variable(cls, nvars: int, index: int) -> Monomial:
        exps = [0] * nvars
        exps[index] = 1
        return cls(tuple(exps))

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def is_one(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def __mul__(self, other: Monomial) -> Monomial:
        _check_dim(self.nvars, other.nvars)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def divides(self, other: Monomial) -> bool:
        _check_dim(self.nvars, other.nvars)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __truediv__(self, other: Monomial) -> Monomial:
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def factorial(self) -> int:
        """alpha! = product of the factorials of the exponents."""
        out = 1
        for e in self.exponents:
            out *= math.factorial(e)
        return out

    def __repr__(self) -> str:
        return f"Monomial({self.exponents})"


def lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_dim(a.nvars, b.nvars)
    return Monomial(tuple(max(x, y) for x, y in zip(a.exponents, b.exponents)))


@dataclass(frozen=True, slots=True)
class MonomialOrder:
    """Total multiplication-compatible order on monomials.

    kind is "lex" or "grlex"; priority lists the variable indices from
    greatest to least.  grlex compares total degree first and breaks ties
    lexicographically on the priority list.  The constant monomial is minimal
    under both kinds.
    """

    kind: str
    priority: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in ("lex", "grlex"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if sorted(self.priority) != list(range(len(self.priority))):
            raise ValueError(f"priority {self.priority} is not a permutation")

    @classmethod
    def lex(cls, priority: Sequence[int]) -> MonomialOrder:
        return cls("lex", tuple(priority))

    @classmethod
    def grlex(cls, priority: Sequence[int]) -> MonomialOrder:
        return cls("grlex", tuple(priority))

    @property
    def nvars(self) -> int:
        return len(self.priority)

    def key(self, m: Monomial):
        """Sort key; ascending sort by this key lists monomials in increasing order."""
        _check_dim(self.nvars, m.nvars)
        lexpart = tuple(m.exponents[i] for i in self.priority)
        if self.kind == "lex":
            return lexpart
        return (m.degree,) + lexpart

    def compare(self, a: Monomial, b: Monomial) -> int:
        """-1, 0 or 1 according to a < b, a == b, a > b under this order."""
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return LT
        if ka > kb:
            return GT
        return EQ

    def ascending(self, monomials: Iterable[Monomial]) -> list[Monomial]:
        return sorted(monomials, key=self.key)


class Polynomial:
    """Finite map from monomials to nonzero rational coefficients."""

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Rational] = ()):
        cleaned: dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            _check_dim(nvars, mono.nvars)
            c = Fraction(coeff)
            if c:
                cleaned[mono] = c
        self.nvars = nvars
        self._terms = cleaned

    @classmethod
    def zero(cls, nvars: int) -> Polynomial:
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: Rational) -> Polynomial:
        return cls(nvars, {Monomial.one(nvars): value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> Polynomial:
        return cls(nvars, {Monomial.variable(nvars, index): 1})

    @classmethod
    def from_monomial(cls, mono: Monomial, coeff: Rational = 1) -> Polynomial:
        return cls(mono.nvars, {mono: coeff})

    def items(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def support(self) -> set[Monomial]:
        return set(self._terms)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def total_degree(self) -> int:
        if not self._terms:
            return 0
        return max(m.degree for m in self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    def __add__(self, other: Polynomial) -> Polynomial:
        _check_dim(self.nvars, other.nvars)
        terms = dict(self._terms)
        for mono, c in other._terms.items():
            s = terms.get(mono, Fraction(0)) + c
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
        return self._wrap(terms)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __neg__(self) -> Polynomial:
        return self._wrap({m: -c for m, c in self._terms.items()})

    def __mul__(self, other: Union[Polynomial, Rational]) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Polynomial.zero(self.nvars)
            return self._wrap({m: c * v for m, v in self._terms.items()})
        _check_dim(self.nvars, other.nvars)
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                prod = m1 * m2
                s = terms.get(prod, Fraction(0)) + c1 * c2
                if s:
                    terms[prod] = s
                else:
                    terms.pop(prod, None)
        return self._wrap(terms)

    def __rmul__(self, other: Rational) -> Polynomial:
        return self * other

    def __pow__(self, exponent: int) -> Polynomial:
        if exponent < 0:
            raise ValueError("negative exponents are not supported")
        out = Polynomial.constant(self.nvars, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def derivative(self, var: int) -> Polynomial:
        """Partial derivative with respect to the var-th variable."""
        terms: dict[Monomial, Fraction] = {}
        for mono, c in self._terms.items():
            e = mono.exponents[var]
            if e:
                exps = list(mono.exponents)
                exps[var] = e - 1
                lowered = Monomial(tuple(exps))
                terms[lowered] = terms.get(lowered, Fraction(0)) + c * e
        return self._wrap({m: c for m, c in terms.items() if c})

    def evaluate(self, point: Sequence[Rational]) -> Fraction:
        _check_dim(self.nvars, len(point))
        coords = [Fraction(x) for x in point]
        total = Fraction(0)
        for mono, c in self._terms.items():
            value = c
            for x, e in zip(coords, mono.exponents):
                if e:
                    value *= x**e
            total += value
        return total

    def least_monomial(self, order: MonomialOrder) -> Monomial:
        """The minimal monomial of the support under `order`.

        This is the pivot used by team normalization; note it is the opposite
        end of the support from the conventional leading monomial.
        """
        if not self._terms:
            raise ValueError("zero polynomial has no least monomial")
        return min(self._terms, key=order.key)

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        """The maximal monomial of the support (the conventional leading term)."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder) -> Fraction:
        return self._terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder) -> Polynomial:
        """Divide by the leading coefficient."""
        lc = self.leading_coefficient(order)
        return self * (1 / lc)

    def sorted_terms(self, order: MonomialOrder, reverse: bool = False) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=reverse)

    def _wrap(self, terms: dict[Monomial, Fraction]) -> Polynomial:
        p = Polynomial.__new__(Polynomial)
        p.nvars = self.nvars
        p._terms = terms
        return p

    def __repr__(self) -> str:
        body = ", ".join(f"{m.exponents}: {c}" for m, c in sorted(self._terms.items(), key=lambda t: t[0].exponents))
        return f"Polynomial({self.nvars}, {{{body}}})"


def _check_dim(expected: int, got: int) -> None:
    if expected != got:
        raise ValueError(f"dimension mismatch: {expected} vs {got}")
