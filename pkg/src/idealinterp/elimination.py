"""Exact Gaussian elimination and normalization of polynomial sets into teams.

A "team" is a set of linearly independent polynomials in which each member's
least monomial has coefficient 1 and occurs in no other member.  Teams are
produced by row-reducing the coefficient matrix of the input over its support,
with columns listed in increasing monomial order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .counters import OpCounters
from .errors import DependentPolynomials
from .polynomials import Monomial, MonomialOrder, Polynomial


@dataclass(frozen=True)
class ExactMatrix:
    """Dense rational matrix; col_labels, when present, ascend in the order used."""

    entries: tuple[tuple[Fraction, ...], ...]
    col_labels: tuple[Monomial, ...] | None = None

    @classmethod
    def from_polynomials(cls, polys: Sequence[Polynomial], order: MonomialOrder) -> ExactMatrix:
        """Coefficient matrix of the polynomials over their combined support."""
        support: set[Monomial] = set()
        for p in polys:
            support |= p.support()
        labels = tuple(order.ascending(support))
        rows = tuple(tuple(p.coefficient(m) for m in labels) for p in polys)
        return cls(rows, labels)

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0


def rref(matrix: ExactMatrix) -> tuple[ExactMatrix, tuple[int, ...], int]:
    """Reduced row echelon form over the rationals.

    Pivots are chosen as the first nonzero entry in each column, scanning
    columns left to right; no pivoting heuristics.  Returns the reduced
    matrix, the pivot column indices, and the number of coefficient
    multiplications/divisions performed.
    """
    rows = [list(r) for r in matrix.entries]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    ops = 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r >= nrows:
            break
        src = next((i for i in range(r, nrows) if rows[i][col]), None)
        if src is None:
            continue
        if src != r:
            rows[r], rows[src] = rows[src], rows[r]
        pivot = rows[r][col]
        if pivot != 1:
            for j in range(col, ncols):
                if rows[r][j]:
                    rows[r][j] /= pivot
                    ops += 1
        for i in range(nrows):
            if i == r:
                continue
            c = rows[i][col]
            if c:
                for j in range(col, ncols):
                    if rows[r][j]:
                        rows[i][j] -= c * rows[r][j]
                        ops += 1
        pivots.append(col)
        r += 1
    reduced = ExactMatrix(tuple(tuple(row) for row in rows), matrix.col_labels)
    return reduced, tuple(pivots), ops


@dataclass(frozen=True)
class Team:
    """Normalized polynomials, listed in increasing order of least monomial."""

    polys: tuple[Polynomial, ...]
    order: MonomialOrder

    @property
    def least_monomials(self) -> tuple[Monomial, ...]:
        return tuple(p.least_monomial(self.order) for p in self.polys)


def reverse_reduced_team(
    polys: Sequence[Polynomial],
    order: MonomialOrder,
    counters: OpCounters | None = None,
) -> Team:
    """Normalize linearly independent polynomials into a team.

    The span is preserved exactly.  Raises DependentPolynomials when the
    input is linearly dependent (a zero row survives reduction).
    """
    if not polys:
        raise ValueError("empty polynomial list")
    matrix = ExactMatrix.from_polynomials(polys, order)
    reduced, pivots, ops = rref(matrix)
    if counters is not None:
        counters.field_ops += ops
    if len(pivots) < len(polys):
        raise DependentPolynomials(
            f"input spans only {len(pivots)} dimensions, not {len(polys)}"
        )
    labels = reduced.col_labels
    assert labels is not None
    nvars = order.nvars
    out = []
    for row in reduced.entries[: len(pivots)]:
        out.append(Polynomial(nvars, {m: c for m, c in zip(labels, row) if c}))
    return Team(tuple(out), order)


def is_reverse_reduced_team(polys: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """Both team clauses: unit least coefficients, least monomials private."""
    if not polys or any(p.is_zero() for p in polys):
        return False
    least = [p.least_monomial(order) for p in polys]
    if len(set(least)) != len(least):
        return False
    for i, p in enumerate(polys):
        if p.coefficient(least[i]) != 1:
            return False
        for j, q in enumerate(polys):
            if i != j and least[i] in q.support():
                return False
    return True
