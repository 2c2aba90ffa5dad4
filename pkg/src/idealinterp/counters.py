"""Operation counters used to account for the cost of each pipeline phase."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class OpCounters:
    """Tallies of the work performed while computing a basis.

    field_ops counts coefficient multiplications/divisions inside linear
    elimination (row reduction and incremental vector reduction).  Functional
    evaluations are split by phase: the truncation ("lambda") phase common to
    both pipelines, and the incremental MMM phase.  rank_decisions counts
    linear-independence tests; the single-point pipeline performs none.
    """

    field_ops: int = 0
    functional_evals_lambda: int = 0
    functional_evals_mmm: int = 0
    rank_decisions: int = 0

    @property
    def functional_evals(self) -> int:
        return self.functional_evals_lambda + self.functional_evals_mmm

    def merge(self, other: "OpCounters") -> None:
        self.field_ops += other.field_ops
        self.functional_evals_lambda += other.functional_evals_lambda
        self.functional_evals_mmm += other.functional_evals_mmm
        self.rank_decisions += other.rank_decisions
