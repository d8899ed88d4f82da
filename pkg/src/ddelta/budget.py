"""Resource budgets for Groebner-type computations.

Every potentially unbounded computation (Buchberger loops, reductions,
syzygy runs) consumes a budget so that a runaway instance surfaces as a
distinct BudgetExceeded outcome instead of a hang.
"""

from __future__ import annotations

from dataclasses import dataclass


class BudgetExceeded(Exception):
    """A computation hit its degree or pair-queue cap."""

    def __init__(self, what: str, limit: int):
        super().__init__(f"budget exceeded: {what} > {limit}")
        self.what = what
        self.limit = limit


@dataclass(frozen=True)
class Budget:
    """Caps applied during basis computations.

    max_degree caps the total degree of any polynomial produced; max_pairs
    caps the size of the critical-pair queue.
    """

    max_degree: int = 2000
    max_pairs: int = 500_000

    def check_degree(self, degree: int) -> None:
        if degree > self.max_degree:
            raise BudgetExceeded("total degree", self.max_degree)

    def check_pairs(self, count: int) -> None:
        if count > self.max_pairs:
            raise BudgetExceeded("pair queue", self.max_pairs)


DEFAULT_BUDGET = Budget()
