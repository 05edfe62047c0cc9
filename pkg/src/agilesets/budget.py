"""Search budgets: a wall-clock deadline and/or a cap on search-node expansions."""

from __future__ import annotations

import os
import time

ENV_VAR = "AGILESETS_BUDGET"


class BudgetExceeded(Exception):
    pass


class Budget:
    """Shared across the calls that make up one check.

    ``seconds=None`` and ``nodes=None`` mean unlimited. A zero budget is
    exhausted before any work is done.
    """

    def __init__(self, seconds: float | None = None, nodes: int | None = None) -> None:
        self.seconds = seconds
        self.nodes = nodes
        self.start = time.monotonic()
        self.deadline = None if seconds is None else self.start + seconds
        self.used = 0

    @classmethod
    def from_env(cls) -> "Budget":
        raw = os.environ.get(ENV_VAR)
        return cls(seconds=float(raw)) if raw else cls()

    def tick(self, n: int = 1) -> None:
        self.used += n
        if self.nodes is not None and self.used > self.nodes:
            raise BudgetExceeded(f"node budget {self.nodes} exhausted")
        if self.deadline is not None and ((self.used & 255) == 0 or self.seconds == 0):
            if time.monotonic() >= self.deadline:
                raise BudgetExceeded(f"time budget {self.seconds}s exhausted")

    def check(self) -> None:
        """Raise now if the budget is already spent (cheap entry guard)."""
        if self.nodes is not None and self.used >= self.nodes:
            raise BudgetExceeded(f"node budget {self.nodes} exhausted")
        if self.deadline is not None and time.monotonic() >= self.deadline:
            raise BudgetExceeded(f"time budget {self.seconds}s exhausted")

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self.start


UNLIMITED = None


def tick(budget: Budget | None, n: int = 1) -> None:
    if budget is not None:
        budget.tick(n)
