"""Step budget shared by all Gröbner computations in the current context.

Each reduction step is charged to the innermost active budget.  Outside any
``step_budget`` block, every top-level Gröbner call gets a fresh default
allowance (``CHARCLASS_BUDGET`` or 10^7 steps).
"""

import os
from contextlib import contextmanager
from contextvars import ContextVar

from .errors import BudgetExhausted

DEFAULT_STEPS = 10**7

_active: ContextVar = ContextVar("charclass_budget", default=None)


def default_steps() -> int:
    env = os.environ.get("CHARCLASS_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            pass
    return DEFAULT_STEPS


class Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int):
        self.limit = int(limit)
        self.used = 0

    @property
    def remaining(self) -> int:
        return self.limit - self.used

    def charge(self, steps: int):
        self.used += steps
        if self.used > self.limit:
            raise BudgetExhausted(f"step budget of {self.limit} reductions exhausted")


@contextmanager
def step_budget(steps: int | None = None):
    """Run the enclosed computations under one shared allowance."""
    budget = Budget(default_steps() if steps is None else steps)
    token = _active.set(budget)
    try:
        yield budget
    finally:
        _active.reset(token)


@contextmanager
def ensure_budget():
    """Reuse the active budget, or open a default one for this call."""
    current = _active.get()
    if current is not None:
        yield current
    else:
        with step_budget() as budget:
            yield budget
