"""Work caps for enumerations.

The cap is held in a context variable so that it is per-thread/per-task and
never shared mutable state.  Use :func:`budget_limit` to change it locally::

    with budget_limit(10**7):
        irreducibles(F, 8)
"""

from contextlib import contextmanager
from contextvars import ContextVar

from .errors import BudgetExceeded

DEFAULT_BUDGET = 10**6

_budget: ContextVar[int] = ContextVar("fmzv_budget", default=DEFAULT_BUDGET)


def get_budget() -> int:
    return _budget.get()


@contextmanager
def budget_limit(limit: int):
    if limit < 1:
        raise ValueError("budget must be positive")
    token = _budget.set(limit)
    try:
        yield limit
    finally:
        _budget.reset(token)


def check_budget(cost: int, what: str = "operation") -> None:
    limit = _budget.get()
    if cost > limit:
        raise BudgetExceeded(f"{what} needs {cost} steps, budget is {limit}")
