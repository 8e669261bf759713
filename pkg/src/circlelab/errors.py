"""Shared exception types."""


class BudgetError(RuntimeError):
    """A requested computation exceeds its configured cost guard."""
