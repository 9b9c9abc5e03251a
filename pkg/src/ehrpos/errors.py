"""Shared exception types."""

from __future__ import annotations


class BudgetExceededError(RuntimeError):
    """An enumeration or oracle instance is larger than its configured budget."""
