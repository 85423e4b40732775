"""Exception types shared across the package.

Exit-code mapping used by the command line front end:
  InputError          -> 2 (malformed files, bad flags, unsupported parameters)
  BudgetExceededError -> 3 (an exhaustive scan would exceed its work budget)
Verification failures are reported as outcomes, not exceptions.
"""

from __future__ import annotations


class InputError(ValueError):
    """Raised for malformed or out-of-range user input."""


class BudgetExceededError(RuntimeError):
    """Raised when an exhaustive enumeration exceeds its configured budget."""
