"""Error types shared across the package.

The command line maps these onto distinct exit codes, so library code
should raise the most specific one that applies.
"""

from __future__ import annotations

__all__ = ["InputError", "InvariantViolation", "ResourceLimitError"]


class InputError(Exception):
    """Malformed or out-of-range user input (bad table, unknown attribute)."""


class InvariantViolation(Exception):
    """An internal cross-check failed; indicates a bug, never bad input."""


class ResourceLimitError(Exception):
    """An exhaustive computation was refused because it exceeds a size cap."""
