"""Exception hierarchy shared across the package.

Two failure modes matter to callers (and to the CLI exit codes): bad input,
and an internal postcondition that failed to hold.  Everything raised by the
library derives from one of these.
"""


class CuspfillError(Exception):
    """Base class for all errors raised by this package."""


class InputError(CuspfillError, ValueError):
    """The caller supplied data that violates a documented precondition."""


class ContractError(CuspfillError, RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
