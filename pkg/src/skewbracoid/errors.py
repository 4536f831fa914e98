"""Exception hierarchy shared by all modules.

Two failure classes matter for the CLI exit-code contract:

* ``PreconditionError`` -- the caller handed us bad input (exit code 1).
* ``InternalConsistencyError`` -- a verified theoretical identity failed,
  i.e. something that should be impossible happened (exit code 2).
"""


class SkewBracoidError(Exception):
    pass


class PreconditionError(SkewBracoidError, ValueError):
    """Raised when an operation's stated precondition is violated."""


class WorkLimitError(PreconditionError):
    """Raised when an enumeration exceeds its configured work budget."""


class InternalConsistencyError(SkewBracoidError, RuntimeError):
    """Raised when a cross-check that theory guarantees fails.

    Hitting this means either a bug in this library or a counterexample
    to a published theorem; it is never a user error.
    """
