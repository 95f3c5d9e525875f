"""Shared exception types."""


class InvariantError(RuntimeError):
    """A structural property that should always hold failed to hold.

    Raised when a computed object contradicts one of the cross-checked
    invariants (purity, gluing consistency, row-growth admissibility).
    The command line maps this to its own exit code so callers can tell
    a broken property from a usage error.
    """
