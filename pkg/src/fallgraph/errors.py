"""Exception hierarchy.

Every error carries the CLI exit code it maps to, so the command layer can
translate failures without a lookup table.
"""


class FallGraphError(Exception):
    exit_code = 2


class InvalidGraph(FallGraphError):
    """Malformed edge list: self-loop, out-of-range endpoint, duplicate edge."""


class FormatError(FallGraphError):
    pass


class BadParams(FallGraphError):
    pass


class PreconditionError(FallGraphError):
    pass


class NotATree(PreconditionError):
    pass


class OrderTooSmall(PreconditionError):
    pass


class SizeMismatch(PreconditionError):
    pass


class PaletteMismatch(PreconditionError):
    pass


class ImproperInput(PreconditionError):
    pass


class NotThreeColorable(PreconditionError):
    pass


class CapExceeded(FallGraphError):
    """A search or construction exceeded its configured resource cap."""

    exit_code = 3


class BudgetExceeded(CapExceeded):
    """Backtracking ran out of nodes before reaching a definite answer."""


class ProofViolation(FallGraphError):
    """An invariant guaranteed by one of the theorems failed at runtime.

    ``trace`` holds whatever state is useful for reproducing the failure.
    """

    exit_code = 4

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace
