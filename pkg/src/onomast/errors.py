"""Exception hierarchy shared across the pipeline stages.

The CLI maps these onto exit codes: FormatError (and plain I/O errors)
exit 1, ContractViolationError exits 2.
"""


class OnomastError(Exception):
    """Base class for all errors raised by this package."""


class FormatError(OnomastError):
    """Input data does not satisfy a documented interchange format."""


class InputInconsistencyError(FormatError):
    """A second pass over an input saw different content than the first."""


class ContractViolationError(OnomastError):
    """A caller violated a documented precondition (bad parameter domain,
    zero totals, out-of-range values)."""
