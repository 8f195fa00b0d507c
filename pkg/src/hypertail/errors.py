"""Exception types shared across the library.

The CLI maps all of these to exit code 2 with a one-line diagnostic.
"""


class HypertailError(Exception):
    """Base class for all library errors."""


class DomainError(HypertailError, ValueError):
    """An argument lies outside a function's mathematical domain."""


class ValidationError(HypertailError, ValueError):
    """A parameter set violates its structural invariants."""


class PreconditionError(HypertailError, ValueError):
    """A bound was requested outside its regime of validity."""


class NonConvergenceError(HypertailError, ArithmeticError):
    """An iterative scheme failed to converge within its iteration cap.

    This signals a numerics bug (or an argument range the scheme was never
    tuned for), not bad user input.
    """


class NoApplicableMethodError(HypertailError, ValueError):
    """Every requested bound method failed its precondition on every
    representation of the query."""
