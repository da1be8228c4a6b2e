"""Exception hierarchy.

Everything raised on bad input derives from ``ValueError`` so callers that
only care about "was the input rejected" can catch that.  The two
bug-detector errors (``InvariantViolation``, ``TheoremViolation``) derive
from ``RuntimeError``: they should never fire on a correct build.
"""


class DedekindError(Exception):
    """Base class for all errors raised by this package."""


class InvalidArgument(DedekindError, ValueError):
    pass


class NoInverse(InvalidArgument):
    pass


class NotPIntegral(InvalidArgument):
    pass


class OracleCapExceeded(InvalidArgument):
    pass


class InvalidTarget(InvalidArgument):
    pass


class NotApproximable(DedekindError):
    """The target is a 2-adic or 3-adic unit; no Dedekind sum comes close.

    This is a legitimate answer about the target, not a malfunction.
    """

    def __init__(self, p, a):
        self.p = p
        self.a = a
        super().__init__(f"{a} is a unit in Z_{p}; Dedekind sums do not approximate it")


class InvariantViolation(DedekindError, RuntimeError):
    pass


class TheoremViolation(DedekindError, RuntimeError):
    """An exhaustive scan found a pair contradicting a proven congruence."""

    def __init__(self, message, pair=None):
        self.pair = pair
        super().__init__(message)
