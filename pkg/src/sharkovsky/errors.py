"""Exception hierarchy shared by all modules.

Every error raised on purpose by the library derives from
:class:`SharkovskyError`; the CLI maps the subclasses onto exit codes.
"""


class SharkovskyError(Exception):
    """Base class for library errors."""


class InvalidInputError(SharkovskyError, ValueError):
    """An argument violates an operation's precondition."""


class DomainError(SharkovskyError, ValueError):
    """A point or interval lies outside the domain of a map."""


class ResourceError(SharkovskyError):
    """A computation would exceed a configured size limit."""

    def __init__(self, message, count=None):
        super().__init__(message)
        self.count = count


class DegenerateError(SharkovskyError):
    """An iterate has a segment on the diagonal (a continuum of periodic points)."""

    def __init__(self, message, interval=None, iterate=None):
        super().__init__(message)
        self.interval = interval
        self.iterate = iterate


class CoverError(SharkovskyError):
    """A covering relation ``f(J) ⊇ L`` required by a construction fails."""


class HypothesisError(SharkovskyError):
    """The inequalities required by the turbulence construction do not hold."""

    def __init__(self, message, violated=None):
        super().__init__(message)
        self.violated = violated


class ConsistencyError(SharkovskyError):
    """Input data is not what it claims to be (e.g. not an orbit of the map)."""


class NotFoundError(SharkovskyError):
    """A search came up empty."""
