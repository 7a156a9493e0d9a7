"""Exception hierarchy shared by the whole package."""


class GrapesError(Exception):
    """Base class for all package errors."""


class InputError(GrapesError, ValueError):
    """Malformed input: unknown labels, parse errors, violated preconditions."""


class ResourceError(GrapesError, RuntimeError):
    """A brute-force routine was asked to exceed its configured cutoff."""


class InternalConsistencyError(GrapesError, AssertionError):
    """An internal invariant failed; always indicates a bug."""


class CertificationError(GrapesError):
    """No domination pair was found somewhere in the recursion.

    The partially built decomposition is kept in ``trace`` so callers can see
    exactly where certification stopped.
    """

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace
