"""Exception hierarchy shared by every module.

Everything derives from :class:`LFForgeError` so callers (the CLI in
particular) can separate domain failures from programming errors.
"""


class LFForgeError(ValueError):
    """Base class for all domain errors."""


class NonIntegralInvariant(LFForgeError):
    pass


class GenusOutOfRange(LFForgeError):
    pass


class ParamOutOfRange(LFForgeError):
    pass


class NOrderTooSmall(ParamOutOfRange):
    """E(n)_K with n < 2: irreducible (nonseparating) singular fibers are not guaranteed."""


class NotEquivalent(LFForgeError):
    pass


class ConsistencyViolation(LFForgeError):
    """Two routes to the same quantity disagreed. Never expected in practice."""


class ZeroVector(LFForgeError):
    pass


class NotPrimitive(LFForgeError):
    pass


class EmptyWord(LFForgeError):
    pass


class GenusMismatch(LFForgeError):
    pass


class NotSymplectic(LFForgeError):
    pass


class NonTrivialMonodromy(LFForgeError):
    def __init__(self, message, product=None):
        super().__init__(message)
        self.product = product


class WordParseError(LFForgeError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class RangeTooSmall(LFForgeError):
    pass


class BadRange(LFForgeError):
    pass
