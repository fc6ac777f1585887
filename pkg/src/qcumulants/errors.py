"""Exception types shared across the package."""


class QCumulantsError(Exception):
    """Base class for all errors raised by this package."""


class PreconditionError(QCumulantsError):
    """An argument violates a documented precondition."""


class TruncationError(QCumulantsError):
    """A sequence is too short for the requested order."""


class SizeBoundError(QCumulantsError):
    """A requested enumeration exceeds the configured size bound."""


class InvalidKindError(QCumulantsError):
    """The operation is not defined for the given independence kind."""


class InputFormatError(QCumulantsError):
    """Malformed external input (JSON payloads, rational literals)."""


class SelfCheckError(QCumulantsError):
    """A built-in cross-route verification failed; indicates a bug."""
