"""Exception types shared across the package."""


class ZtetraError(Exception):
    """Base class for every error raised by this package."""


class RangeError(ZtetraError, ValueError):
    """Input falls outside the supported integer range."""


class DomainError(ZtetraError, ValueError):
    """Input is structurally valid but violates a mathematical precondition."""


class VerificationError(ZtetraError, ValueError):
    """A geometric verification failed; the message names the failing equality."""


class ConstructionError(ZtetraError, RuntimeError):
    """A construction step produced a state the underlying theory rules out."""


class UsageError(ZtetraError):
    """Command line arguments were parseable but unusable together."""
