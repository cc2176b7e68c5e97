# errors.py


class SWRError(Exception):
    """Base class for every error raised by this package."""


class UsageError(SWRError, ValueError):
    """A caller broke an operation's contract (bad input, wrong mode)."""


class RingMismatchError(UsageError):
    """Two scalars from different polynomial rings were combined."""


class PreconditionError(UsageError):
    """A mathematical precondition of a check does not hold."""


class BFileError(UsageError):
    """A b-file is missing, garbled or too short."""


class ConfigError(UsageError):
    """The fixture registry could not be loaded."""
