"""Typed errors shared across the package."""


class ProbabilityDomainError(ValueError):
    """A contention probability fell outside its valid domain."""


class DegenerateIndexError(ValueError):
    """A success index requires more contenders than are available."""


class StepTooLargeError(ValueError):
    """A finite-difference step would leave the probability interval."""


class InfeasibleError(RuntimeError):
    """No admission count fits the frame budget."""


class ConfigError(ValueError):
    """A configuration file is missing or malformed; .field names the offender."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field
