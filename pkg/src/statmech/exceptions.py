"""Exception hierarchy shared by every module."""


class StatMechError(Exception):
    """Base class for all errors raised by this package."""


class InvalidArgumentError(StatMechError, ValueError):
    pass


class SpectrumParseError(StatMechError, ValueError):
    """Raised when a spectrum file cannot be read; carries the offending line."""

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}"
            if line is not None:
                where += f":{line}"
            where += ": "
        super().__init__(where + message)


class DomainError(StatMechError, ValueError):
    """Input outside the region where a distribution is defined."""


class CapacityError(DomainError):
    """Requested fermion number exceeds the number of available states."""


class UnsupportedStatisticsError(StatMechError, ValueError):
    pass


class ConvergenceError(StatMechError, RuntimeError):
    """Root search gave up; ``bracket`` holds the tightest interval found."""

    def __init__(self, message, bracket=None, iterations=None):
        super().__init__(message)
        self.bracket = bracket
        self.iterations = iterations


class EnumerationBudgetError(StatMechError, ValueError):
    pass


class InfeasibleError(StatMechError, ValueError):
    pass
