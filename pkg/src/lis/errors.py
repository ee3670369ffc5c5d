"""Exception hierarchy shared across the package.

The CLI maps exceptions to stable exit codes: 0 success, 1 verification
failure, 2 usage or configuration error, 3 data or domain error.
"""


class LisError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class UsageError(LisError):
    """Bad arguments, malformed configuration, or misuse of an operation."""

    exit_code = 2


class ParseError(UsageError):
    """Malformed input file; carries a 1-based line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DataError(LisError):
    """Measurement values that violate domain constraints (e.g. non-positive)."""

    exit_code = 3


class BenchEnvironmentError(LisError):
    """The host cannot support a trustworthy measurement (e.g. broken clock)."""

    exit_code = 3


class VerificationError(LisError):
    """Computed results do not match the expected classification table."""

    exit_code = 1
