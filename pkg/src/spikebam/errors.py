"""Exception hierarchy shared across the package.

The CLI maps these onto distinct exit codes, so library code should raise
the most specific class that applies.
"""


class SpikebamError(Exception):
    """Base class for all package errors."""


class ConfigurationError(SpikebamError):
    """Inconsistent shapes, invalid hyperparameters, or malformed configs."""


class UsageError(SpikebamError):
    """An API called out of order or with missing saved state."""


class DataError(SpikebamError):
    """Corrupt, truncated, or inconsistent dataset files."""


class NumericError(SpikebamError):
    """Non-finite values encountered where finite math is required."""
