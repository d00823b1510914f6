"""Exception types shared by the library and the command line.

Each class carries the process exit code the CLI reports for it.
"""


class HypothesisError(ValueError):
    """A mathematical hypothesis of a construction does not hold."""
    exit_code = 3


class DegenerateApproximantError(ValueError):
    """The Rodrigues polynomial P(z) vanishes identically."""
    exit_code = 2


class PrecisionError(ValueError):
    """A truncated series was asked for a coefficient it does not know."""
    exit_code = 4


class VerificationError(RuntimeError):
    """A computed object failed a check that the theory guarantees."""
    exit_code = 1


class ConfigError(ValueError):
    exit_code = 5
