"""Exception types shared across the package.

Plain ``ValueError`` is used for bad arguments to pure functions; the classes
here mark failures the run harness maps to distinct exit codes.
"""


class SimulationError(Exception):
    """Base class for run-level failures."""


class ConfigurationError(SimulationError):
    """Invalid or inconsistent configuration (exit code 2)."""


class GuardViolation(SimulationError):
    """A solver guard was violated; the message names the guard (exit code 3)."""


class NumericalFailure(SimulationError):
    """Numerical breakdown: NaN/overflow, integrator or fit failure (exit code 4)."""
