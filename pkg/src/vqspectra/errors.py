"""Exception types that the CLI maps onto exit codes."""


class ConfigError(ValueError):
    """Invalid experiment configuration (exit code 2)."""


class FixtureError(ValueError):
    """Missing or malformed Hamiltonian fixture (exit code 3)."""


class NumericalAbortError(RuntimeError):
    """Non-finite value encountered during optimization (exit code 4)."""
