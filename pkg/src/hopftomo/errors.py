"""Exception types shared across the toolkit."""


class HopftomoError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(HopftomoError):
    """Invalid configuration or usage (CLI exit code 1)."""


class OutOfModelError(HopftomoError):
    """Coefficients outside the model's validity range (e.g. no quartic confinement)."""


class DivergenceError(HopftomoError):
    """A stochastic trajectory left the trusted amplitude range."""

    def __init__(self, step: int, amplitude: float):
        self.step = step
        self.amplitude = amplitude
        super().__init__(
            f"trajectory diverged at step {step} (|A| = {amplitude:.3e})"
        )


class NumericalError(HopftomoError):
    """Internal numerical cross-check failed (CLI exit code 2)."""


class DataFormatError(HopftomoError):
    """Malformed input data file (CLI exit code 3)."""
