"""Effective amplitude-flow coefficients and Hopf-threshold geometry.

The slow complex amplitude A of the mirror oscillation obeys

    dA/dt + (Gamma_eff + i*Omega_eff) A = xi(t),

with Gamma_eff = Gamma0 + Gamma2*|A|^2 and Omega_eff = Omega0 + Omega2*|A|^2.
This module computes the five coefficients (including the white-noise
strength Theta) from device parameters and an operating point, locates the
self-oscillation threshold where Gamma0 changes sign, and converts between
SI and reduced (dimensionless) coefficient sets.

Reduced units: amplitudes in wavelengths, time in units of 1/gamma0.  The
reduced set is the canonical representation for simulation and fitting;
SI enters only at the detector boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .cavity import (
    BOLTZMANN_KB,
    CavityOptics,
    DeviceParams,
    OperatingPoint,
    intensity_derivatives,
)
from .errors import ConfigError

SUPERCRITICAL = "supercritical"
OUT_OF_MODEL = "subcritical-or-out-of-model"


def _nu(gamma_lin: float, gamma_quad: float, noise: float) -> float:
    if gamma_quad <= 0.0 or noise <= 0.0:
        return math.nan
    return gamma_lin / math.sqrt(4.0 * gamma_quad * noise)


def _delta0_sq(gamma_lin: float, noise: float) -> float:
    # signed: negative above threshold, +/- inf exactly at it
    if gamma_lin == 0.0:
        return math.inf
    return 2.0 * noise / gamma_lin


def _r0(gamma_lin: float, gamma_quad: float) -> Optional[float]:
    if gamma_lin < 0.0 and gamma_quad > 0.0:
        return math.sqrt(-gamma_lin / gamma_quad)
    return None


@dataclass(frozen=True)
class FlowCoeffs:
    """Amplitude-flow coefficients in SI units."""

    Gamma0: float   # linear effective damping (1/s)
    Gamma2: float   # quadratic effective damping (1/(m^2 s))
    Omega0: float   # linear effective frequency (rad/s)
    Omega2: float   # quadratic frequency pulling (rad/(m^2 s))
    Theta: float    # white-noise strength (m^2/s)

    @property
    def nu(self) -> float:
        """Distance from threshold in noise units; sign follows Gamma0."""
        return _nu(self.Gamma0, self.Gamma2, self.Theta)

    @property
    def delta0_sq(self) -> float:
        """Signed squared Gaussian width 2*Theta/Gamma0 (m^2)."""
        return _delta0_sq(self.Gamma0, self.Theta)

    @property
    def r0(self) -> Optional[float]:
        """Noise-free limit-cycle radius (m), None below threshold."""
        return _r0(self.Gamma0, self.Gamma2)

    @property
    def in_model(self) -> bool:
        """False when the quartic confinement is absent (Gamma2 <= 0)."""
        return self.Gamma2 > 0.0


@dataclass(frozen=True)
class ReducedCoeffs:
    """Dimensionless flow coefficients: amplitude in wavelengths, time in 1/gamma0.

    g0 = Gamma0/gamma0, g2 = Gamma2*lambda^2/gamma0, th = Theta/(gamma0*lambda^2);
    w0, w2 are the frequency terms in the same reduction (0 when irrelevant).
    """

    g0: float
    g2: float
    th: float
    w0: float = 0.0
    w2: float = 0.0

    def __post_init__(self):
        if self.th < 0.0:
            raise ConfigError("reduced noise strength th must be >= 0")

    @property
    def nu(self) -> float:
        return _nu(self.g0, self.g2, self.th)

    @property
    def delta0_sq(self) -> float:
        return _delta0_sq(self.g0, self.th)

    @property
    def r0(self) -> Optional[float]:
        return _r0(self.g0, self.g2)

    @property
    def in_model(self) -> bool:
        return self.g2 > 0.0


def noise_strength(dev: DeviceParams) -> float:
    """White-noise strength Theta = gamma0 kB T_eff / (4 m omega0^2), in m^2/s."""
    return dev.gamma0 * BOLTZMANN_KB * dev.T_eff / (4.0 * dev.mass * dev.omega0**2)


def reduced_noise_strength(mass: float, omega0: float, T_eff: float,
                           wavelength: float) -> float:
    """Theta/(gamma0 lambda^2) = kB T_eff / (4 m omega0^2 lambda^2), dimensionless."""
    return BOLTZMANN_KB * T_eff / (4.0 * mass * omega0**2 * wavelength**2)


def flow_coefficients(dev: DeviceParams, optics: CavityOptics,
                      op: OperatingPoint) -> FlowCoeffs:
    """All five flow coefficients at an operating point."""
    i0, i0p, i0pp = intensity_derivatives(optics, op.displacement_offset)
    pl = op.laser_power
    gamma_lin = dev.gamma0 + dev.eta * dev.theta * pl * i0p / (2.0 * dev.omega0**2)
    gamma_quad = dev.gamma2 + dev.eta * dev.beta_freq * pl * i0pp / (4.0 * dev.omega0)
    omega_lin = dev.omega0 - dev.eta * dev.beta_freq * pl * i0 / dev.kappa
    omega_quad = -dev.eta * dev.beta_freq * pl * i0pp / dev.kappa
    return FlowCoeffs(
        Gamma0=gamma_lin,
        Gamma2=gamma_quad,
        Omega0=omega_lin,
        Omega2=omega_quad,
        Theta=noise_strength(dev),
    )


def threshold_power(dev: DeviceParams, optics: CavityOptics,
                    x_d: float) -> Optional[float]:
    """Laser power at which the net linear damping vanishes.

    Returns None when optical feedback only adds damping at this
    detuning, i.e. no self-oscillation at any power.
    """
    _, i0p, _ = intensity_derivatives(optics, x_d)
    slope = dev.eta * dev.theta * i0p
    if slope >= 0.0:
        return None
    return -2.0 * dev.gamma0 * dev.omega0**2 / slope


def limit_cycle_radius(c: FlowCoeffs | ReducedCoeffs) -> Optional[float]:
    """Noise-free steady oscillation amplitude, None below threshold."""
    return c.r0


def classify_bifurcation(c: FlowCoeffs | ReducedCoeffs) -> str:
    """Supercritical Hopf requires positive quadratic damping.

    Without it the steady-state distribution is not normalizable and the
    truncated amplitude expansion cannot describe the saturated state.
    """
    return SUPERCRITICAL if c.in_model else OUT_OF_MODEL


def reduce_coeffs(c: FlowCoeffs, gamma0: float, wavelength: float) -> ReducedCoeffs:
    """Convert SI flow coefficients to reduced units."""
    if gamma0 <= 0.0 or wavelength <= 0.0:
        raise ConfigError("gamma0 and wavelength must be > 0")
    lam2 = wavelength**2
    return ReducedCoeffs(
        g0=c.Gamma0 / gamma0,
        g2=c.Gamma2 * lam2 / gamma0,
        th=c.Theta / (gamma0 * lam2),
        w0=c.Omega0 / gamma0,
        w2=c.Omega2 * lam2 / gamma0,
    )


def expand_coeffs(rc: ReducedCoeffs, gamma0: float, wavelength: float) -> FlowCoeffs:
    """Convert reduced flow coefficients back to SI; inverse of reduce_coeffs."""
    if gamma0 <= 0.0 or wavelength <= 0.0:
        raise ConfigError("gamma0 and wavelength must be > 0")
    lam2 = wavelength**2
    return FlowCoeffs(
        Gamma0=rc.g0 * gamma0,
        Gamma2=rc.g2 * gamma0 / lam2,
        Omega0=rc.w0 * gamma0,
        Omega2=rc.w2 * gamma0 / lam2,
        Theta=rc.th * gamma0 * lam2,
    )
