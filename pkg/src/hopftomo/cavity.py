"""Static device physics for a fiber-tip optomechanical cavity.

Everything here is a pure function of immutable parameter sets: the
intracavity intensity enhancement and its displacement derivatives, the
reflection probability seen by the photodetector, the detuning factor used
to label operating points, the optically heated steady-state temperature,
and the thermally induced static displacement of the suspended mirror.

SI units throughout.  Displacements ``x_d`` are measured from the cavity
resonance point (the mirror position of maximum stored optical energy).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError

SQRT8 = math.sqrt(8.0)
BOLTZMANN_KB = 1.380649e-23  # J/K


@dataclass(frozen=True)
class CavityOptics:
    """Mirror/loss parameters of the optical cavity.

    beta_plus / beta_minus are the symmetric/antisymmetric loss
    combinations; finesse sets the peak intensity enhancement.  The
    exact squares are cached so that optics built from transmission
    probabilities reproduce the defining quadratics bit-for-bit.
    """

    beta_plus: float
    beta_minus: float
    finesse: float
    wavelength: float           # optical wavelength (m)
    beta_plus_sq: float = field(default=0.0, repr=False)
    beta_minus_sq: float = field(default=0.0, repr=False)

    def __post_init__(self):
        if self.beta_plus <= 0.0:
            raise ConfigError("beta_plus must be > 0")
        if self.beta_minus < 0.0:
            raise ConfigError("beta_minus must be >= 0")
        if self.finesse <= 0.0:
            raise ConfigError("finesse must be > 0")
        if self.wavelength <= 0.0:
            raise ConfigError("wavelength must be > 0")
        if self.beta_plus_sq == 0.0:
            object.__setattr__(self, "beta_plus_sq", self.beta_plus**2)
        if self.beta_minus_sq == 0.0 and self.beta_minus != 0.0:
            object.__setattr__(self, "beta_minus_sq", self.beta_minus**2)
        if self.beta_plus_sq < self.beta_minus_sq:
            raise ConfigError("beta_plus^2 must be >= beta_minus^2")

    @classmethod
    def from_transmissions(cls, t_back: float, t_absorb: float, t_rad: float,
                           finesse: float, wavelength: float) -> "CavityOptics":
        """Build optics from the three power-escape probabilities.

        t_back: through the static reflector; t_absorb: absorption in the
        metallic mirror; t_rad: radiation loss.  Each must lie in [0, 1].
        """
        for name, t in (("t_back", t_back), ("t_absorb", t_absorb), ("t_rad", t_rad)):
            if not 0.0 <= t <= 1.0:
                raise ConfigError(f"{name} must be in [0, 1], got {t}")
        bp_sq = (t_back + t_absorb + t_rad) ** 2 / 8.0
        bm_sq = (t_back - t_absorb - t_rad) ** 2 / 8.0
        return cls(
            beta_plus=math.sqrt(bp_sq),
            beta_minus=math.sqrt(bm_sq),
            finesse=finesse,
            wavelength=wavelength,
            beta_plus_sq=bp_sq,
            beta_minus_sq=bm_sq,
        )


def finesse_from_fsr(omega_fsr: float, omega_cavity: float, beta_plus: float) -> float:
    """Finesse from free spectral range and cavity resonance frequency.

    Optional convenience; the finesse can always be given directly.
    """
    return omega_fsr / (omega_cavity * beta_plus)


@dataclass(frozen=True)
class DeviceParams:
    """Mechanical and thermal parameters of the suspended mirror."""

    mass: float          # kg
    omega0: float        # intrinsic angular resonance frequency (rad/s)
    gamma0: float        # linear amplitude damping rate (1/s)
    gamma2: float        # nonlinear quadratic damping rate (1/(m^2 s))
    kappa: float         # thermal relaxation rate (1/s)
    eta: float           # heating coefficient per absorbed watt (K/(W s))
    theta: float         # thermal force per unit mass per kelvin (m s^-2 K^-1)
    beta_freq: float     # frequency shift per kelvin (rad s^-1 K^-1)
    T0: float            # substrate base temperature (K)
    T_eff: float         # effective noise temperature (K)

    def __post_init__(self):
        for name in ("mass", "omega0", "gamma0", "kappa", "T0", "T_eff"):
            if getattr(self, name) <= 0.0:
                raise ConfigError(f"{name} must be > 0")
        if self.gamma2 < 0.0:
            raise ConfigError("gamma2 must be >= 0")


@dataclass(frozen=True)
class OperatingPoint:
    """Laser drive and static mirror offset from resonance."""

    laser_power: float          # injected laser power (W)
    displacement_offset: float  # static x_d relative to resonance (m)

    def __post_init__(self):
        if self.laser_power < 0.0:
            raise ConfigError("laser_power must be >= 0")


def intracavity_intensity(optics: CavityOptics, x_d):
    """Intensity enhancement I(x_d) of the optical field on the mirror.

    Periodic in x_d with period wavelength/2, maximal at resonance
    (x_d = 0).  Accepts scalars or arrays.
    """
    contrast = 1.0 - optics.beta_minus_sq / optics.beta_plus_sq
    num = optics.finesse * contrast * optics.beta_plus_sq
    den = 1.0 - np.cos(4.0 * np.pi * np.asarray(x_d) / optics.wavelength) + optics.beta_plus_sq
    out = num / den
    return float(out) if np.isscalar(x_d) else out


def reflection_probability(optics: CavityOptics, x_d):
    """Fraction of injected power reflected back into the fiber."""
    return 1.0 - intracavity_intensity(optics, x_d) / optics.finesse


def intensity_derivatives(optics: CavityOptics, x_d: float) -> tuple[float, float, float]:
    """Value, slope and curvature of I at x_d, by closed-form differentiation.

    Returns (I0, I0', I0'') with units (1, 1/m, 1/m^2).
    """
    contrast = 1.0 - optics.beta_minus_sq / optics.beta_plus_sq
    num = optics.finesse * contrast * optics.beta_plus_sq
    u = 4.0 * math.pi / optics.wavelength
    c = math.cos(u * x_d)
    s = math.sin(u * x_d)
    den = 1.0 - c + optics.beta_plus_sq
    i0 = num / den
    i0p = -num * u * s / den**2
    i0pp = -num * u * u * (c * den - 2.0 * s * s) / den**3
    return i0, i0p, i0pp


def detuning_factor(optics: CavityOptics, x_d) -> float:
    """Dimensionless detuning 4*pi*x_d/(wavelength*beta_plus).

    Positive values correspond to red detuning.
    """
    return 4.0 * np.pi * x_d / (optics.wavelength * optics.beta_plus)


def displacement_for_detuning(optics: CavityOptics, s_d) -> float:
    """Inverse of detuning_factor: the x_d realizing a given detuning."""
    return s_d * optics.wavelength * optics.beta_plus / (4.0 * np.pi)


def displacement_from_wavelength(lambda_laser: float, lambda_res: float,
                                 effective_length: float) -> float:
    """Map a laser-wavelength offset to an effective mirror displacement.

    For swept-wavelength operation the cavity sees the laser move rather
    than the mirror; x_d = L_eff * (lambda - lambda_res) / lambda_res with
    L_eff a configurable effective optical length (the geometric cavity
    length is not guaranteed to reproduce measured detunings, so the scale
    is left to the user).
    """
    return effective_length * (lambda_laser - lambda_res) / lambda_res


def thermal_steady_temperature(dev: DeviceParams, optics: CavityOptics,
                               op: OperatingPoint) -> float:
    """Mirror temperature once optical heating balances thermal relaxation."""
    i0 = intracavity_intensity(optics, op.displacement_offset)
    return dev.T0 + dev.eta * op.laser_power * i0 / dev.kappa


def static_displacement(dev: DeviceParams, optics: CavityOptics,
                        op: OperatingPoint) -> float:
    """Optically induced static displacement of the mirror (m)."""
    i0 = intracavity_intensity(optics, op.displacement_offset)
    return dev.eta * dev.theta * op.laser_power * i0 / (dev.kappa * dev.omega0**2)


def mechanical_frequency(dev: DeviceParams, temperature: float) -> float:
    """Temperature-shifted mechanical resonance frequency (rad/s)."""
    return dev.omega0 - dev.beta_freq * (temperature - dev.T0)


def thermal_force_per_mass(dev: DeviceParams, temperature: float) -> float:
    """Thermal-deformation force per unit mass at the given temperature."""
    return dev.theta * (temperature - dev.T0)


@dataclass(frozen=True)
class AssumptionReport:
    """Numerical check of the small-signal regime behind the amplitude flow.

    Each ratio is (left side)/(right side) of one smallness condition;
    a condition "passes" when its ratio is below the threshold.  Ratios
    are reported so users can apply their own judgment of "much less".
    """

    ratio_static_pull: float    # beta * x0 vs theta / (2 omega0)
    ratio_thermal_lag: float    # theta * kappa^2 vs beta * omega0^3 * lambda
    ratio_adiabatic: float      # kappa vs omega0
    threshold: float
    degenerate: bool
    note: str = ""

    @property
    def static_pull_ok(self) -> bool:
        return self.ratio_static_pull < self.threshold

    @property
    def thermal_lag_ok(self) -> bool:
        return self.ratio_thermal_lag < self.threshold

    @property
    def adiabatic_ok(self) -> bool:
        return self.ratio_adiabatic < self.threshold

    @property
    def all_ok(self) -> bool:
        return self.static_pull_ok and self.thermal_lag_ok and self.adiabatic_ok


def check_small_signal_assumptions(dev: DeviceParams, optics: CavityOptics,
                                   op: OperatingPoint,
                                   threshold: float = 0.1) -> AssumptionReport:
    """Evaluate the three smallness conditions at an operating point.

    threshold is the proxy for "much less than"; 0.1 by default.
    """
    degenerate = False
    note = ""

    if dev.theta == 0.0:
        # no thermal force: static pull vanishes identically
        ratio1 = 0.0
        degenerate = True
        note = "theta = 0: static-pull and thermal-lag conditions are degenerate"
    else:
        x0 = static_displacement(dev, optics, op)
        ratio1 = 2.0 * dev.beta_freq * dev.omega0 * x0 / dev.theta

    if dev.theta == 0.0:
        ratio2 = 0.0
    elif dev.beta_freq == 0.0:
        ratio2 = math.inf
        degenerate = True
        note = (note + "; " if note else "") + \
            "beta_freq = 0: thermal-lag condition has no finite bound"
    else:
        ratio2 = dev.theta * dev.kappa**2 / (dev.beta_freq * dev.omega0**3 * optics.wavelength)

    ratio3 = dev.kappa / dev.omega0

    return AssumptionReport(
        ratio_static_pull=ratio1,
        ratio_thermal_lag=ratio2,
        ratio_adiabatic=ratio3,
        threshold=threshold,
        degenerate=degenerate,
        note=note,
    )
