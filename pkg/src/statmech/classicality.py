"""Thermal-wavelength diagnostics for the classical (dilute) regime.

The wavelength used here is ``h / sqrt(3 m k T)``, i.e. Planck's constant
over the equipartition RMS momentum.  The more common ``h / sqrt(2 pi m k T)``
is available as ``form="debroglie"`` but is never the default.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import REDUCED, Constants
from .exceptions import InvalidArgumentError

DEFAULT_THRESHOLD = 0.1

WAVELENGTH_FORMS = ("rms", "debroglie")


def _require_positive(**values):
    for name, v in values.items():
        if not (v > 0 and math.isfinite(v)):
            raise InvalidArgumentError(f"{name} must be positive and finite, got {v!r}")


def rms_momentum(temperature: float, mass: float, boltzmann_k: float = 1.0) -> float:
    """Equipartition RMS momentum ``sqrt(3 m k T)``."""
    _require_positive(temperature=temperature, mass=mass, boltzmann_k=boltzmann_k)
    return math.sqrt(3.0 * mass * boltzmann_k * temperature)


def thermal_wavelength(temperature: float, mass: float, planck_h: float = 1.0,
                       boltzmann_k: float = 1.0, form: str = "rms") -> float:
    _require_positive(planck_h=planck_h)
    if form == "rms":
        return planck_h / rms_momentum(temperature, mass, boltzmann_k)
    if form == "debroglie":
        _require_positive(temperature=temperature, mass=mass, boltzmann_k=boltzmann_k)
        return planck_h / math.sqrt(2.0 * math.pi * mass * boltzmann_k * temperature)
    raise InvalidArgumentError(f"form must be one of {WAVELENGTH_FORMS}, got {form!r}")


def interparticle_spacing(volume: float, n: float) -> float:
    """Mean spacing ``(V/N)^(1/3)``."""
    _require_positive(volume=volume, n=n)
    return (volume / n) ** (1.0 / 3.0)


@dataclass(frozen=True)
class ClassicalityReport:
    thermal_wavelength: float
    spacing: float
    wavelength_ratio: float
    fermi_energy: float
    thermal_ratio: float
    classical: bool
    threshold: float
    # kT/E_F criterion at the matching strength (threshold**-2); reported, not enforced
    energy_criterion: bool


def classical_regime(temperature: float, volume: float, n: float, mass: float | None = None,
                     constants: Constants = REDUCED,
                     threshold: float = DEFAULT_THRESHOLD) -> ClassicalityReport:
    """Compare the thermal wavelength with the interparticle spacing.

    ``classical`` is ``lambda_th / d < threshold``.  The same configuration is
    also judged by ``kT / E_F > threshold**-2``; the two ratios satisfy
    ``thermal_ratio * wavelength_ratio**2 == 1/3`` so the flags agree only up
    to that order-unity factor.
    """
    from .chempot import fermi_energy

    if mass is None:
        mass = constants.mass
    if mass is None:
        raise InvalidArgumentError("a particle mass is required (SI constants carry none)")
    _require_positive(threshold=threshold)
    h, k = constants.planck_h, constants.boltzmann_k
    lam = thermal_wavelength(temperature, mass, h, k)
    d = interparticle_spacing(volume, n)
    e_f = fermi_energy(n, volume, mass, h)
    ratio = lam / d
    thermal_ratio = k * temperature / e_f
    return ClassicalityReport(
        thermal_wavelength=lam,
        spacing=d,
        wavelength_ratio=ratio,
        fermi_energy=e_f,
        thermal_ratio=thermal_ratio,
        classical=ratio < threshold,
        threshold=threshold,
        energy_criterion=thermal_ratio > threshold**-2,
    )
