"""Planck spectral density and its two classical limits.

All three functions accept scalars or arrays for ``epsilon``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import SI, Constants
from .exceptions import InvalidArgumentError

# below this x = eps/kT the two-term series replaces 1/expm1(x)
SMALL_X = 1e-8


@dataclass(frozen=True)
class SpectralPoint:
    photon_energy: float | np.ndarray
    temperature: float
    density: float | np.ndarray


def _validate(epsilon, temperature):
    eps = np.asarray(epsilon, dtype=float)
    if np.any(~(eps > 0)) or np.any(~np.isfinite(eps)):
        raise InvalidArgumentError("photon energy must be positive and finite")
    if not (temperature > 0 and np.isfinite(temperature)):
        raise InvalidArgumentError(f"temperature must be positive and finite, got {temperature!r}")
    return eps


def _wrap(eps, temperature, density, like):
    if np.ndim(like) == 0:
        return SpectralPoint(float(eps), float(temperature), float(density))
    return SpectralPoint(eps, float(temperature), density)


def bose_factor(x):
    """``1/(exp(x) - 1)`` for ``x > 0`` without cancellation at small ``x``."""
    x = np.asarray(x, dtype=float)
    out = np.empty_like(x)
    small = x < SMALL_X
    out[small] = 1.0 / x[small] - 0.5
    xl = x[~small]
    out[~small] = np.exp(-xl) / -np.expm1(-xl)
    return out if out.ndim else out[()]


def _prefactor(eps, constants):
    hc = constants.planck_h * constants.speed_of_light
    return 2.0 * eps**2 / hc**2


def planck(epsilon, temperature: float, constants: Constants = SI) -> SpectralPoint:
    eps = _validate(epsilon, temperature)
    kT = constants.boltzmann_k * temperature
    density = _prefactor(eps, constants) * eps * bose_factor(eps / kT)
    return _wrap(eps, temperature, density, epsilon)


def rayleigh_jeans(epsilon, temperature: float, constants: Constants = SI) -> SpectralPoint:
    eps = _validate(epsilon, temperature)
    kT = constants.boltzmann_k * temperature
    return _wrap(eps, temperature, _prefactor(eps, constants) * kT, epsilon)


def wien_mb_form(epsilon, temperature: float, constants: Constants = SI) -> SpectralPoint:
    """High-energy approximant ``2 eps^3/(hc)^2 exp(-eps/kT)``."""
    eps = _validate(epsilon, temperature)
    kT = constants.boltzmann_k * temperature
    density = _prefactor(eps, constants) * eps * np.exp(-eps / kT)
    return _wrap(eps, temperature, density, epsilon)
