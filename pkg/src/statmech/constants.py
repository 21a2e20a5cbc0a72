"""Physical constant sets.

Reduced units put h = c = k = 1 (and a unit particle mass); SI uses the 2019
exact definitions.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

UNIT_ENV_VAR = "STATMECH_UNITS"

ELECTRON_MASS_KG = 9.1093837015e-31


@dataclass(frozen=True)
class Constants:
    planck_h: float
    speed_of_light: float
    boltzmann_k: float
    mass: float | None = None
    unit_mode: str = "reduced"

    def __post_init__(self):
        for name in ("planck_h", "speed_of_light", "boltzmann_k"):
            value = getattr(self, name)
            if not value > 0:
                raise ValueError(f"{name} must be positive, got {value!r}")
        if self.mass is not None and not self.mass > 0:
            raise ValueError(f"mass must be positive, got {self.mass!r}")
        if self.unit_mode not in ("reduced", "SI"):
            raise ValueError(f"unit_mode must be 'reduced' or 'SI', got {self.unit_mode!r}")

    def with_overrides(self, **kwargs) -> "Constants":
        kwargs = {k: v for k, v in kwargs.items() if v is not None}
        return replace(self, **kwargs)


REDUCED = Constants(planck_h=1.0, speed_of_light=1.0, boltzmann_k=1.0, mass=1.0, unit_mode="reduced")

SI = Constants(
    planck_h=6.62607015e-34,
    speed_of_light=2.99792458e8,
    boltzmann_k=1.380649e-23,
    mass=None,
    unit_mode="SI",
)


def get_constants(unit_mode: str | None = None) -> Constants:
    """Constant set for ``unit_mode``; falls back to ``$STATMECH_UNITS`` then reduced."""
    if unit_mode is None:
        unit_mode = os.environ.get(UNIT_ENV_VAR, "reduced")
    if unit_mode.lower() == "si":
        return SI
    if unit_mode.lower() == "reduced":
        return REDUCED
    raise ValueError(f"unknown unit mode {unit_mode!r}; expected 'reduced' or 'SI'")
