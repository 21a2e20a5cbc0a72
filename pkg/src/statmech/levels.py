"""Discrete energy spectra and thermodynamic state descriptors.

A spectrum is an ascending list of distinct energies, each with an integer
degeneracy.  Equal energies supplied by the caller are merged by summing their
degeneracies, so downstream code can rely on strict ordering.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable

import numpy as np

from .exceptions import InvalidArgumentError, SpectrumParseError

UNIT_MODES = ("reduced", "SI")


@dataclass(frozen=True)
class EnergySpectrum:
    energies: tuple[float, ...]
    degeneracies: tuple[int, ...]
    unit_mode: str = "reduced"

    def __post_init__(self):
        if len(self.energies) == 0:
            raise InvalidArgumentError("spectrum must contain at least one level")
        if len(self.energies) != len(self.degeneracies):
            raise InvalidArgumentError("energies and degeneracies differ in length")
        if self.unit_mode not in UNIT_MODES:
            raise InvalidArgumentError(f"unit_mode must be one of {UNIT_MODES}, got {self.unit_mode!r}")
        for e in self.energies:
            if not math.isfinite(e):
                raise InvalidArgumentError(f"energy {e!r} is not finite")
        for g in self.degeneracies:
            if int(g) != g or g < 1:
                raise InvalidArgumentError(f"degeneracy {g!r} is not a positive integer")
        for lo, hi in zip(self.energies, self.energies[1:]):
            if not lo < hi:
                raise InvalidArgumentError(
                    "energies must be strictly increasing; use EnergySpectrum.from_levels to sort and merge"
                )

    @classmethod
    def from_levels(cls, levels: Iterable[tuple[float, int]], unit_mode: str = "reduced") -> "EnergySpectrum":
        """Build from (energy, degeneracy) pairs in any order, merging equal energies."""
        merged: dict[float, int] = {}
        for energy, degeneracy in levels:
            energy = float(energy)
            if not math.isfinite(energy):
                raise InvalidArgumentError(f"energy {energy!r} is not finite")
            if int(degeneracy) != degeneracy or degeneracy < 1:
                raise InvalidArgumentError(f"degeneracy {degeneracy!r} is not a positive integer")
            # -0.0 and 0.0 hash equal, so they merge as intended
            merged[energy] = merged.get(energy, 0) + int(degeneracy)
        keys = sorted(merged)
        return cls(tuple(keys), tuple(merged[k] for k in keys), unit_mode)

    @classmethod
    def from_energies(cls, energies: Iterable[float], unit_mode: str = "reduced") -> "EnergySpectrum":
        return cls.from_levels(((e, 1) for e in energies), unit_mode)

    @cached_property
    def energy_array(self) -> np.ndarray:
        arr = np.asarray(self.energies, dtype=float)
        arr.flags.writeable = False
        return arr

    @cached_property
    def degeneracy_array(self) -> np.ndarray:
        arr = np.asarray(self.degeneracies, dtype=float)
        arr.flags.writeable = False
        return arr

    @property
    def levels(self) -> list[tuple[float, int]]:
        return list(zip(self.energies, self.degeneracies))

    @property
    def ground_energy(self) -> float:
        return self.energies[0]

    @property
    def total_degeneracy(self) -> int:
        return sum(self.degeneracies)

    def __len__(self) -> int:
        return len(self.energies)

    def state_energies(self) -> np.ndarray:
        """One entry per single-particle state, i.e. each level repeated by its degeneracy."""
        return np.repeat(self.energy_array, self.degeneracies)

    def state_level_index(self) -> np.ndarray:
        return np.repeat(np.arange(len(self)), self.degeneracies)


@dataclass(frozen=True)
class ThermoState:
    beta: float
    temperature: float
    volume: float
    target_n: int
    boltzmann_k: float = 1.0

    def __post_init__(self):
        if not self.beta > 0 or not math.isfinite(self.beta):
            raise InvalidArgumentError(f"beta must be positive and finite, got {self.beta!r}")
        if not self.volume > 0:
            raise InvalidArgumentError(f"volume must be positive, got {self.volume!r}")
        if int(self.target_n) != self.target_n or self.target_n < 1:
            raise InvalidArgumentError(f"target_n must be an integer >= 1, got {self.target_n!r}")
        product = self.beta * self.boltzmann_k * self.temperature
        if not abs(product - 1.0) <= 1e-12:
            raise InvalidArgumentError(
                f"beta and temperature inconsistent: beta*k*T = {product!r}, expected 1"
            )

    @classmethod
    def from_temperature(cls, temperature: float, volume: float, target_n: int,
                         boltzmann_k: float = 1.0) -> "ThermoState":
        if not temperature > 0:
            raise InvalidArgumentError(f"temperature must be positive, got {temperature!r}")
        return cls(1.0 / (boltzmann_k * temperature), temperature, volume, target_n, boltzmann_k)

    @classmethod
    def from_beta(cls, beta: float, volume: float, target_n: int,
                  boltzmann_k: float = 1.0) -> "ThermoState":
        if not beta > 0:
            raise InvalidArgumentError(f"beta must be positive, got {beta!r}")
        return cls(beta, 1.0 / (boltzmann_k * beta), volume, target_n, boltzmann_k)


def make_uniform(epsilon0: float, spacing: float, count: int, unit_mode: str = "reduced") -> EnergySpectrum:
    """Evenly spaced non-degenerate levels ``epsilon0 + i*spacing``, ``i < count``."""
    if not (isinstance(count, (int, np.integer)) and count >= 1):
        raise InvalidArgumentError(f"count must be a positive integer, got {count!r}")
    if not spacing > 0 or not math.isfinite(spacing):
        raise InvalidArgumentError(f"spacing must be positive, got {spacing!r}")
    energies = tuple(float(epsilon0 + i * spacing) for i in range(count))
    return EnergySpectrum(energies, (1,) * count, unit_mode)


def load_spectrum(path, unit_mode: str = "reduced") -> EnergySpectrum:
    """Read an ``energy,degeneracy`` CSV file.

    Lines starting with ``#`` and blank lines are skipped.  The first
    non-comment line must be the header.  Rows are sorted and equal energies
    merged; any malformed row raises :class:`SpectrumParseError` naming the
    line number.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise SpectrumParseError("file not found", path) from None
    except (OSError, UnicodeDecodeError) as exc:
        raise SpectrumParseError(f"cannot read file ({exc})", path) from None

    header_seen = False
    levels = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = [f.strip() for f in next(csv.reader([stripped]))]
        if not header_seen:
            if [f.lower() for f in fields] != ["energy", "degeneracy"]:
                raise SpectrumParseError(
                    f"expected header 'energy,degeneracy', got {stripped!r}", path, lineno
                )
            header_seen = True
            continue
        if len(fields) != 2:
            raise SpectrumParseError(f"expected 2 fields, got {len(fields)}", path, lineno)
        try:
            energy = float(fields[0])
        except ValueError:
            raise SpectrumParseError(f"energy {fields[0]!r} is not a number", path, lineno) from None
        if not math.isfinite(energy):
            raise SpectrumParseError(f"energy {fields[0]!r} is not finite", path, lineno)
        try:
            degeneracy = int(fields[1])
        except ValueError:
            raise SpectrumParseError(
                f"degeneracy {fields[1]!r} is not an integer", path, lineno
            ) from None
        if degeneracy < 1:
            raise SpectrumParseError(f"degeneracy must be positive, got {degeneracy}", path, lineno)
        levels.append((energy, degeneracy))

    if not header_seen:
        raise SpectrumParseError("missing header 'energy,degeneracy'", path)
    if not levels:
        raise SpectrumParseError("no levels found", path)
    return EnergySpectrum.from_levels(levels, unit_mode)


def save_spectrum(spectrum: EnergySpectrum, path) -> None:
    """Write ``spectrum`` in the format read by :func:`load_spectrum` (lossless)."""
    lines = ["energy,degeneracy"]
    lines += [f"{e!r},{g}" for e, g in spectrum.levels]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
