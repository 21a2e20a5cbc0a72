"""Partition functions and mean occupation numbers for MB, BE and FD statistics.

Everything that can overflow is carried in log space.  Occupancies are
evaluated through ``expm1``/``logaddexp`` forms so that small reduced energies
``x = beta*(eps - mu)`` do not cancel.

``brute_force_grand`` sums the grand partition function tuple by tuple and
is kept deliberately separate from the closed forms so it can act as their
oracle.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np
from scipy.special import expit, gammaln, logsumexp

from .exceptions import (
    DomainError,
    EnumerationBudgetError,
    InvalidArgumentError,
    UnsupportedStatisticsError,
)
from .levels import EnergySpectrum

DEFAULT_ENUMERATION_BUDGET = 10**7
DEFAULT_FD_DELTA = 1e-4

# inner block size for brute-force enumeration; bounds peak memory
_BLOCK_SIZE = 1 << 20


class Statistics(str, Enum):
    MB = "MB"
    BE = "BE"
    FD = "FD"

    @classmethod
    def parse(cls, value) -> "Statistics":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).upper())
        except ValueError:
            raise InvalidArgumentError(
                f"unknown statistics {value!r}; expected one of MB, BE, FD"
            ) from None


class PartitionFunction(NamedTuple):
    value: float
    log_value: float


@dataclass(frozen=True)
class OccupationProfile:
    """Mean occupancies per level (degeneracy included) with their totals."""

    energies: np.ndarray
    degeneracies: np.ndarray
    occupancy: np.ndarray
    total_n: float
    internal_energy: float
    statistics: Statistics
    beta: float
    mu: float | None = None

    @property
    def per_state_occupancy(self) -> np.ndarray:
        return self.occupancy / self.degeneracies

    @property
    def per_level(self) -> list[tuple[float, int, float]]:
        return [
            (float(e), int(g), float(n))
            for e, g, n in zip(self.energies, self.degeneracies, self.occupancy)
        ]


def _check_beta(beta):
    if not (beta > 0 and math.isfinite(beta)):
        raise InvalidArgumentError(f"beta must be positive and finite, got {beta!r}")


def _profile(spectrum, occupancy, stats, beta, mu=None):
    e = spectrum.energy_array
    occupancy = np.asarray(occupancy, dtype=float)
    return OccupationProfile(
        energies=np.array(e, dtype=float),
        degeneracies=np.array(spectrum.degeneracy_array),
        occupancy=occupancy,
        total_n=math.fsum(occupancy),
        internal_energy=math.fsum(occupancy * e),
        statistics=stats,
        beta=float(beta),
        mu=None if mu is None else float(mu),
    )


# -- per-state kernels -------------------------------------------------------

def bose_occupancy(x):
    """``1/(exp(x) - 1)`` for ``x > 0``, written to avoid overflow and cancellation."""
    x = np.asarray(x, dtype=float)
    return np.exp(-x) / -np.expm1(-x)


def fermi_occupancy(x):
    """``1/(exp(x) + 1)``."""
    return expit(-np.asarray(x, dtype=float))


def mean_occupancy(x, stats) -> np.ndarray:
    """Per-state mean occupancy as a function of ``x = beta*(eps - mu)``.

    For MB this is the dilute form ``exp(-x)``.
    """
    stats = Statistics.parse(stats)
    if stats is Statistics.BE:
        x = np.asarray(x, dtype=float)
        if np.any(x <= 0):
            raise DomainError("chemical potential at or above ground state")
        return bose_occupancy(x)
    if stats is Statistics.FD:
        return fermi_occupancy(x)
    return np.exp(-np.asarray(x, dtype=float))


def _grand_log_terms(x, stats):
    # per-state ln of the single-mode grand partition factor
    if stats is Statistics.BE:
        return -np.log(-np.expm1(-x))
    return np.logaddexp(0.0, -x)


# -- single-particle and canonical quantities --------------------------------

def _log_zeta(energies, degeneracies, beta):
    return float(logsumexp(-beta * np.asarray(energies), b=degeneracies))


def single_partition(spectrum: EnergySpectrum, beta: float) -> PartitionFunction:
    """Single-particle partition function ``sum_r g_r exp(-beta eps_r)`` and its log."""
    _check_beta(beta)
    log_z = _log_zeta(spectrum.energy_array, spectrum.degeneracy_array, beta)
    with np.errstate(over="ignore"):
        value = math.exp(log_z) if log_z < 709.0 else math.inf
    return PartitionFunction(value, log_z)


def single_state_probability(spectrum: EnergySpectrum, beta: float, level_index: int) -> float:
    """Probability that one particle occupies level ``level_index`` (all its states)."""
    _check_beta(beta)
    if not (isinstance(level_index, (int, np.integer)) and 0 <= level_index < len(spectrum)):
        raise IndexError(f"level_index {level_index!r} out of range for {len(spectrum)} levels")
    log_z = _log_zeta(spectrum.energy_array, spectrum.degeneracy_array, beta)
    e = spectrum.energies[level_index]
    g = spectrum.degeneracies[level_index]
    return math.exp(math.log(g) - beta * e - log_z)


def canonical_log_partition(spectrum: EnergySpectrum, beta: float, n: int) -> float:
    """``ln Z(N) = N ln zeta`` for N independent, labelled particles."""
    _check_beta(beta)
    if not n >= 1:
        raise InvalidArgumentError(f"n must be >= 1, got {n!r}")
    return n * _log_zeta(spectrum.energy_array, spectrum.degeneracy_array, beta)


def occupancy_mb(spectrum: EnergySpectrum, beta: float, n) -> OccupationProfile:
    _check_beta(beta)
    if not n > 0:
        raise InvalidArgumentError(f"n must be positive, got {n!r}")
    logw = np.log(spectrum.degeneracy_array) - beta * spectrum.energy_array
    occ = n * np.exp(logw - logsumexp(logw))
    return _profile(spectrum, occ, Statistics.MB, beta)


# -- grand canonical closed forms --------------------------------------------

def _reduced_energies(spectrum, beta, mu, stats):
    _check_beta(beta)
    if not math.isfinite(mu):
        raise InvalidArgumentError(f"mu must be finite, got {mu!r}")
    if stats is Statistics.BE and not mu < spectrum.ground_energy:
        raise DomainError(
            f"chemical potential at or above ground state (mu={mu!r}, eps_min={spectrum.ground_energy!r})"
        )
    return beta * (spectrum.energy_array - mu)


def occupancy_be(spectrum: EnergySpectrum, beta: float, mu: float) -> OccupationProfile:
    x = _reduced_energies(spectrum, beta, mu, Statistics.BE)
    occ = spectrum.degeneracy_array * bose_occupancy(x)
    return _profile(spectrum, occ, Statistics.BE, beta, mu)


def occupancy_fd(spectrum: EnergySpectrum, beta: float, mu: float) -> OccupationProfile:
    x = _reduced_energies(spectrum, beta, mu, Statistics.FD)
    occ = spectrum.degeneracy_array * fermi_occupancy(x)
    return _profile(spectrum, occ, Statistics.FD, beta, mu)


def occupancy(spectrum: EnergySpectrum, beta: float, mu: float, stats) -> OccupationProfile:
    """Dispatch to the BE or FD closed form; MB at fixed ``mu`` uses ``exp(-x)``."""
    stats = Statistics.parse(stats)
    if stats is Statistics.BE:
        return occupancy_be(spectrum, beta, mu)
    if stats is Statistics.FD:
        return occupancy_fd(spectrum, beta, mu)
    x = _reduced_energies(spectrum, beta, mu, stats)
    return _profile(spectrum, spectrum.degeneracy_array * np.exp(-x), stats, beta, mu)


def grand_log_partition(spectrum: EnergySpectrum, beta: float, mu: float, stats) -> float:
    """``ln Z_grand``: ``-sum g ln(1 - e^-x)`` for BE, ``sum g ln(1 + e^-x)`` for FD."""
    stats = Statistics.parse(stats)
    if stats is Statistics.MB:
        raise UnsupportedStatisticsError(
            "grand_log_partition covers BE and FD only; use canonical_log_partition for MB"
        )
    x = _reduced_energies(spectrum, beta, mu, stats)
    return math.fsum(spectrum.degeneracy_array * _grand_log_terms(x, stats))


def total_number(spectrum: EnergySpectrum, beta: float, mu: float, stats) -> float:
    return occupancy(spectrum, beta, mu, stats).total_n


def number_derivative(spectrum: EnergySpectrum, beta: float, mu: float, stats) -> float:
    """``dN/dmu`` in closed form: ``beta * sum g n(1 +- n)``."""
    stats = Statistics.parse(stats)
    x = _reduced_energies(spectrum, beta, mu, stats)
    n = mean_occupancy(x, stats)
    if stats is Statistics.BE:
        var = n * (1.0 + n)
    elif stats is Statistics.FD:
        var = n * (1.0 - n)
    else:
        var = n
    return beta * math.fsum(spectrum.degeneracy_array * var)


# -- finite-difference cross-check -------------------------------------------

def occupancy_via_derivative(spectrum: EnergySpectrum, beta: float, mu_or_n, stats,
                             delta: float = DEFAULT_FD_DELTA) -> OccupationProfile:
    """Occupancies from ``-(1/beta) d lnZ / d eps_r`` by central differences.

    For MB ``mu_or_n`` is the particle number and Z the canonical ``zeta**N``;
    for BE/FD it is the chemical potential and Z the grand partition function.
    """
    stats = Statistics.parse(stats)
    _check_beta(beta)
    if not delta > 0:
        raise InvalidArgumentError(f"delta must be positive, got {delta!r}")
    e = spectrum.energy_array
    g = spectrum.degeneracy_array

    if stats is Statistics.MB:
        n = mu_or_n
        if not n > 0:
            raise InvalidArgumentError(f"n must be positive, got {n!r}")

        def log_z(energies):
            return n * _log_zeta(energies, g, beta)
        mu = None
    else:
        mu = float(mu_or_n)
        if stats is Statistics.BE and not mu < e[0] - delta:
            raise DomainError("chemical potential at or above ground state (after perturbation by delta)")

        def log_z(energies):
            return math.fsum(g * _grand_log_terms(beta * (energies - mu), stats))

    occ = np.empty(len(e))
    for r in range(len(e)):
        up = e.copy()
        down = e.copy()
        up[r] += delta
        down[r] -= delta
        occ[r] = -(log_z(up) - log_z(down)) / (2.0 * delta * beta)
    return _profile(spectrum, occ, stats, beta, mu)


# -- brute-force oracle ------------------------------------------------------

def brute_force_grand(spectrum: EnergySpectrum, beta: float, mu: float, stats,
                      n_cap: int = 80,
                      budget: int = DEFAULT_ENUMERATION_BUDGET) -> tuple[float, OccupationProfile]:
    """Grand partition function by explicit summation over occupancy tuples.

    Every degenerate level is split into its individual states and each state
    takes occupancies ``0..n_cap`` (FD: ``0..1``).  The weight of a tuple is
    ``prod_s exp(-beta n_s (eps_s - mu))``; for MB each factor is divided by
    ``n_s!`` (corrected Boltzmann counting).  Returns ``(ln Z, profile)``.

    Summation runs in a fixed order, so the result is reproducible bit for bit.
    """
    stats = Statistics.parse(stats)
    _check_beta(beta)
    if not math.isfinite(mu):
        raise InvalidArgumentError(f"mu must be finite, got {mu!r}")
    if stats is Statistics.FD:
        n_cap = 1
    elif not (isinstance(n_cap, (int, np.integer)) and n_cap >= 1):
        raise InvalidArgumentError(f"n_cap must be a positive integer, got {n_cap!r}")

    state_e = spectrum.state_energies()
    level_of = spectrum.state_level_index()
    n_states = len(state_e)
    size = n_cap + 1
    n_tuples = size**n_states
    if n_tuples > budget:
        raise EnumerationBudgetError(
            f"{size}^{n_states} = {n_tuples} occupancy tuples exceeds the enumeration budget of {budget}"
        )

    counts = np.arange(size, dtype=float)
    # per-state log weights, shifted so the largest factor of each state is 1
    logw = [-beta * counts * (es - mu) for es in state_e]
    if stats is Statistics.MB:
        logw = [lw - gammaln(counts + 1.0) for lw in logw]
    shifts = [float(lw.max()) for lw in logw]
    logw = [lw - s for lw, s in zip(logw, shifts)]

    # trailing states are expanded as a dense block; leading ones are iterated
    n_inner = 0
    block = 1
    while n_inner < n_states and block * size <= _BLOCK_SIZE:
        block *= size
        n_inner += 1
    outer = list(range(n_states - n_inner))
    inner = list(range(n_states - n_inner, n_states))

    inner_log = np.zeros(())
    for s in inner:
        inner_log = np.add.outer(inner_log, logw[s])

    z_parts = []
    num_parts = [[] for _ in range(n_states)]
    for idx in itertools.product(range(size), repeat=len(outer)):
        outer_log = math.fsum(logw[s][i] for s, i in zip(outer, idx))
        w = np.exp(inner_log + outer_log)
        total = float(w.sum())
        z_parts.append(total)
        for s, i in zip(outer, idx):
            num_parts[s].append(i * total)
        for axis, s in enumerate(inner):
            others = tuple(a for a in range(len(inner)) if a != axis)
            marginal = w.sum(axis=others) if others else w
            num_parts[s].append(float(np.dot(marginal, counts)))

    z = math.fsum(z_parts)
    log_z = math.log(z) + math.fsum(shifts)
    per_state = np.array([math.fsum(p) / z for p in num_parts])
    occ = np.bincount(level_of, weights=per_state, minlength=len(spectrum))
    return log_z, _profile(spectrum, occ, stats, beta, mu)
