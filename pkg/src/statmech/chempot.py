"""Chemical potential, free energy and related closed forms.

``solve_mu`` inverts ``N(mu) = sum_s g_s n(beta*(eps_s - mu))`` with a
bracketed Newton/bisection hybrid.  N(mu) is strictly increasing for both
quantum statistics, so once a sign change is bracketed the root is unique.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.special import xlogy

from .classicality import thermal_wavelength
from .ensembles import (
    OccupationProfile,
    Statistics,
    grand_log_partition,
    number_derivative,
    occupancy,
    occupancy_mb,
    single_partition,
    total_number,
)
from .exceptions import CapacityError, ConvergenceError, InvalidArgumentError
from .levels import EnergySpectrum

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 200


@dataclass(frozen=True)
class MuSolution:
    mu: float
    residual: float
    iterations: int
    bracket: tuple[float, float]
    statistics: Statistics


@dataclass(frozen=True)
class FreeEnergyReport:
    internal_energy: float
    entropy_term: float
    free_energy: float
    grand_potential: float | None
    mu: float
    total_n: float
    statistics: Statistics

    @property
    def free_energy_from_grand(self) -> float | None:
        """``Omega + mu*N``; agrees with ``free_energy`` for BE and FD."""
        if self.grand_potential is None:
            return None
        return self.grand_potential + self.mu * self.total_n


def mu_from_log_zeta(log_zeta: float, beta: float, n: float) -> float:
    """``(1/beta) ln(N/zeta)`` given ``ln zeta``."""
    if not n > 0:
        raise InvalidArgumentError(f"n must be positive, got {n!r}")
    return (math.log(n) - log_zeta) / beta


def mu_mb(spectrum: EnergySpectrum, beta: float, n: float) -> float:
    """Classical chemical potential, from ``exp(beta*mu) = N/zeta``."""
    return mu_from_log_zeta(single_partition(spectrum, beta).log_value, beta, n)


def _relative_residual(spectrum, beta, mu, stats, n_target):
    return (total_number(spectrum, beta, mu, stats) - n_target) / n_target


def solve_mu(spectrum: EnergySpectrum, beta: float, n_target: float, stats,
             tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> MuSolution:
    """Chemical potential that puts ``n_target`` particles on ``spectrum``.

    Raises :class:`CapacityError` when a fermion target does not fit in the
    available states and :class:`ConvergenceError` (carrying the last bracket)
    when the iteration cap is hit.
    """
    stats = Statistics.parse(stats)
    if not (beta > 0 and math.isfinite(beta)):
        raise InvalidArgumentError(f"beta must be positive and finite, got {beta!r}")
    if not (n_target > 0 and math.isfinite(n_target)):
        raise InvalidArgumentError(f"n_target must be positive, got {n_target!r}")
    if not tol > 0:
        raise InvalidArgumentError(f"tol must be positive, got {tol!r}")

    if stats is Statistics.MB:
        mu = mu_mb(spectrum, beta, n_target)
        residual = _relative_residual(spectrum, beta, mu, stats, n_target)
        return MuSolution(mu, residual, 0, (-math.inf, math.inf), stats)

    eps_min = spectrum.ground_energy
    scale = max(1.0 / beta, spectrum.energies[-1] - eps_min, 1e-300)

    def f(mu):
        return total_number(spectrum, beta, mu, stats) - n_target

    if stats is Statistics.FD:
        capacity = spectrum.total_degeneracy
        if not n_target < capacity:
            raise CapacityError(
                f"fermion number {n_target!r} does not fit: capacity is {capacity} states"
            )
        lo, hi = eps_min - scale, spectrum.energies[-1] + scale
        step = scale
        while f(lo) > 0:
            step *= 2.0
            lo = eps_min - step
        step = scale
        while f(hi) < 0:
            step *= 2.0
            hi = spectrum.energies[-1] + step
    else:
        hi = eps_min - 1e-12 * max(1.0, abs(eps_min))
        if f(hi) < 0:
            raise ConvergenceError(
                "target cannot be reached below the ground state",
                bracket=(-math.inf, hi),
            )
        step = scale
        lo = eps_min - step
        while f(lo) > 0:
            step *= 2.0
            lo = eps_min - step

    mu = 0.5 * (lo + hi)
    for iteration in range(1, max_iter + 1):
        n_mu = total_number(spectrum, beta, mu, stats)
        resid = (n_mu - n_target) / n_target
        if abs(resid) <= tol:
            return MuSolution(mu, resid, iteration, (lo, hi), stats)
        if resid > 0:
            hi = mu
        else:
            lo = mu
        slope = number_derivative(spectrum, beta, mu, stats)
        candidate = mu - (n_mu - n_target) / slope if slope > 0 else math.nan
        # Newton only when it stays well inside the bracket
        if math.isfinite(candidate) and lo < candidate < hi:
            mu = candidate
        else:
            mu = 0.5 * (lo + hi)
        if not lo < mu < hi:
            break
    raise ConvergenceError(
        f"did not converge in {max_iter} iterations; last bracket [{lo!r}, {hi!r}]",
        bracket=(lo, hi),
        iterations=max_iter,
    )


def fermi_energy(n: float, volume: float, mass: float, planck_h: float) -> float:
    """``h^2/m (N/V)^(2/3)``, order-unity prefactors omitted."""
    for name, v in (("n", n), ("volume", volume), ("mass", mass), ("planck_h", planck_h)):
        if not v > 0:
            raise InvalidArgumentError(f"{name} must be positive, got {v!r}")
    return planck_h**2 / mass * (n / volume) ** (2.0 / 3.0)


def mu_classical_asymptote(temperature: float, volume: float, n: float, mass: float,
                           planck_h: float, boltzmann_k: float) -> float:
    """Dilute-gas limit ``-kT ln(V / (N lambda_th^3))``."""
    for name, v in (("volume", volume), ("n", n)):
        if not v > 0:
            raise InvalidArgumentError(f"{name} must be positive, got {v!r}")
    lam = thermal_wavelength(temperature, mass, planck_h, boltzmann_k)
    return -boltzmann_k * temperature * math.log(volume / (n * lam**3))


def _entropy_per_state(n, stats):
    # S/k per state from the occupancy alone
    if stats is Statistics.BE:
        return xlogy(1.0 + n, 1.0 + n) - xlogy(n, n)
    return -xlogy(n, n) - xlogy(1.0 - n, 1.0 - n)


def free_energy(spectrum: EnergySpectrum, beta: float, n_target: float, stats,
                tol: float = DEFAULT_TOL) -> FreeEnergyReport:
    """Helmholtz free energy ``F = U - TS`` at fixed particle number.

    BE/FD: the entropy is taken from the occupancies, so ``F = U - TS`` and
    ``F = Omega + mu*N`` are computed along independent routes.  MB: uses
    ``Z = zeta^N / N!``.
    """
    stats = Statistics.parse(stats)
    kT = 1.0 / beta
    if stats is Statistics.MB:
        if not n_target > 0:
            raise InvalidArgumentError(f"n_target must be positive, got {n_target!r}")
        log_zeta = single_partition(spectrum, beta).log_value
        profile = occupancy_mb(spectrum, beta, n_target)
        f_value = -kT * (n_target * log_zeta - math.lgamma(n_target + 1.0))
        u = profile.internal_energy
        return FreeEnergyReport(
            internal_energy=u,
            entropy_term=u - f_value,
            free_energy=f_value,
            grand_potential=None,
            mu=mu_from_log_zeta(log_zeta, beta, n_target),
            total_n=float(n_target),
            statistics=stats,
        )

    solution = solve_mu(spectrum, beta, n_target, stats, tol=tol)
    profile: OccupationProfile = occupancy(spectrum, beta, solution.mu, stats)
    per_state = profile.per_state_occupancy
    entropy = math.fsum(profile.degeneracies * _entropy_per_state(per_state, stats))
    u = profile.internal_energy
    ts = kT * entropy
    omega = -kT * grand_log_partition(spectrum, beta, solution.mu, stats)
    return FreeEnergyReport(
        internal_energy=u,
        entropy_term=ts,
        free_energy=u - ts,
        grand_potential=omega,
        mu=solution.mu,
        total_n=profile.total_n,
        statistics=stats,
    )


def mu_finite_difference(spectrum: EnergySpectrum, beta: float, n_target: float, stats,
                         centered: bool = False, tol: float = DEFAULT_TOL) -> float:
    """Free-energy increment per added particle, ``F(N+1) - F(N)``.

    With ``centered=True`` returns ``(F(N+1) - F(N-1)) / 2``.
    """
    if not n_target >= 2:
        raise InvalidArgumentError(f"n_target must be >= 2, got {n_target!r}")
    f_up = free_energy(spectrum, beta, n_target + 1, stats, tol=tol).free_energy
    if centered:
        f_down = free_energy(spectrum, beta, n_target - 1, stats, tol=tol).free_energy
        return 0.5 * (f_up - f_down)
    return f_up - free_energy(spectrum, beta, n_target, stats, tol=tol).free_energy


__all__ = [
    "DEFAULT_MAX_ITER",
    "DEFAULT_TOL",
    "FreeEnergyReport",
    "MuSolution",
    "fermi_energy",
    "free_energy",
    "mu_classical_asymptote",
    "mu_finite_difference",
    "mu_from_log_zeta",
    "mu_mb",
    "solve_mu",
]
