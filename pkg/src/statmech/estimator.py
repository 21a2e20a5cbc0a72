"""Scikit-learn compatible wrapper around the chemical-potential solver.

``fit`` takes a spectrum as an array of energies (optionally with a
degeneracy column) and solves for the chemical potential that holds
``n_particles`` on it.  ``transform`` then evaluates the per-state mean
occupancy at arbitrary energies, and ``predict`` gives the per-level totals.

>>> import numpy as np
>>> model = OccupationModel(statistics="FD", beta=1.0, n_particles=1.0)
>>> model.fit(np.array([[0.0, 1], [2.0, 1]])).mu_
1.0
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_positive, check_spectrum_array
from .chempot import DEFAULT_MAX_ITER, DEFAULT_TOL, solve_mu
from .ensembles import Statistics, mean_occupancy
from .levels import EnergySpectrum


class OccupationModel(TransformerMixin, BaseEstimator):
    """Mean occupation numbers at fixed particle number.

    Parameters
    ----------
    statistics : {"MB", "BE", "FD"}
    beta : float
        Inverse temperature ``1/kT``.
    n_particles : float
        Target mean particle number.
    tol : float
        Relative tolerance on the particle number.
    max_iter : int
        Iteration cap for the root search.

    Attributes
    ----------
    spectrum_ : EnergySpectrum
    mu_ : float
    solution_ : MuSolution
    n_features_in_ : int
    """

    def __init__(self, statistics="FD", beta=1.0, n_particles=1.0, tol=DEFAULT_TOL,
                 max_iter=DEFAULT_MAX_ITER):
        self.statistics = statistics
        self.beta = beta
        self.n_particles = n_particles
        self.tol = tol
        self.max_iter = max_iter

    def fit(self, X, y=None):
        stats = Statistics.parse(self.statistics)
        beta = check_positive("beta", self.beta)
        n = check_positive("n_particles", self.n_particles)
        energies, degeneracies = check_spectrum_array(X)
        self.n_features_in_ = 1 if np.ndim(X) == 1 else np.shape(X)[1]
        self.spectrum_ = EnergySpectrum.from_levels(zip(energies, degeneracies))
        self.solution_ = solve_mu(self.spectrum_, beta, n, stats, tol=self.tol, max_iter=self.max_iter)
        self.mu_ = self.solution_.mu
        self.statistics_ = stats
        return self

    def transform(self, X):
        """Per-state mean occupancy at each energy, shape ``(n, 1)``."""
        check_is_fitted(self, "mu_")
        energies, _ = check_spectrum_array(X)
        x = self.beta * (energies - self.mu_)
        return np.asarray(mean_occupancy(x, self.statistics_)).reshape(-1, 1)

    def predict(self, X):
        """Mean occupancy per row of ``X``, weighted by the degeneracy column if present."""
        check_is_fitted(self, "mu_")
        energies, degeneracies = check_spectrum_array(X)
        x = self.beta * (energies - self.mu_)
        return degeneracies * mean_occupancy(x, self.statistics_)

    def score(self, X, y=None):
        """Negative relative particle-number error on ``X``'s spectrum."""
        total = float(np.sum(self.predict(X)))
        return -abs(total - self.n_particles) / self.n_particles
