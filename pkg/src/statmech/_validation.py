"""Input checks shared by the estimator API and the CLI."""

from __future__ import annotations

import math
import numbers

import numpy as np
from sklearn.utils import check_array

from .exceptions import InvalidArgumentError


def check_positive(name, value, allow_inf=False):
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise InvalidArgumentError(f"{name} must be a real number, got {value!r}")
    if not value > 0 or (not allow_inf and not math.isfinite(value)):
        raise InvalidArgumentError(f"{name} must be positive and finite, got {value!r}")
    return float(value)


def check_spectrum_array(X):
    """Coerce ``X`` into ``(energies, degeneracies)``.

    Accepts a 1-D array of energies, an ``(n, 1)`` column of energies or an
    ``(n, 2)`` array of ``[energy, degeneracy]`` rows.
    """
    X = check_array(X, ensure_2d=False, dtype=np.float64)
    if X.ndim == 1:
        X = X[:, None]
    if X.ndim != 2 or X.shape[1] not in (1, 2):
        raise InvalidArgumentError(
            f"expected energies of shape (n,), (n, 1) or (n, 2); got {X.shape}"
        )
    energies = X[:, 0]
    if X.shape[1] == 1:
        degeneracies = np.ones(len(energies), dtype=int)
    else:
        deg = X[:, 1]
        if np.any(deg < 1) or np.any(deg != np.round(deg)):
            raise InvalidArgumentError("degeneracy column must hold positive integers")
        degeneracies = deg.astype(int)
    return energies, degeneracies
