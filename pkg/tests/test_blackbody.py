import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from statmech import REDUCED, SI, planck, rayleigh_jeans, wien_mb_form
from statmech.blackbody import bose_factor
from statmech.exceptions import InvalidArgumentError

XS = np.geomspace(1e-10, 50, 200)


def ratio(num, den, x, T=1.0, constants=REDUCED):
    eps = x * constants.boltzmann_k * T
    return num(eps, T, constants).density / den(eps, T, constants).density


def test_rayleigh_jeans_scaling():
    assert rayleigh_jeans(1.0, 1.0, REDUCED).density == 2.0
    assert rayleigh_jeans(1.0, 2.0, REDUCED).density == 4.0
    assert rayleigh_jeans(2.0, 1.0, REDUCED).density == 8.0


def test_planck_ratio_at_small_x():
    # x/(e^x - 1) at x = 0.01, from 40-digit mpmath
    assert ratio(planck, rayleigh_jeans, 0.01) == pytest.approx(0.99500833331944448, rel=1e-12)
    assert ratio(planck, rayleigh_jeans, 1e-4) == pytest.approx(1.0, abs=1e-4)
    assert ratio(planck, rayleigh_jeans, 1e-12) == pytest.approx(1.0, abs=1e-12)


def test_planck_vs_wien_at_large_x():
    # 1/(1 - e^-20) - 1, from 40-digit mpmath
    assert ratio(planck, wien_mb_form, 20.0) - 1 == pytest.approx(2.061153626686912e-09, rel=1e-6)
    assert ratio(wien_mb_form, planck, 20.0) == pytest.approx(1 - math.exp(-20), rel=1e-15)
    assert ratio(wien_mb_form, planck, math.log(2)) == pytest.approx(0.5, rel=1e-15)
    assert ratio(wien_mb_form, planck, 600.0) == 1.0


def test_bose_factor_small_x_branch():
    x = np.array([1e-12, 5e-9, 2e-8])
    np.testing.assert_allclose(bose_factor(x) * x, 1 - x / 2 + x**2 / 12, rtol=1e-15)
    assert np.ndim(bose_factor(0.5)) == 0


def test_planck_below_rayleigh_jeans():
    r = ratio(planck, rayleigh_jeans, XS)
    assert np.all(r < 1.0)


@pytest.mark.parametrize("constants", [REDUCED, SI])
@pytest.mark.parametrize("T", [0.5, 300.0, 5800.0])
def test_all_positive(constants, T):
    eps = XS[XS < 30] * constants.boltzmann_k * T
    for fn in (planck, rayleigh_jeans, wien_mb_form):
        assert np.all(fn(eps, T, constants).density > 0)


@given(T=st.floats(1.0, 1e4), x=st.floats(1e-3, 40))
def test_planck_interpolates(T, x):
    p = ratio(planck, rayleigh_jeans, x, T, SI)
    w = ratio(planck, wien_mb_form, x, T, SI)
    assert p == pytest.approx(x / math.expm1(x), rel=1e-12)
    assert w == pytest.approx(1 / -math.expm1(-x), rel=1e-12)


def test_scalar_in_scalar_out():
    pt = planck(1.0, 1.0, REDUCED)
    assert isinstance(pt.density, float)
    assert pt.photon_energy == 1.0 and pt.temperature == 1.0


@pytest.mark.parametrize("eps, T", [(0.0, 1.0), (-1.0, 1.0), (1.0, 0.0), (1.0, -3.0)])
def test_rejects_bad_inputs(eps, T):
    with pytest.raises(InvalidArgumentError):
        planck(eps, T, REDUCED)
