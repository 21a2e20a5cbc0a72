"""Occupation statistics over discrete spectra and the quantum-to-classical limit."""

from .blackbody import SpectralPoint, planck, rayleigh_jeans, wien_mb_form
from .chempot import (
    FreeEnergyReport,
    MuSolution,
    fermi_energy,
    free_energy,
    mu_classical_asymptote,
    mu_finite_difference,
    mu_mb,
    solve_mu,
)
from .classicality import (
    ClassicalityReport,
    classical_regime,
    interparticle_spacing,
    rms_momentum,
    thermal_wavelength,
)
from .constants import REDUCED, SI, Constants
from .ensembles import (
    OccupationProfile,
    Statistics,
    brute_force_grand,
    canonical_log_partition,
    grand_log_partition,
    occupancy,
    occupancy_be,
    occupancy_fd,
    occupancy_mb,
    occupancy_via_derivative,
    single_partition,
    single_state_probability,
    total_number,
)
from .estimator import OccupationModel
from .exceptions import (
    CapacityError,
    ConvergenceError,
    DomainError,
    EnumerationBudgetError,
    InfeasibleError,
    InvalidArgumentError,
    SpectrumParseError,
    StatMechError,
    UnsupportedStatisticsError,
)
from .huggett import enumerate_gamma, enumerate_z, equivalence_check, frequency_table
from .levels import EnergySpectrum, ThermoState, load_spectrum, make_uniform, save_spectrum

__version__ = "0.1.0"
