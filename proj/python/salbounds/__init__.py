"""Energy bounds for semirelativistic N-boson systems bound by attractive pair potentials."""

from ._core import (
    PhysicalParams,
    ScaledParams,
    bessel_k1_scaled,
    compute_bounds,
    critical_nu,
    energy_from_scaled,
    erfcx,
    jacobi_identity_deviations,
    kinetic_I,
    potential_J,
    solve_kg,
    spectral_F,
    supercritical_nu,
    to_scaled,
    upper_bound_e2g,
    upper_bound_eg,
)

__all__ = [
    "PhysicalParams",
    "ScaledParams",
    "bessel_k1_scaled",
    "compute_bounds",
    "critical_nu",
    "energy_from_scaled",
    "erfcx",
    "jacobi_identity_deviations",
    "kinetic_I",
    "potential_J",
    "solve_kg",
    "spectral_F",
    "supercritical_nu",
    "to_scaled",
    "upper_bound_e2g",
    "upper_bound_eg",
]

__version__ = "0.1.0"
