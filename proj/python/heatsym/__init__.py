"""Exact heat-kernel asymptotics, index densities and cyclic pairings."""

from ._heatsym import (
    HeatsymError,
    aps_spectral_flow,
    cm_even,
    cm_odd,
    heat_coefficients,
    index_density,
    mehler_check,
    pair_even_sphere_bott,
    pair_even_torus,
    pair_odd,
    quadrature_radial,
    radial_reference,
    run_acceptance,
    spectral_flow,
)

__all__ = [
    "HeatsymError",
    "aps_spectral_flow",
    "cm_even",
    "cm_odd",
    "heat_coefficients",
    "index_density",
    "mehler_check",
    "pair_even_sphere_bott",
    "pair_even_torus",
    "pair_odd",
    "quadrature_radial",
    "radial_reference",
    "run_acceptance",
    "spectral_flow",
]
