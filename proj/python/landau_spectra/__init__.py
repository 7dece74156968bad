"""Spectra of the Fourier-mode operators linearized around Landau solutions.

The heavy lifting lives in the C++ extension module; this package re-exports
its public surface.
"""

from ._core import (
    Params,
    a_psi,
    apply_tilde_L0,
    assemble,
    beta0,
    d_a_psi,
    f0,
    first_order_imaginary,
    grid_nodes,
    h0,
    kernel_residual,
    m_positivity_sweep,
    psi,
    re_mu2,
    sigma_from_lambda,
    small_sigma_consistency,
    spectrum,
    u_tilde,
    weight_symmetry_defect,
)

__all__ = [
    "Params",
    "a_psi",
    "apply_tilde_L0",
    "assemble",
    "beta0",
    "d_a_psi",
    "f0",
    "first_order_imaginary",
    "grid_nodes",
    "h0",
    "kernel_residual",
    "m_positivity_sweep",
    "psi",
    "re_mu2",
    "sigma_from_lambda",
    "small_sigma_consistency",
    "spectrum",
    "u_tilde",
    "weight_symmetry_defect",
]
