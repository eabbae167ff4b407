"""Spin-star simulator: a qubit exchange-coupled equally to N qubits.

Exact resonant interaction-picture dynamics, the effective one-axis
twisting approximation, fractional-revival analysis and Husimi Q
phase-space rasters, backed by the C++ core.
"""

from ._core import (
    BranchSign,
    DickeVector,
    JointState,
    ModelParams,
    QRaster,
    RevivalReport,
    SpinCoherentSpec,
    approximation_fidelity,
    bloch_from_zeta,
    build_initial,
    carpet,
    cat_count,
    coherent_coeffs,
    conserved_excitation,
    dicke_moments,
    effective_eigenphase,
    eigenvalue_defect,
    equatorial_slice,
    exact_propagate,
    fourier_component_phases,
    fractional_revival_state,
    gauss_sum_closed_form,
    gauss_sum_dft,
    husimi_q,
    make_revival_report,
    q_grid,
    revival_time,
    state_overlap,
    truncated_propagate,
    truncation_time_bounds,
    write_csv,
    write_pgm,
    zeta_from_bloch,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
