//! Thermal entanglement of antiferromagnetic spin-1/2 Heisenberg trimers.
//!
//! Two independent routes to the same physics:
//!
//! - [`chain`], [`eigen`], [`thermal`], [`twosite`] — a dense
//!   exact-diagonalization oracle for small spin-1/2 Heisenberg chains:
//!   Hamiltonians, Gibbs states, two-site reduced density matrices,
//!   partial-transpose (PPT) spectra, Hilbert-Schmidt entanglement
//!   measures and fluctuation-dissipation susceptibilities.
//! - [`closed_form`] — the analytic chain for the three-site trimer:
//!   Van Vleck susceptibility, susceptibility → correlator →
//!   entanglement maps, the closed-form measure E(J, T) and the
//!   decoherence (critical) temperature T_c.
//!
//! Units: every energy is stored as E/k_B in Kelvin, temperatures in
//! Kelvin, susceptibilities in reduced form χ̂ = χ·k_B·T/(gμ_B)², so all
//! kernels are free of g and μ_B. The exchange convention is
//! H = −J Σ S_i·S_{i+1} with J < 0 antiferromagnetic.
//!
//! The crate is `no_std`-compatible (requires `alloc`); the default
//! `std` feature enables the standard library.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod chain;
pub mod closed_form;
pub mod eigen;
pub mod error;
pub mod spin;
pub mod thermal;
pub mod twosite;

pub use chain::{build_hamiltonian, Boundary, HamiltonianMatrix, SpinChainSpec};
pub use closed_form::{
    boltzmann_ratio, chi_z_reduced_from_corr, closed_form_measure, corr_from_chi,
    critical_ratio, critical_temperature, entangled_region, measure_from_chi,
    van_vleck_chi_reduced, EntanglementPoint, TrimerModel,
};
pub use eigen::{eigendecompose, EigenBasis};
pub use error::{CoreError, Result};
pub use spin::{spin_operators, total_spin_operator, Axis};
pub use thermal::{
    component_correlator, dot_correlator, fluctuation_chi_reduced, mean_chi_reduced,
    thermal_state, thermal_state_with_floor, ThermalState, DEFAULT_TEMPERATURE_FLOOR,
};
pub use twosite::{
    partial_trace_pair, partial_transpose, reduced_density_matrix, two_site_rdm, TwoSiteState,
};

use num_complex::Complex64;

/// Dense complex matrix used throughout the exact-diagonalization side.
pub type CMatrix = nalgebra::DMatrix<Complex64>;
/// Dense complex column vector.
pub type CVector = nalgebra::DVector<Complex64>;
