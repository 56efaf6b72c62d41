//! Canonical Gibbs states and thermal observables.
//!
//! ρ(T) = exp(−H/T)/Z with H/k_B and T in Kelvin. The ground energy is
//! subtracted before exponentiation so low temperatures cannot
//! overflow; temperatures below a floor collapse to the normalized
//! projector onto the (possibly degenerate) ground space.

use crate::chain::HamiltonianMatrix;
use crate::eigen::{eigendecompose, EigenBasis};
use crate::error::{CoreError, Result};
use crate::spin::{check_site, spin_operator, total_spin_operator, Axis};
use crate::{CMatrix, CVector};
use alloc::vec::Vec;
use num_complex::Complex64;
use num_traits::Float;

/// Temperatures below this (Kelvin) are treated as the T → 0 limit.
pub const DEFAULT_TEMPERATURE_FLOOR: f64 = 1e-6;

/// A Gibbs state together with the eigenbasis it was built in.
#[derive(Debug, Clone)]
pub struct ThermalState {
    n_sites: usize,
    temperature: f64,
    populations: Vec<f64>,
    basis: EigenBasis,
    density: CMatrix,
}

impl ThermalState {
    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    /// The temperature in Kelvin (β⁻¹ in reduced units).
    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    /// Boltzmann populations, ordered like the eigenbasis.
    pub fn populations(&self) -> &[f64] {
        &self.populations
    }

    pub fn basis(&self) -> &EigenBasis {
        &self.basis
    }

    pub fn density(&self) -> &CMatrix {
        &self.density
    }

    /// Tr(ρ A), real part (exact for Hermitian observables).
    pub fn expectation(&self, op: &CMatrix) -> f64 {
        (self.density() * op).trace().re
    }
}

/// Gibbs state at temperature `t` (Kelvin) with the default floor.
pub fn thermal_state(h: &HamiltonianMatrix, t: f64) -> Result<ThermalState> {
    thermal_state_with_floor(h, t, DEFAULT_TEMPERATURE_FLOOR)
}

/// Gibbs state with an explicit low-temperature floor.
pub fn thermal_state_with_floor(
    h: &HamiltonianMatrix,
    t: f64,
    floor: f64,
) -> Result<ThermalState> {
    if t.is_nan() || t <= 0.0 {
        return Err(CoreError::NonPositiveTemperature { temperature: t });
    }
    let basis = eigendecompose(h.matrix())?;
    let e0 = basis.ground_energy();
    let tol = degeneracy_tolerance(basis.eigenvalues());
    let populations: Vec<f64> = if t < floor {
        // Normalized projector onto the full degenerate ground space.
        let g = basis.ground_degeneracy(tol);
        (0..basis.dim()).map(|k| if k < g { 1.0 / g as f64 } else { 0.0 }).collect()
    } else {
        let mut weights: Vec<f64> =
            basis.eigenvalues().iter().map(|&e| Float::exp(-(e - e0) / t)).collect();
        // Degenerate levels carry identical Boltzmann weight; averaging
        // over numerically degenerate groups stops eigenvalue noise
        // (amplified by 1/T) from splitting them.
        symmetrize_degenerate(&mut weights, basis.eigenvalues(), tol);
        let z: f64 = weights.iter().sum();
        weights.into_iter().map(|w| w / z).collect()
    };
    let p = CVector::from_iterator(
        basis.dim(),
        populations.iter().map(|&p| Complex64::new(p, 0.0)),
    );
    let density = basis.vectors() * CMatrix::from_diagonal(&p) * basis.vectors().adjoint();
    Ok(ThermalState { n_sites: h.n_sites(), temperature: t, populations, basis, density })
}

/// Eigenvalues closer than this are one degenerate level. Scaled by
/// the spectral span so it sits far above eigensolver noise and far
/// below physical gaps at any overall energy scale.
fn degeneracy_tolerance(eigenvalues: &[f64]) -> f64 {
    let span = eigenvalues[eigenvalues.len() - 1] - eigenvalues[0];
    1e-9 * span.max(1.0)
}

fn symmetrize_degenerate(weights: &mut [f64], eigenvalues: &[f64], tol: f64) {
    let mut start = 0;
    for k in 1..=eigenvalues.len() {
        if k == eigenvalues.len() || eigenvalues[k] - eigenvalues[k - 1] > tol {
            if k - start > 1 {
                let mean = weights[start..k].iter().sum::<f64>() / (k - start) as f64;
                weights[start..k].fill(mean);
            }
            start = k;
        }
    }
}

/// Reduced susceptibility along one axis from spin fluctuations:
/// χ̂^α = Σ_{i,j} ⟨S_i^α S_j^α⟩ − ⟨Σ_i S_i^α⟩².
pub fn fluctuation_chi_reduced(state: &ThermalState, axis: Axis) -> f64 {
    let s_tot = total_spin_operator(state.n_sites(), axis).expect("state has valid n_sites");
    let m = state.expectation(&s_tot);
    state.expectation(&(&s_tot * &s_tot)) - m * m
}

/// Axis average (χ̂^x + χ̂^y + χ̂^z)/3, the experimentally measured mean.
pub fn mean_chi_reduced(state: &ThermalState) -> f64 {
    Axis::ALL.iter().map(|&a| fluctuation_chi_reduced(state, a)).sum::<f64>() / 3.0
}

/// Single-component correlator ⟨S_i^α S_j^α⟩.
pub fn component_correlator(state: &ThermalState, i: usize, j: usize, axis: Axis) -> Result<f64> {
    let n = state.n_sites();
    check_site(i, n)?;
    check_site(j, n)?;
    if i == j {
        return Err(CoreError::CoincidentSites { site: i });
    }
    let si = spin_operator(n, i, axis)?;
    let sj = spin_operator(n, j, axis)?;
    Ok(state.expectation(&(&si * &sj)))
}

/// Full dot-product correlator ⟨S⃗_i · S⃗_j⟩.
pub fn dot_correlator(state: &ThermalState, i: usize, j: usize) -> Result<f64> {
    let mut total = 0.0;
    for axis in Axis::ALL {
        total += component_correlator(state, i, j, axis)?;
    }
    Ok(total)
}
