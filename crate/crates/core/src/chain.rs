//! Isotropic Heisenberg chain Hamiltonians, H = −J Σ_i S_i · S_{i+1}.
//!
//! Energies carry units of Kelvin (E/k_B); J < 0 is antiferromagnetic.

use crate::error::{CoreError, Result};
use crate::spin::{self, spin_operators};
use crate::CMatrix;
use num_complex::Complex64;

/// Boundary condition of the chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    /// n − 1 bonds; the trimer geometry.
    Open,
    /// n bonds, closing the ring.
    Periodic,
}

/// Description of a spin-1/2 Heisenberg chain for the dense oracle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinChainSpec {
    n_sites: usize,
    j_over_kb: f64,
    boundary: Boundary,
}

impl SpinChainSpec {
    /// A chain of `n_sites` spins (2..=10) with exchange `j_over_kb` in
    /// Kelvin. Negative J is antiferromagnetic.
    pub fn new(n_sites: usize, j_over_kb: f64, boundary: Boundary) -> Result<Self> {
        if !(2..=spin::MAX_SITES).contains(&n_sites) {
            return Err(CoreError::BadChainLength { n_sites });
        }
        Ok(SpinChainSpec { n_sites, j_over_kb, boundary })
    }

    /// The three-site open chain studied throughout this crate.
    pub fn trimer(j_over_kb: f64) -> Self {
        SpinChainSpec { n_sites: 3, j_over_kb, boundary: Boundary::Open }
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn j_over_kb(&self) -> f64 {
        self.j_over_kb
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }
}

/// Dense Hamiltonian with entries in Kelvin.
#[derive(Debug, Clone, PartialEq)]
pub struct HamiltonianMatrix {
    n_sites: usize,
    matrix: CMatrix,
}

impl HamiltonianMatrix {
    /// Wrap an explicit Hermitian matrix acting on `n_sites` spins.
    ///
    /// This is the escape hatch for oracle states that are not chain
    /// Hamiltonians (a single free spin, a scaled identity, ...).
    pub fn from_matrix(n_sites: usize, matrix: CMatrix) -> Result<Self> {
        spin::check_n_sites(n_sites)?;
        let dim = 1usize << n_sites;
        if matrix.nrows() != dim || matrix.ncols() != dim {
            return Err(CoreError::DimensionMismatch { dim: matrix.nrows(), n_sites });
        }
        let dev = hermiticity_deviation(&matrix);
        if dev > hermiticity_tol(&matrix) {
            return Err(CoreError::NotHermitian { max_deviation: dev });
        }
        Ok(HamiltonianMatrix { n_sites, matrix })
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }
}

pub(crate) fn hermiticity_deviation(m: &CMatrix) -> f64 {
    (m.adjoint() - m).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub(crate) fn hermiticity_tol(m: &CMatrix) -> f64 {
    let scale = m.iter().map(|z| z.norm()).fold(0.0, f64::max);
    1e-12 * scale.max(1.0)
}

/// Build H = −J Σ S_i · S_{i+1} over the bonds selected by the
/// boundary condition.
pub fn build_hamiltonian(spec: &SpinChainSpec) -> HamiltonianMatrix {
    let n = spec.n_sites();
    let dim = 1usize << n;
    let minus_j = Complex64::new(-spec.j_over_kb(), 0.0);
    let mut h = CMatrix::zeros(dim, dim);
    let bonds = match spec.boundary() {
        Boundary::Open => n - 1,
        Boundary::Periodic => n,
    };
    for i in 1..=bonds {
        let j = if i == n { 1 } else { i + 1 };
        let si = spin_operators(n, i).expect("validated spec");
        let sj = spin_operators(n, j).expect("validated spec");
        for a in 0..3 {
            h += (&si[a] * &sj[a]).map(|z| z * minus_j);
        }
    }
    HamiltonianMatrix { n_sites: n, matrix: h }
}
