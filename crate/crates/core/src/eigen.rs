//! Dense Hermitian eigendecomposition, ascending eigenvalue order.

use crate::chain::{hermiticity_deviation, hermiticity_tol};
use crate::error::{CoreError, Result};
use crate::{CMatrix, CVector};
use alloc::vec::Vec;
use num_complex::Complex64;

/// Eigenvalues (Kelvin, ascending) and orthonormal eigenvectors
/// (columns) of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct EigenBasis {
    eigenvalues: Vec<f64>,
    vectors: CMatrix,
}

impl EigenBasis {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Matrix whose k-th column is the k-th eigenvector.
    pub fn vectors(&self) -> &CMatrix {
        &self.vectors
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn ground_energy(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// Number of eigenvalues within `tol` of the ground energy.
    pub fn ground_degeneracy(&self, tol: f64) -> usize {
        let e0 = self.ground_energy();
        self.eigenvalues.iter().take_while(|&&e| e - e0 <= tol).count()
    }

    /// V diag(λ) V†, for reconstruction checks.
    pub fn reconstruct(&self) -> CMatrix {
        let lambda = CVector::from_iterator(
            self.dim(),
            self.eigenvalues.iter().map(|&e| Complex64::new(e, 0.0)),
        );
        &self.vectors * CMatrix::from_diagonal(&lambda) * self.vectors.adjoint()
    }
}

/// Diagonalize a Hermitian matrix; rejects non-Hermitian input.
pub fn eigendecompose(m: &CMatrix) -> Result<EigenBasis> {
    let dev = hermiticity_deviation(m);
    if dev > hermiticity_tol(m) {
        return Err(CoreError::NotHermitian { max_deviation: dev });
    }
    let eig = m.clone().symmetric_eigen();
    let dim = m.nrows();
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].partial_cmp(&eig.eigenvalues[b]).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let mut vectors = CMatrix::zeros(dim, dim);
    for (col, &k) in order.iter().enumerate() {
        vectors.set_column(col, &eig.eigenvectors.column(k));
    }
    Ok(EigenBasis { eigenvalues, vectors })
}
