//! Spin-1/2 operators embedded in an n-site chain.
//!
//! Sites are numbered 1..=n with site 1 as the leftmost (most
//! significant) tensor factor; basis index 0 is |↑↑…↑⟩.

use crate::error::{CoreError, Result};
use crate::CMatrix;
use num_complex::Complex64;

/// Largest chain handled by the dense oracle (2^10 = 1024).
pub const MAX_SITES: usize = 10;

/// Spin component label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];
}

fn pauli_half(axis: Axis) -> CMatrix {
    let z = Complex64::new(0.0, 0.0);
    let entries = match axis {
        Axis::X => [z, Complex64::new(0.5, 0.0), Complex64::new(0.5, 0.0), z],
        Axis::Y => [z, Complex64::new(0.0, -0.5), Complex64::new(0.0, 0.5), z],
        Axis::Z => [Complex64::new(0.5, 0.0), z, z, Complex64::new(-0.5, 0.0)],
    };
    CMatrix::from_row_slice(2, 2, &entries)
}

fn identity(dim: usize) -> CMatrix {
    CMatrix::identity(dim, dim)
}

pub(crate) fn check_site(site: usize, n_sites: usize) -> Result<()> {
    if !(1..=n_sites).contains(&site) {
        return Err(CoreError::SiteOutOfRange { site, n_sites });
    }
    Ok(())
}

pub(crate) fn check_n_sites(n_sites: usize) -> Result<()> {
    if !(1..=MAX_SITES).contains(&n_sites) {
        return Err(CoreError::BadChainLength { n_sites });
    }
    Ok(())
}

/// Single spin component S^axis at `site`, embedded as
/// I ⊗ … ⊗ (σ^axis/2) ⊗ … ⊗ I in the 2^n-dimensional chain space.
pub fn spin_operator(n_sites: usize, site: usize, axis: Axis) -> Result<CMatrix> {
    check_n_sites(n_sites)?;
    check_site(site, n_sites)?;
    let left = 1usize << (site - 1);
    let right = 1usize << (n_sites - site);
    Ok(identity(left)
        .kronecker(&pauli_half(axis))
        .kronecker(&identity(right)))
}

/// The triple (Sx, Sy, Sz) at `site`.
pub fn spin_operators(n_sites: usize, site: usize) -> Result<[CMatrix; 3]> {
    Ok([
        spin_operator(n_sites, site, Axis::X)?,
        spin_operator(n_sites, site, Axis::Y)?,
        spin_operator(n_sites, site, Axis::Z)?,
    ])
}

/// Total spin component Σ_i S_i^axis.
pub fn total_spin_operator(n_sites: usize, axis: Axis) -> Result<CMatrix> {
    check_n_sites(n_sites)?;
    let dim = 1usize << n_sites;
    let mut total = CMatrix::zeros(dim, dim);
    for site in 1..=n_sites {
        total += spin_operator(n_sites, site, axis)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn max_abs(m: &CMatrix) -> f64 {
        m.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    #[test]
    fn single_site_sz_is_diag_half() {
        let sz = spin_operator(1, 1, Axis::Z).unwrap();
        assert_eq!(sz[(0, 0)], Complex64::new(0.5, 0.0));
        assert_eq!(sz[(1, 1)], Complex64::new(-0.5, 0.0));
        assert_eq!(sz[(0, 1)], Complex64::new(0.0, 0.0));
    }

    #[test]
    fn su2_algebra_at_middle_site() {
        // [Sx, Sy] = i Sz at the same site; each component traceless.
        let [sx, sy, sz] = spin_operators(3, 2).unwrap();
        assert!(sz.trace().norm() < 1e-15);
        let comm = &sx * &sy - &sy * &sx;
        let residual = comm - sz.map(|z| z * Complex64::new(0.0, 1.0));
        assert!(max_abs(&residual) < 1e-12);
    }

    #[test]
    fn distinct_sites_commute() {
        let s1z = spin_operator(2, 1, Axis::Z).unwrap();
        let s2x = spin_operator(2, 2, Axis::X).unwrap();
        let comm = &s1z * &s2x - &s2x * &s1z;
        assert!(max_abs(&comm) == 0.0);
    }

    #[test]
    fn operators_are_hermitian() {
        for axis in Axis::ALL {
            let s = spin_operator(3, 3, axis).unwrap();
            assert!(max_abs(&(s.adjoint() - &s)) == 0.0);
        }
    }

    #[test]
    fn site_out_of_range_rejected() {
        assert_eq!(
            spin_operator(3, 4, Axis::X).unwrap_err(),
            CoreError::SiteOutOfRange { site: 4, n_sites: 3 }
        );
        assert_eq!(
            spin_operator(3, 0, Axis::X).unwrap_err(),
            CoreError::SiteOutOfRange { site: 0, n_sites: 3 }
        );
    }

    #[test]
    fn chain_length_bounds() {
        assert!(spin_operator(MAX_SITES + 1, 1, Axis::Z).is_err());
        assert!(spin_operator(0, 1, Axis::Z).is_err());
    }

    #[test]
    fn total_sz_counts_magnetization() {
        let sz = total_spin_operator(2, Axis::Z).unwrap();
        // diag: (1, 0, 0, -1)
        assert_eq!(sz[(0, 0)].re, 1.0);
        assert_eq!(sz[(1, 1)].re, 0.0);
        assert_eq!(sz[(3, 3)].re, -1.0);
    }
}
