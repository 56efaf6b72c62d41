//! Error type shared by all core operations.

use core::fmt;

/// Errors produced by the exact-diagonalization oracle and the
/// closed-form trimer chain.
#[derive(Debug, Clone, PartialEq)]
pub enum CoreError {
    /// Site index outside `1..=n_sites`.
    SiteOutOfRange { site: usize, n_sites: usize },
    /// Chain length outside the supported dense range.
    BadChainLength { n_sites: usize },
    /// Matrix dimension is not 2^n_sites.
    DimensionMismatch { dim: usize, n_sites: usize },
    /// Input matrix deviates from Hermiticity beyond tolerance.
    NotHermitian { max_deviation: f64 },
    /// Temperature must be strictly positive.
    NonPositiveTemperature { temperature: f64 },
    /// A reduced density matrix violated the block structure expected
    /// at zero field (largest offending entry reported).
    SymmetryViolation { what: &'static str, magnitude: f64 },
    /// Two-site state trace differs from one.
    TraceViolation { trace: f64 },
    /// Oracle-produced two-site state failed positive semidefiniteness.
    NotPositiveSemidefinite { min_value: f64 },
    /// Exchange coupling (or its dimensionless ratio) is not
    /// antiferromagnetic; the closed forms require J < 0.
    FerromagneticExchange { value: f64 },
    /// Measured susceptibility cannot be negative.
    NegativeSusceptibility { value: f64 },
    /// g-factor must be strictly positive.
    BadGFactor { value: f64 },
    /// The two sites of a pair must differ.
    CoincidentSites { site: usize },
}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreError::SiteOutOfRange { site, n_sites } => {
                write!(f, "site {site} out of range 1..={n_sites}")
            }
            CoreError::BadChainLength { n_sites } => {
                write!(f, "chain length {n_sites} outside supported range (dense 2^n matrices)")
            }
            CoreError::DimensionMismatch { dim, n_sites } => {
                write!(f, "matrix dimension {dim} does not match 2^{n_sites}")
            }
            CoreError::NotHermitian { max_deviation } => {
                write!(f, "matrix is not Hermitian (max |H - H^dag| entry = {max_deviation:e})")
            }
            CoreError::NonPositiveTemperature { temperature } => {
                write!(f, "temperature must be > 0 K (got {temperature} K)")
            }
            CoreError::SymmetryViolation { what, magnitude } => {
                write!(f, "symmetry violation in {what} (magnitude {magnitude:e})")
            }
            CoreError::TraceViolation { trace } => {
                write!(f, "two-site state trace must be 1 (got {trace})")
            }
            CoreError::NotPositiveSemidefinite { min_value } => {
                write!(f, "reduced density matrix not positive semidefinite (min {min_value:e})")
            }
            CoreError::FerromagneticExchange { value } => {
                write!(f, "antiferromagnetic J < 0 required (got {value})")
            }
            CoreError::NegativeSusceptibility { value } => {
                write!(f, "reduced susceptibility must be >= 0 (got {value})")
            }
            CoreError::BadGFactor { value } => {
                write!(f, "g-factor must be > 0 (got {value})")
            }
            CoreError::CoincidentSites { site } => {
                write!(f, "two-site operations need distinct sites (got {site} twice)")
            }
        }
    }
}

impl core::error::Error for CoreError {}

pub type Result<T> = core::result::Result<T, CoreError>;
