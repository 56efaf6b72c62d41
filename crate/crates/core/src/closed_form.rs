//! The analytic chain for the antiferromagnetic trimer.
//!
//! Everything here is a scalar function of x = J/(k_B T) ≤ 0:
//!
//! - the Van Vleck susceptibility of the three-site open chain,
//!   χ̂(T) = f(x)/4 with the Boltzmann ratio
//!   f(x) = (1 + e^x + 10 e^{3x/2})/(1 + e^x + 2 e^{3x/2});
//! - the inversion of the mean susceptibility into the
//!   nearest-neighbour correlator, ⟨S_i S_{i+1}⟩ = (3χ̂ − 2)/4;
//! - the entanglement measure applied to measured susceptibility,
//!   E = (1/4)·max[0, 2|(3/2)χ̂ − 1| + 1/2 − (3/2)χ̂];
//! - the closed form E(J, T) obtained by composing the two, with
//!   E → 11/32 as T → 0;
//! - the decoherence temperature T_c where E vanishes, fixed by the
//!   J-independent root f(x*) = 20/9, so T_c = |J|/|x*| ∝ |J|.
//!
//! The correlator inversion is kept exactly as the susceptibility
//! chain defines it even where it disagrees with the exact oracle
//! (it yields 1/16 instead of 0 at T → ∞, and v < 0 at T → 0); the
//! oracle-comparison tooling exists to surface that divergence, not to
//! repair it.

use crate::error::{CoreError, Result};
use num_traits::Float;

/// Measure value in the T → 0 limit, the supremum 11/32.
pub const MEASURE_MAX: f64 = 11.0 / 32.0;

/// Boltzmann-ratio value at the separability threshold, f(x*) = 20/9.
pub const SEPARABILITY_RATIO: f64 = 20.0 / 9.0;

/// Reduced susceptibility at the separability threshold, χ̂ = 5/9.
pub const CHI_SEPARABILITY: f64 = 5.0 / 9.0;

/// Bracket and tolerance of the dimensionless root search.
const ROOT_BRACKET: (f64, f64) = (-10.0, 0.0);
const ROOT_TOL: f64 = 1e-12;

/// Physical parameters of one antiferromagnetic trimer compound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrimerModel {
    j_over_kb: f64,
    g_factor: f64,
}

impl TrimerModel {
    /// Exchange constant J/k_B in Kelvin, strictly negative; g = 2.
    pub fn new(j_over_kb: f64) -> Result<Self> {
        Self::with_g_factor(j_over_kb, 2.0)
    }

    /// Same with an explicit g-factor (> 0). The closed forms are
    /// g-free in reduced units; g only matters when converting
    /// physical susceptibility data.
    pub fn with_g_factor(j_over_kb: f64, g_factor: f64) -> Result<Self> {
        if j_over_kb.is_nan() || j_over_kb >= 0.0 {
            return Err(CoreError::FerromagneticExchange { value: j_over_kb });
        }
        if g_factor.is_nan() || g_factor <= 0.0 {
            return Err(CoreError::BadGFactor { value: g_factor });
        }
        Ok(TrimerModel { j_over_kb, g_factor })
    }

    pub fn j_over_kb(&self) -> f64 {
        self.j_over_kb
    }

    pub fn g_factor(&self) -> f64 {
        self.g_factor
    }

    fn x_at(&self, t: f64) -> Result<f64> {
        if t.is_nan() || t <= 0.0 {
            return Err(CoreError::NonPositiveTemperature { temperature: t });
        }
        Ok(self.j_over_kb / t)
    }
}

/// One point of an entanglement-versus-temperature curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntanglementPoint {
    /// Temperature in Kelvin.
    pub temperature: f64,
    /// Hilbert-Schmidt measure, in [0, 11/32].
    pub measure: f64,
    /// Whether the measure is strictly positive.
    pub entangled: bool,
}

impl EntanglementPoint {
    pub fn new(temperature: f64, measure: f64) -> Self {
        EntanglementPoint { temperature, measure, entangled: measure > 0.0 }
    }
}

/// f(x) = (1 + e^x + 10 e^{3x/2})/(1 + e^x + 2 e^{3x/2}) for x ≤ 0.
///
/// Ranges over (1, 3]: 3 at x = 0 (free spins) down to 1 as x → −∞
/// (ground doublet), increasing monotonically in x.
pub fn boltzmann_ratio(x: f64) -> Result<f64> {
    if x > 0.0 {
        return Err(CoreError::FerromagneticExchange { value: x });
    }
    let ex = Float::exp(x);
    let e32 = Float::exp(1.5 * x);
    Ok((1.0 + ex + 10.0 * e32) / (1.0 + ex + 2.0 * e32))
}

/// Reduced Van Vleck susceptibility of the trimer, χ̂ = f(J/(k_B T))/4.
pub fn van_vleck_chi_reduced(model: &TrimerModel, t: f64) -> Result<f64> {
    Ok(boltzmann_ratio(model.x_at(t)?)? / 4.0)
}

/// z-axis reduced susceptibility from the nearest-neighbour
/// correlator: χ̂_z = 2(2⟨S_i S_{i+1}⟩ + 1).
pub fn chi_z_reduced_from_corr(corr: f64) -> f64 {
    2.0 * (2.0 * corr + 1.0)
}

/// Invert the mean-susceptibility relation χ̂ = (2/3)(2c + 1) into the
/// correlator: c = (3χ̂ − 2)/4.
pub fn corr_from_chi(chi_reduced: f64) -> f64 {
    (3.0 * chi_reduced - 2.0) / 4.0
}

/// Entanglement measure from a measured reduced susceptibility:
/// E = (1/4)·max[0, 2|(3/2)χ̂ − 1| + 1/2 − (3/2)χ̂].
///
/// Equal to the Hilbert-Schmidt measure of the X state built from
/// [`corr_from_chi`]; the clamp absorbs any data beyond the
/// separability threshold χ̂ ≥ 5/9.
pub fn measure_from_chi(chi_reduced: f64) -> Result<f64> {
    if chi_reduced < 0.0 {
        return Err(CoreError::NegativeSusceptibility { value: chi_reduced });
    }
    let s = 1.5 * chi_reduced;
    Ok(0.25 * (2.0 * Float::abs(s - 1.0) + 0.5 - s).max(0.0))
}

/// The closed-form measure E(J, T), evaluated from the Boltzmann ratio.
pub fn closed_form_measure(model: &TrimerModel, t: f64) -> Result<EntanglementPoint> {
    let f = boltzmann_ratio(model.x_at(t)?)?;
    let s = 0.375 * f;
    let measure = 0.25 * (2.0 * Float::abs(s - 1.0) + 0.5 - s).max(0.0);
    Ok(EntanglementPoint::new(t, measure))
}

/// The J-independent ratio T_c/|J/k_B|, from bisecting f(x) = 20/9.
pub fn critical_ratio() -> f64 {
    let root = bisect(
        |x| boltzmann_ratio(x).expect("bracket is non-positive") - SEPARABILITY_RATIO,
        ROOT_BRACKET.0,
        ROOT_BRACKET.1,
        ROOT_TOL,
    );
    1.0 / Float::abs(root)
}

/// Decoherence temperature: the smallest T where the measure vanishes,
/// T_c = |J/k_B| · (T_c/|J|) with the universal ratio from
/// [`critical_ratio`].
pub fn critical_temperature(model: &TrimerModel) -> f64 {
    Float::abs(model.j_over_kb) * critical_ratio()
}

/// Whether the trimer is entangled at temperature `t` (strictly below
/// the decoherence temperature).
pub fn entangled_region(model: &TrimerModel, t: f64) -> Result<bool> {
    Ok(closed_form_measure(model, t)?.entangled)
}

/// Plain bisection; assumes f(lo) and f(hi) straddle zero.
fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let mut flo = f(lo);
    debug_assert!(flo * f(hi) <= 0.0);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        let fmid = f(mid);
        if fmid == 0.0 {
            return mid;
        }
        if flo * fmid < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    0.5 * (lo + hi)
}
