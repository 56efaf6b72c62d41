//! Deterministic number rendering for emitted data.

/// Round to 9 significant digits. The shortest decimal representation
/// of the result (what `Display` and serde_json print) then carries at
/// most 9 significant digits while round-tripping exactly.
pub fn sig9(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{x:.8e}").parse().expect("scientific notation round-trip")
}
