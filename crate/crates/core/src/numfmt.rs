//! Deterministic float handling for JSON output.

/// Round `x` to 12 significant decimal digits.
///
/// Report values pass through this before being stored, so emitted JSON uses
/// the shortest round-trip representation of the rounded value and parses
/// back to exactly the stored number.
pub fn round12(x: f64) -> f64 {
    round_sig(x, 12)
}

/// Round to `sig` significant decimal digits via a decimal string round-trip.
pub fn round_sig(x: f64, sig: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        // normalize -0.0 so serialization is stable
        return if x == 0.0 { 0.0 } else { x };
    }
    let s = format!("{:.*e}", sig.saturating_sub(1), x);
    s.parse().unwrap_or(x)
}
