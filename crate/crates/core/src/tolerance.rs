// SPDX-License-Identifier: Apache-2.0

//! Process-wide numeric tolerance for amplitude comparisons.

use std::sync::atomic::{AtomicU64, Ordering};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

static TOLERANCE_BITS: AtomicU64 = AtomicU64::new(0);

/// Current tolerance; `DEFAULT_TOLERANCE` unless overridden.
pub fn tolerance() -> f64 {
    match TOLERANCE_BITS.load(Ordering::Relaxed) {
        0 => DEFAULT_TOLERANCE,
        bits => f64::from_bits(bits),
    }
}

/// Overrides the tolerance for the whole process. Non-positive or
/// non-finite values restore the default.
pub fn set_tolerance(tol: f64) {
    let bits = if tol.is_finite() && tol > 0.0 { tol.to_bits() } else { 0 };
    TOLERANCE_BITS.store(bits, Ordering::Relaxed);
}
