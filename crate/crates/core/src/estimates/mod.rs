//! Explicit enclosures for ratios and second differences of partition
//! numbers, the k-rank and non-k-ary consequences, and positivity
//! certificates for `p(n) - 2p(n-j) + p(n-2j)`.
//!
//! Every enclosure is evaluated in outward-rounded interval arithmetic, so
//! the only gap between an enclosure and the exact value it claims to
//! contain is the mathematics of the estimate itself.

mod constants;
mod convexity;
mod fjn;
mod injection;
mod krank;
mod nonkary;
mod ratio;

pub use constants::{gap_coefficient, main_coefficient, shift_coefficient};
pub use convexity::{
    analytic_chain, analytic_chain_threshold, convexity_certificate, proposition_second_difference, CertificateKind,
    ChainOutcome, ConvexityCertificate,
};
pub use fjn::{fjn_formula, fjn_ratio_interval, FjnEstimate};
pub use injection::{injection_inequality, injection_map_check, InjectionMapCheck, INJECTION_MAP_MAX};
pub use krank::{
    krank_boundary_value, krank_diff_exact, krank_diff_formula, krank_diff_interval, krank_ell, krank_positivity_threshold,
    krank_ratio_exact, krank_ratio_formula, krank_ratio_interval,
};
pub use nonkary::{nonkary_diff_check, nonkary_ratio_interval, NonkaryCheck};
pub use ratio::{ratio_formula, ratio_interval, RatioEstimate};

use rug::{Float, Rational};

use crate::interval::Enclosure;

/// Signed distance from `exact` to the nearer endpoint of `enc`, divided by
/// the width. Positive inside, negative outside; `+inf` for a point
/// interval that equals `exact`.
pub fn containment_margin(enc: &Enclosure, exact: &Rational) -> f64 {
    let prec = enc.prec() + 64;
    let x = Float::with_val(prec, exact);
    let below = Float::with_val(prec, &x - enc.lo());
    let above = Float::with_val(prec, enc.hi() - &x);
    let nearest = if below < above { below } else { above };
    let width = Float::with_val(prec, enc.hi() - enc.lo());
    if width.is_zero() {
        return if nearest.is_zero() { f64::INFINITY } else { f64::NEG_INFINITY };
    }
    (nearest / width).to_f64()
}
