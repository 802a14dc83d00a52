//! `I_{3/2}` two ways.
//!
//! Starting from `I_{3/2}(x) = x^{3/2} / (2√(2π)) ∫_{-1}^{1} (1 - t²) e^{xt} dt`,
//! both halves of the integral have elementary antiderivatives. Using
//! `Γ(2, x) = (x + 1)e^{-x}` and `Γ(3, x) = (x² + 2x + 2)e^{-x}` on `[0, 1]`
//! and the same computation with `x -> -x` on `[-1, 0]`:
//!
//! ```text
//! ∫_0^1    (1 - t²) e^{xt} dt = (2e^x / x²)(1 - 1/x)     - 1/x + 2/x³
//! ∫_{-1}^0 (1 - t²) e^{xt} dt = (2e^{-x} / x²)(1 + 1/x) + 1/x - 2/x³
//! ```
//!
//! The rational pieces cancel in the sum, which gives
//!
//! ```text
//! I_{3/2}(x) = √(2 / (πx)) (cosh x - sinh x / x).
//! ```
//!
//! [`bessel_i32_closed`] evaluates that form; [`bessel_i32_quadrature`]
//! integrates the original integral numerically and never touches it.

use rug::float::Constant;
use rug::Float;

use crate::error::{precondition, Error, Result};

/// Upper limit on `x` for the quadrature oracle.
pub const QUADRATURE_X_MAX: f64 = 1.0e4;

/// `I_{3/2}(x)` for `x > 0` from the elementary closed form.
///
/// `cosh x - sinh x / x ≈ x²/3` for small `x`, so the working precision is
/// raised by about `2 log2(1/x)` bits to absorb the cancellation.
pub fn bessel_i32_closed(x: &Float, prec: u32) -> Result<Float> {
    if *x <= 0 || x.is_nan() {
        return Err(precondition("I_{3/2}(x) closed form needs x > 0"));
    }
    let mut work = prec + 16;
    if *x < 1 {
        let exp = x.get_exp().unwrap_or(0);
        work += 2 * exp.unsigned_abs() + 4;
    }
    let work = work.max(x.prec());
    let x = Float::with_val(work, x);
    let cosh = Float::with_val(work, x.cosh_ref());
    let sinh = Float::with_val(work, x.sinh_ref());
    let bracket = cosh - sinh / &x;
    let pi = Float::with_val(work, Constant::Pi);
    let scale = Float::with_val(work, 2u32 / (pi * &x)).sqrt();
    Ok(Float::with_val(prec, scale * bracket))
}

/// `I_{3/2}(x)` by tanh-sinh quadrature of the integral representation, for
/// `0 < x <= 10^4`.
///
/// With `t = tanh(v)`, `v = (π/2) sinh u`, the integrand becomes
/// `(π/2) cosh u · sech⁴ v · e^{x tanh v}`; the factor `1 - t² = sech² v`
/// is computed without cancellation near the endpoints. The step is halved
/// until consecutive estimates agree to `2^{-prec/2}` relative.
pub fn bessel_i32_quadrature(x: &Float, prec: u32) -> Result<Float> {
    if *x <= 0 || x.is_nan() {
        return Err(precondition("I_{3/2}(x) quadrature needs x > 0"));
    }
    if *x > QUADRATURE_X_MAX {
        return Err(precondition("I_{3/2}(x) quadrature needs x <= 1e4"));
    }
    let work = prec + 32;
    let x = Float::with_val(work, x);
    let half_pi = Float::with_val(work, Constant::Pi) / 2u32;

    // Truncate |u| where sech⁴ v · cosh u · e^x falls below 2^{-work} of the
    // integral (which is at least of order e^x / x²).
    let ln2 = std::f64::consts::LN_2;
    let xf = x.to_f64();
    let v0 = f64::from(work) * ln2 / 4.0;
    let v_max = (f64::from(work) * ln2 + 2.0 * (xf + 1.0).ln() + 16f64.ln()
        + (2.0 * v0 / std::f64::consts::PI + 1.0).ln())
        / 4.0
        + 1.0;
    let u_max = (2.0 * v_max / std::f64::consts::PI).asinh();

    let integrand = |step_index: i64, level: u32| -> Float {
        // u = step_index * 2^{-level}, exact in binary
        let u = Float::with_val(work, step_index) >> level;
        debug_assert!(u.to_f64().abs() <= u_max + 1.0);
        let v = Float::with_val(work, u.sinh_ref()) * &half_pi;
        let sech = Float::with_val(work, v.cosh_ref()).recip();
        let sech2 = Float::with_val(work, sech.square_ref());
        let tanh = Float::with_val(work, v.tanh_ref());
        let e = Float::with_val(work, &x * tanh).exp();
        let w = Float::with_val(work, u.cosh_ref()) * &half_pi;
        w * Float::with_val(work, sech2.square_ref()) * e
    };

    let nodes = |level: u32| -> i64 { (u_max * f64::from(1u32 << level)).ceil() as i64 };

    // level 0: all integer nodes
    let mut raw = Float::with_val(work, 0);
    for k in -nodes(0)..=nodes(0) {
        raw += integrand(k, 0);
    }
    let mut prev = raw.clone();
    let tol = Float::with_val(work, Float::i_exp(1, -(prec as i32) / 2));
    const MAX_LEVEL: u32 = 16;
    for level in 1..=MAX_LEVEL {
        let m = nodes(level);
        let mut k = -m | 1;
        if k < -m {
            k += 2;
        }
        while k <= m {
            raw += integrand(k, level);
            k += 2;
        }
        let estimate = Float::with_val(work, &raw >> level);
        let diff = Float::with_val(work, &estimate - &prev).abs();
        if level >= 3 && diff <= Float::with_val(work, &tol * &estimate) {
            let pi = Float::with_val(work, Constant::Pi);
            let sqrt_2pi = Float::with_val(work, pi * 2u32).sqrt();
            let x32 = Float::with_val(work, x.sqrt_ref()) * &x;
            let value = x32 / (sqrt_2pi * 2u32) * estimate;
            return Ok(Float::with_val(prec, value));
        }
        prev = estimate;
    }
    Err(Error::Quadrature {
        x: x.to_string_radix(10, Some(20)),
        levels: MAX_LEVEL,
    })
}
