//! The Rademacher series for `p(n)` and the explicit estimate obtained by
//! keeping only its `k = 1` term.
//!
//! ```text
//! p(n) = π / (2^{5/4} 3^{3/4} N^{3/4}) Σ_{k>=1} A_k(n)/k · I_{3/2}(π√(2N/3) / k),   N = n - 1/24
//! ```
//!
//! Keeping `k = 1` and bounding the rest gives, for `x = N - j > 0`,
//!
//! ```text
//! p(n - j) ∈ e^{π√(2x/3)} / (4√3 x) · (1 - √3/(√2 π √x) ± h(x))
//! h(x) = 2π² x e^{-π√(2x/3)} / 3 + 8 · 3^{-1/2} π x^{1/2} e^{-(π/2)√(x/2)}
//! ```

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use crate::error::{precondition, Error, Result};
use crate::index::ShiftedIndex;
use crate::interval::Enclosure;
use crate::special::{bessel_i32_closed, KloostermanPhases};

/// Partial sum of the Rademacher series.
#[derive(Debug, Clone)]
pub struct RademacherPartial {
    pub n: u64,
    pub k_max: u64,
    pub value: Float,
    /// `terms[k - 1]` is the contribution of index `k`, prefactor included.
    pub terms: Vec<Float>,
}

/// The two pieces of the single-term estimate at a given argument `x`.
#[derive(Debug, Clone)]
pub struct ErrorBudget {
    /// `√3 / (√2 π √x)`.
    pub main_correction: Enclosure,
    /// `h(x)`.
    pub tail_bound: Enclosure,
}

/// `π√(2x/3)`.
pub fn exponent_argument(x: &Enclosure) -> Enclosure {
    let prec = x.prec();
    let pi = Enclosure::pi(prec);
    &pi * &(x.scale(2) / Enclosure::from_int(prec, 3)).sqrt()
}

/// `√3 / (√2 π √x)`.
pub fn main_correction(x: &Enclosure) -> Enclosure {
    let prec = x.prec();
    let sqrt3 = Enclosure::from_int(prec, 3).sqrt();
    let sqrt2 = Enclosure::from_int(prec, 2).sqrt();
    sqrt3 / (sqrt2 * Enclosure::pi(prec) * x.sqrt())
}

/// `h(x) = 2π² x e^{-π√(2x/3)} / 3 + 8 · 3^{-1/2} π √x e^{-(π/2)√(x/2)}`.
pub fn h_error(x: &Enclosure) -> Enclosure {
    let prec = x.prec();
    let pi = Enclosure::pi(prec);
    let first = pi.square().scale(2) * x * (-exponent_argument(x)).exp() / Enclosure::from_int(prec, 3);
    let half_pi = &pi / &Enclosure::from_int(prec, 2);
    let decay = (-(half_pi * (x / &Enclosure::from_int(prec, 2)).sqrt())).exp();
    let second = Enclosure::from_int(prec, 8) / Enclosure::from_int(prec, 3).sqrt() * &pi * x.sqrt() * decay;
    first + second
}

/// Upper bound on `h(x)` for an exactly given `x`.
pub fn h_error_upper(x: &Rational, prec: u32) -> Float {
    h_error(&Enclosure::from_rational(prec, x)).hi().clone()
}

impl ErrorBudget {
    pub fn at(x: &Rational, prec: u32) -> Self {
        let x = Enclosure::from_rational(prec, x);
        ErrorBudget {
            main_correction: main_correction(&x),
            tail_bound: h_error(&x),
        }
    }
}

/// `e^{π√(2x/3)} / (4√3 x)`, the main term at shifted argument `x`.
pub fn main_term(x: &Enclosure) -> Enclosure {
    let prec = x.prec();
    let sqrt3 = Enclosure::from_int(prec, 3).sqrt();
    exponent_argument(x).exp() / (sqrt3.scale(4) * x)
}

/// Certified enclosure of `p(n - j)` from the single-term estimate at
/// `x = N - j`. Requires `N - j > 0`, i.e. `j < n`.
pub fn single_term_interval(n: u64, j: u64, prec: u32) -> Result<Enclosure> {
    if n == 0 {
        return Err(precondition("p(n - j) estimate requires n >= 1"));
    }
    if j >= n {
        return Err(precondition(format!(
            "p(n - j) estimate requires N - j > 0, i.e. j < n (got n = {n}, j = {j})"
        )));
    }
    let x = ShiftedIndex::new(n).shifted_minus(j);
    Ok(single_term_enclosure(&x, prec))
}

/// The single-term enclosure at an arbitrary positive shifted argument.
pub fn single_term_enclosure(x: &Rational, prec: u32) -> Enclosure {
    let xe = Enclosure::from_rational(prec, x);
    let budget = ErrorBudget {
        main_correction: main_correction(&xe),
        tail_bound: h_error(&xe),
    };
    let one = Enclosure::from_int(prec, 1);
    let bracket = Enclosure::center_radius(&(&one - &budget.main_correction), &budget.tail_bound);
    main_term(&xe) * bracket
}

/// The classical leading asymptotic `e^{π√(2n/3)} / (4√3 n)` (unshifted `n`).
pub fn leading_asymptotic(n: u64, prec: u32) -> Enclosure {
    main_term(&Enclosure::from_int(prec, n as i64))
}

fn rademacher_prefactor(shifted: &Rational, prec: u32) -> Float {
    let n = Float::with_val(prec, shifted);
    let pi = Float::with_val(prec, Constant::Pi);
    let two_54 = Float::with_val(prec, 2).pow(Float::with_val(prec, 1.25));
    let three_34 = Float::with_val(prec, 3).pow(Float::with_val(prec, 0.75));
    let n_34 = n.pow(Float::with_val(prec, 0.75));
    pi / (two_54 * three_34 * n_34)
}

/// `X = π√(2N/3)` as a float.
fn bessel_argument(shifted: &Rational, prec: u32) -> Float {
    let two_thirds = Float::with_val(prec, shifted) * 2u32 / 3u32;
    Float::with_val(prec, Constant::Pi) * two_thirds.sqrt()
}

fn rademacher_term(
    phases: &KloostermanPhases,
    n: u64,
    prefactor: &Float,
    big_x: &Float,
    prec: u32,
) -> Float {
    let k = phases.k();
    let (a_k, _) = phases.eval(n, prec);
    let arg = Float::with_val(prec, big_x / k);
    let bessel = bessel_i32_closed(&arg, prec).expect("positive argument");
    Float::with_val(prec, prefactor * a_k) * bessel / k
}

/// Sum of the first `k_max` terms of the series at working precision `prec`.
pub fn rademacher_partial(n: u64, k_max: u64, prec: u32) -> Result<RademacherPartial> {
    if n == 0 {
        return Err(precondition("the Rademacher series needs n >= 1"));
    }
    if k_max == 0 {
        return Err(precondition("the Rademacher series needs K >= 1"));
    }
    let shifted = ShiftedIndex::new(n).shifted().clone();
    let prefactor = rademacher_prefactor(&shifted, prec);
    let big_x = bessel_argument(&shifted, prec);
    let terms: Vec<Float> = (1..=k_max)
        .map(|k| rademacher_term(&KloostermanPhases::new(k), n, &prefactor, &big_x, prec))
        .collect();
    let mut value = Float::with_val(prec, 0);
    for t in &terms {
        value += t;
    }
    Ok(RademacherPartial {
        n,
        k_max,
        value,
        terms,
    })
}

/// Working precision used by [`rademacher_round`]: at least `prec`, and
/// enough for `log2 p(n)` integer bits plus 64 guard bits.
pub fn rounding_precision(n: u64, prec: u32) -> u32 {
    let x = std::f64::consts::PI * (2.0 * n as f64 / 3.0).sqrt();
    let int_bits = (x / std::f64::consts::LN_2).ceil() as u32;
    prec.max(int_bits + 64)
}

/// Upper bound for `|p(n) - Σ_{k<=K}|`, the smaller of two explicit bounds:
///
/// * Rademacher's remainder estimate (needs `n >= 2`)
///   `44π²/(225√3) K^{-1/2} + π√2/75 · (K/(n-1))^{1/2} sinh(π√(2n/3)/K)`;
/// * `|A_k(n)| <= k` with `I_{3/2}(z) <= (z/2)^{3/2} cosh(z) / Γ(5/2)`,
///   summed against `Σ_{k>K} k^{-3/2} <= 2/√K`.
///
/// Evaluated in `f64`; callers leave slack for rounding.
pub fn truncation_bound(n: u64, k: u64) -> f64 {
    use std::f64::consts::PI;
    let kf = k as f64;
    let shifted = n as f64 - 1.0 / 24.0;
    let big_x = PI * (2.0 * shifted / 3.0).sqrt();
    let prefactor = PI / (2f64.powf(1.25) * 3f64.powf(0.75) * shifted.powf(0.75));
    let gamma_5_2 = 0.75 * PI.sqrt();
    let crude = prefactor * (big_x / 2.0).powf(1.5) / gamma_5_2 * (big_x / (kf + 1.0)).cosh() * 2.0 / kf.sqrt();
    if n < 2 {
        return crude;
    }
    let nf = n as f64;
    let rademacher = 44.0 * PI * PI / (225.0 * 3f64.sqrt()) / kf.sqrt()
        + PI * 2f64.sqrt() / 75.0 * (kf / (nf - 1.0)).sqrt() * (PI * (2.0 * nf / 3.0).sqrt() / kf).sinh();
    crude.min(rademacher)
}

/// `p(n)` recovered by rounding a partial sum of the series.
///
/// Terms are added until [`truncation_bound`] drops below 0.2; the partial
/// sum is then within 0.25 of `p(n)` once the working precision covers
/// `log2 p(n)` bits with guard bits to spare (see [`rounding_precision`]).
/// Fails if the bound is not reached by `K = max(10⌈√n⌉, 200)` or if the
/// final partial sum is not within 0.25 of an integer.
pub fn rademacher_round(n: u64, prec: u32) -> Result<Integer> {
    if n == 0 {
        return Err(precondition("the Rademacher series needs n >= 1"));
    }
    let work = rounding_precision(n, prec);
    let shifted = ShiftedIndex::new(n).shifted().clone();
    let prefactor = rademacher_prefactor(&shifted, work);
    let big_x = bessel_argument(&shifted, work);
    let k_max = (10 * (n as f64).sqrt().ceil() as u64).max(200);

    let mut sum = Float::with_val(work, 0);
    for k in 1..=k_max {
        sum += rademacher_term(&KloostermanPhases::new(k), n, &prefactor, &big_x, work);
        if truncation_bound(n, k) < 0.2 {
            let nearest = sum.to_integer().expect("finite partial sum");
            let off = Float::with_val(work, &sum - &nearest).abs();
            return if off < 0.25 {
                Ok(nearest)
            } else {
                Err(Error::NoStabilization { n, k_max: k })
            };
        }
    }
    Err(Error::NoStabilization { n, k_max })
}

/// `Σ_{k=from}^{to} I_{3/2}(X / k)`.
pub fn bessel_tail_sum(big_x: &Float, from: u64, to: u64, prec: u32) -> Float {
    let mut acc = Float::with_val(prec, 0);
    for k in from..=to {
        let arg = Float::with_val(prec, big_x / k);
        acc += bessel_i32_closed(&arg, prec).expect("positive argument");
    }
    acc
}

/// `4√(X/π) e^{X/2}`, the bound on `Σ_{k>=2} I_{3/2}(X/k)`.
pub fn error_bessels_bound(big_x: &Float, prec: u32) -> Float {
    let pi = Float::with_val(prec, Constant::Pi);
    let root = Float::with_val(prec, big_x / pi).sqrt();
    let e = Float::with_val(prec, big_x / 2u32).exp();
    root * e * 4u32
}

/// `X = π√(2N/3)` for the index `n`.
pub fn rademacher_argument(n: u64, prec: u32) -> Float {
    bessel_argument(ShiftedIndex::new(n).shifted(), prec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::PartitionTable;

    const P: u32 = 128;

    #[test]
    fn one_term_is_close_at_14() {
        let r = rademacher_partial(14, 1, P).unwrap();
        let v = r.value.to_f64();
        assert!((v - 135.0).abs() < 1.35, "{v}");
    }

    #[test]
    fn eight_terms_round_to_p_100() {
        let r = rademacher_partial(100, 8, P).unwrap();
        let t = PartitionTable::new();
        assert_eq!(r.value.to_integer().unwrap(), t.p_exact(100));
        assert_eq!(r.terms.len(), 8);
    }

    #[test]
    fn later_terms_shrink_at_500() {
        let r = rademacher_partial(500, 12, P).unwrap();
        // A_k(n) can vanish, so compare against the bound k · I(X/k)/k
        let big_x = rademacher_argument(500, P);
        let pref = rademacher_prefactor(ShiftedIndex::new(500).shifted(), P);
        for k in 2..12u64 {
            let cap = Float::with_val(P, &pref * bessel_i32_closed(&Float::with_val(P, &big_x / k), P).unwrap());
            assert!(Float::with_val(P, r.terms[k as usize - 1].abs_ref()) <= cap);
        }
        assert!(r.terms[0].clone().abs() > r.terms[1].clone().abs());
    }

    #[test]
    fn rounding_recovers_p() {
        let t = PartitionTable::new();
        assert_eq!(rademacher_round(1, P).unwrap(), 1);
        // 1597 was misrounded by a stop-when-stable rule
        for n in [2u64, 3, 10, 57, 200, 777, 1597, 2000] {
            assert_eq!(rademacher_round(n, P).unwrap(), t.p_exact(n), "n = {n}");
        }
    }

    #[test]
    fn truncation_bound_covers_actual_error() {
        let t = PartitionTable::new();
        for (n, k) in [(1u64, 30u64), (10, 20), (300, 25), (1597, 60)] {
            let work = rounding_precision(n, P);
            let partial = rademacher_partial(n, k, work).unwrap();
            let err = Float::with_val(work, &partial.value - &Float::with_val(work, t.p_exact(n))).abs();
            assert!(err.to_f64() <= truncation_bound(n, k), "n = {n}, K = {k}");
        }
        assert!(truncation_bound(2000, 40) > truncation_bound(2000, 80));
    }

    #[test]
    fn h_is_positive_and_dominated() {
        for x in [1i64, 5, 12, 13, 50, 400, 10_000] {
            let h = h_error(&Enclosure::from_int(P, x));
            assert!(h.is_positive());
            if x >= 12 {
                let xf = Float::with_val(P, x);
                let dom = Float::with_val(P, xf.sqrt_ref())
                    * Float::with_val(P, -(Float::with_val(P, Constant::Pi) / 2u32) * (xf / 2u32).sqrt()).exp()
                    * 15u32;
                assert!(*h.hi() <= dom, "x = {x}");
            }
        }
    }

    #[test]
    fn h_at_twelve_regression() {
        // independent 40-digit evaluation: h(12) = 1.08307658497907669917...
        let h = h_error_upper(&Rational::from(12), P).to_f64();
        assert!((h - 1.083_076_584_979_076_7).abs() < 1e-14, "{h}");
    }

    #[test]
    fn single_term_examples() {
        let t = PartitionTable::new();
        assert!(single_term_interval(14, 0, P).unwrap().contains_integer(&Integer::from(135)));
        assert!(single_term_interval(100, 10, P).unwrap().contains_integer(&t.p_exact(90)));
        let e = single_term_interval(500, 0, P).unwrap();
        let rel = (e.width() / e.mid()).to_f64();
        assert!(rel < 1e-3, "{rel}");
        assert!(single_term_interval(5, 5, P).is_err());
        assert!(single_term_interval(0, 0, P).is_err());
    }

    #[test]
    fn budget_parts() {
        let b = ErrorBudget::at(&Rational::from((335, 24)), P);
        assert!(b.tail_bound.is_positive());
        let c = b.main_correction.to_f64_bounds();
        assert!((c.0 - 0.3898 / (335.0f64 / 24.0).sqrt()).abs() < 1e-3);
    }

    #[test]
    fn tail_sum_under_bound() {
        for n in [50u64, 500, 5000] {
            let big_x = rademacher_argument(n, P);
            let tail = bessel_tail_sum(&big_x, 2, 1000, P);
            assert!(tail <= error_bessels_bound(&big_x, P), "n = {n}");
        }
    }
}
