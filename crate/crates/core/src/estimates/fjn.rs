use rug::Rational;

use super::constants::{gap_coefficient, over, sqrt6};
use crate::error::{precondition, Result};
use crate::index::ShiftedIndex;
use crate::interval::Enclosure;

/// Enclosure of `f(j, n) / p(n)`:
///
/// ```text
/// 1 + e^{-√2πj/√(3N)} · A - e^{-πj/√(6N)} · B
/// A = 1 + c/√N + 2j/N - πj²/(√6 N^{3/2}) ± 2075/N
/// B = 2 + 2c/√N + 2j/N - πj²/(2√6 N^{3/2}) ± 3926/N
/// ```
///
/// with `c = √3/(√2π) - √3/√(2π)`.
#[derive(Debug, Clone)]
pub struct FjnEstimate {
    pub index: ShiftedIndex,
    pub j: u64,
    /// `e^{-√2πj/√(3N)}`.
    pub exp_a: Enclosure,
    /// `e^{-πj/√(6N)}`.
    pub exp_b: Enclosure,
    pub term_a: Enclosure,
    pub term_b: Enclosure,
    pub total: Enclosure,
}

impl FjnEstimate {
    pub fn contains(&self, exact: &Rational) -> bool {
        self.total.contains_rational(exact)
    }
}

/// The pieces of the second-difference estimate with explicit error
/// constants `rad_a`, `rad_b` (numerators of `·/N`).
pub(crate) fn fjn_pieces(
    big_n: &Enclosure,
    j: u64,
    rad_a: i64,
    rad_b: i64,
    with_shift_terms: bool,
) -> (Enclosure, Enclosure, Enclosure, Enclosure, Enclosure) {
    let prec = big_n.prec();
    let one = Enclosure::from_int(prec, 1);
    let jj = Enclosure::from_int(prec, j as i64);
    let pi = Enclosure::pi(prec);
    let root = big_n.sqrt();
    let c = gap_coefficient(prec);

    let b = &pi * &jj / (sqrt6(prec) * &root);
    let exp_b = (-&b).exp();
    let exp_a = (-b.scale(2)).exp();

    let mut center_a = &one + &c / &root;
    let mut center_b = one.scale(2) + c.scale(2) / &root;
    if with_shift_terms {
        let j_over = jj.scale(2) / big_n;
        let j_sq = &pi * jj.square() / (sqrt6(prec) * big_n * &root);
        center_a = center_a + &j_over - &j_sq;
        center_b = center_b + &j_over - j_sq / Enclosure::from_int(prec, 2);
    }
    let term_a = Enclosure::center_radius(&center_a, &over(prec, rad_a, 1, big_n));
    let term_b = Enclosure::center_radius(&center_b, &over(prec, rad_b, 1, big_n));
    let total = &one + &exp_a * &term_a - &exp_b * &term_b;
    (exp_a, exp_b, term_a, term_b, total)
}

/// Total enclosure at shifted index `big_n`.
pub fn fjn_formula(big_n: &Enclosure, j: u64) -> Enclosure {
    fjn_pieces(big_n, j, 2075, 3926, true).4
}

/// Second-difference estimate, valid for `n >= 14` and `1 <= j < √N/4`.
pub fn fjn_ratio_interval(n: u64, j: u64, prec: u32) -> Result<FjnEstimate> {
    if n < 14 {
        return Err(precondition(format!("second-difference estimate requires n ≥ 14 (got n = {n})")));
    }
    if j == 0 {
        return Err(precondition("second-difference estimate requires j ≥ 1"));
    }
    let index = ShiftedIndex::new(n);
    if !index.j_below_sqrt_over(j, 4) {
        return Err(precondition(format!(
            "second-difference estimate requires j < √N/4 (got n = {n}, j = {j})"
        )));
    }
    let (exp_a, exp_b, term_a, term_b, total) = fjn_pieces(&index.enclose(prec), j, 2075, 3926, true);
    Ok(FjnEstimate {
        index,
        j,
        exp_a,
        exp_b,
        term_a,
        term_b,
        total,
    })
}
