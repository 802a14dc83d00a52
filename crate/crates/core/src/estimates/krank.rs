//! k-rank counts `N_k(m, n)` in the range `m > n/2`, where they reduce to
//! differences of partition numbers:
//!
//! ```text
//! N_k(m, n) = p(n') - p(n' - 1),   N_k(m, n) - N_k(m + 1, n) = f(1, n'),   n' = n - k - m + 1
//! ```
//!
//! Both estimates are taken at `ℓ = n - k - m + 23/24`, the shifted index of
//! `n'`.

use rug::{Integer, Rational};

use super::constants::{main_coefficient, over, shift_coefficient, sqrt6};
use super::fjn::fjn_pieces;
use crate::error::{precondition, Result};
use crate::exact::PartitionTable;
use crate::index::shifted_value;
use crate::interval::Enclosure;

fn check_half(m: u64, n: u64) -> Result<()> {
    if 2 * m <= n {
        return Err(precondition(format!("k-rank identity requires m > n/2 (got m = {m}, n = {n})")));
    }
    Ok(())
}

/// `n' = n - k - m + 1`, possibly negative.
fn shifted_top(k: u64, m: u64, n: u64) -> i64 {
    n as i64 - k as i64 - m as i64 + 1
}

/// `ℓ = n - k - m + 23/24` together with `n'`, after checking `m > n/2`
/// and `ℓ > 16`.
pub fn krank_ell(k: u64, m: u64, n: u64) -> Result<(Rational, u64)> {
    if k == 0 {
        return Err(precondition("k-rank requires k ≥ 1"));
    }
    check_half(m, n)?;
    let top = shifted_top(k, m, n);
    let ell = shifted_value(Integer::from(top));
    if ell <= 16 {
        return Err(precondition(format!(
            "k-rank estimate requires ℓ = n - k - m + 23/24 > 16 (got ℓ = {})",
            ell
        )));
    }
    Ok((ell, top as u64))
}

/// `N_k(m, n) = p(n - k - m + 1) - p(n - k - m)` for `m > n/2`.
pub fn krank_boundary_value(k: u64, m: u64, n: u64, table: &PartitionTable) -> Result<Integer> {
    check_half(m, n)?;
    let top = shifted_top(k, m, n);
    Ok(table.p(top) - table.p(top - 1))
}

/// Exact `N_k(m, n) / p(n')`.
pub fn krank_ratio_exact(k: u64, m: u64, n: u64, table: &PartitionTable) -> Result<Rational> {
    let (_, top) = krank_ell(k, m, n)?;
    let num = krank_boundary_value(k, m, n, table)?;
    Ok(Rational::from((num, table.p_exact(top))))
}

/// Exact `(N_k(m, n) - N_k(m + 1, n)) / p(n')`, computed from the two
/// boundary values.
pub fn krank_diff_exact(k: u64, m: u64, n: u64, table: &PartitionTable) -> Result<Rational> {
    let (_, top) = krank_ell(k, m, n)?;
    let num = krank_boundary_value(k, m, n, table)? - krank_boundary_value(k, m + 1, n, table)?;
    Ok(Rational::from((num, table.p_exact(top))))
}

/// `1 - e^{-π/√(6ℓ)} (1 - √3/√(2πℓ) ± 4.04/ℓ)(1 + √3/(√(2ℓ)π) ± 1350/ℓ)`.
pub fn krank_ratio_formula(ell: &Enclosure) -> Enclosure {
    let prec = ell.prec();
    let one = Enclosure::from_int(prec, 1);
    let root = ell.sqrt();
    let decay = (-(Enclosure::pi(prec) / (sqrt6(prec) * &root))).exp();
    let f1 = Enclosure::center_radius(&(&one - shift_coefficient(prec) / &root), &over(prec, 404, 100, ell));
    let f2 = Enclosure::center_radius(&(&one + main_coefficient(prec) / &root), &over(prec, 1350, 1, ell));
    &one - decay * f1 * f2
}

/// `1 + e^{-√2π/√(3ℓ)} (1 + c/√ℓ ± 2079/ℓ) - e^{-π/√(6ℓ)} (2 + 2c/√ℓ ± 3929/ℓ)`.
pub fn krank_diff_formula(ell: &Enclosure) -> Enclosure {
    fjn_pieces(ell, 1, 2079, 3929, false).4
}

/// Enclosure of `N_k(m, n) / p(n - k - m + 1)`.
pub fn krank_ratio_interval(k: u64, m: u64, n: u64, prec: u32) -> Result<Enclosure> {
    let (ell, _) = krank_ell(k, m, n)?;
    Ok(krank_ratio_formula(&Enclosure::from_rational(prec, &ell)))
}

/// Enclosure of `(N_k(m, n) - N_k(m + 1, n)) / p(n - k - m + 1)`.
pub fn krank_diff_interval(k: u64, m: u64, n: u64, prec: u32) -> Result<Enclosure> {
    let (ell, _) = krank_ell(k, m, n)?;
    Ok(krank_diff_formula(&Enclosure::from_rational(prec, &ell)))
}

/// Smallest `n'` (so `ℓ = n' - 1/24`) from which on the lower end of the
/// difference enclosure is positive, located by bisection on
/// `[17, 10^15]`. `None` if it is not positive even at the top.
pub fn krank_positivity_threshold(prec: u32) -> Option<u64> {
    let positive = |top: u64| {
        let ell = shifted_value(Integer::from(top));
        krank_diff_formula(&Enclosure::from_rational(prec, &ell)).is_positive()
    };
    let (mut lo, mut hi) = (17u64, 1_000_000_000_000_000u64);
    if !positive(hi) {
        return None;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if positive(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::estimates::{fjn_ratio_interval, ratio_interval};
    use crate::exact::dyson_rank_count;

    #[test]
    fn boundary_examples() {
        let t = PartitionTable::new();
        assert_eq!(krank_boundary_value(1, 20, 30, &t).unwrap(), 12);
        assert_eq!(krank_boundary_value(3, 29, 30, &t).unwrap(), 0);
        assert!(krank_boundary_value(1, 15, 30, &t).is_err());
    }

    #[test]
    fn dyson_rank_witness() {
        let t = PartitionTable::new();
        for n in 4..=30u64 {
            for m in n / 2 + 1..=n + 1 {
                let count = dyson_rank_count(m as i64, n).unwrap();
                assert_eq!(krank_boundary_value(2, m, n, &t).unwrap(), count, "m = {m}, n = {n}");
            }
        }
    }

    #[test]
    fn difference_is_f_at_top_index() {
        // N_2(m,n) - N_2(m+1,n) counted directly equals f(1, n - k - m + 1)
        let t = PartitionTable::new();
        for n in 4..=30u64 {
            for m in n / 2 + 1..=n {
                let direct = dyson_rank_count(m as i64, n).unwrap() as i64
                    - dyson_rank_count(m as i64 + 1, n).unwrap() as i64;
                let top = n as i64 - 2 - m as i64 + 1;
                let f = t.p(top) - 2 * t.p(top - 1) + t.p(top - 2);
                assert_eq!(f, direct, "m = {m}, n = {n}");
            }
        }
    }

    #[test]
    fn examples() {
        let t = PartitionTable::new();
        let r = krank_ratio_interval(2, 40, 70, 128).unwrap();
        assert!(r.contains_rational(&krank_ratio_exact(2, 40, 70, &t).unwrap()));
        let d = krank_diff_interval(1, 60, 100, 128).unwrap();
        assert!(d.contains_rational(&krank_diff_exact(1, 60, 100, &t).unwrap()));
    }

    #[test]
    fn positivity_only_far_out() {
        let top = krank_positivity_threshold(128).unwrap();
        assert!(top > 10_000_000, "{top}");
        let below = shifted_value(Integer::from(top - 1));
        assert!(!krank_diff_formula(&Enclosure::from_rational(128, &below)).is_positive());
    }

    #[test]
    fn ell_threshold() {
        // n - k - m = 16 gives ℓ = 16 + 23/24
        assert!(krank_ell(1, 53, 70).is_ok());
        assert!(krank_ell(1, 54, 70).is_err());
    }

    #[test]
    fn estimates_contain_the_underlying_theorems() {
        for (k, m, n) in [(1u64, 60u64, 100u64), (2, 40, 70), (5, 260, 500), (3, 251, 500)] {
            let (_, top) = krank_ell(k, m, n).unwrap();
            let ratio = krank_ratio_interval(k, m, n, 128).unwrap();
            let one = Enclosure::from_int(128, 1);
            let from_ratio = &one - &ratio_interval(top, 1, 128).unwrap().product;
            assert!(ratio.contains(&from_ratio), "ratio ({k},{m},{n})");
            let diff = krank_diff_interval(k, m, n, 128).unwrap();
            assert!(diff.contains(&fjn_ratio_interval(top, 1, 128).unwrap().total), "diff ({k},{m},{n})");
        }
    }
}
