use rug::Integer;

use super::ratio::ratio_interval;
use crate::error::{precondition, Result};
use crate::exact::PartitionTable;
use crate::interval::Enclosure;

/// `ν_k(n) - ν_k(n - k)` and its identification with `f(k, n)`.
#[derive(Debug, Clone)]
pub struct NonkaryCheck {
    pub n: u64,
    pub k: u64,
    pub difference: Integer,
    pub f_jn: Integer,
}

impl NonkaryCheck {
    pub fn positive(&self) -> bool {
        self.difference > 0
    }

    pub fn identity_holds(&self) -> bool {
        self.difference == self.f_jn
    }

    pub fn holds(&self) -> bool {
        self.positive() && self.identity_holds()
    }
}

/// Exact `ν_k(n) - ν_k(n - k)`, cross-checked against `f(k, n)`.
/// Requires `n >= 2` and `1 <= k`, `2k <= n`.
pub fn nonkary_diff_check(n: u64, k: u64, table: &PartitionTable) -> Result<NonkaryCheck> {
    if n < 2 {
        return Err(precondition(format!("non-k-ary difference requires n ≥ 2 (got n = {n})")));
    }
    if k == 0 || 2 * k > n {
        return Err(precondition(format!(
            "non-k-ary difference requires 1 ≤ k ≤ n/2 (got n = {n}, k = {k})"
        )));
    }
    let difference = table.nu_k(n as i64, k)? - table.nu_k(n as i64 - k as i64, k)?;
    let f_jn = table.f_jn(n, k)?;
    Ok(NonkaryCheck {
        n,
        k,
        difference,
        f_jn,
    })
}

/// Enclosure of `ν_k(n) / p(n) = 1 - p(n - k)/p(n)` from the ratio estimate.
pub fn nonkary_ratio_interval(n: u64, k: u64, prec: u32) -> Result<Enclosure> {
    if k == 0 {
        return Err(precondition("non-k-ary ratio requires k ≥ 1"));
    }
    let r = ratio_interval(n, k, prec)?;
    Ok(Enclosure::from_int(prec, 1) - r.product)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::Rational;

    #[test]
    fn small_case() {
        let t = PartitionTable::new();
        let c = nonkary_diff_check(2, 1, &t).unwrap();
        assert_eq!(c.difference, 1);
        assert!(c.holds());
        assert!(nonkary_diff_check(1, 1, &t).is_err());
        assert!(nonkary_diff_check(5, 3, &t).is_err());
    }

    #[test]
    fn ratio_contains() {
        let t = PartitionTable::new();
        let exact = Rational::from((t.nu_k(400, 3).unwrap(), t.p_exact(400)));
        assert!(nonkary_ratio_interval(400, 3, 128).unwrap().contains_rational(&exact));
    }
}
