use rug::{Integer, Rational};

use crate::interval::Enclosure;

/// The pair `(n, N)` with `N = n - 1/24` held exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedIndex {
    n: u64,
    shifted: Rational,
}

impl ShiftedIndex {
    pub fn new(n: u64) -> Self {
        ShiftedIndex {
            n,
            shifted: shifted_value(Integer::from(n)),
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `N = n - 1/24`.
    pub fn shifted(&self) -> &Rational {
        &self.shifted
    }

    /// `N - j`, the shifted index of `n - j`.
    pub fn shifted_minus(&self, j: u64) -> Rational {
        Rational::from(&self.shifted - j)
    }

    pub fn enclose(&self, prec: u32) -> Enclosure {
        Enclosure::from_rational(prec, &self.shifted)
    }

    /// `j < √N / d`, decided exactly as `(d j)^2 < N`.
    pub fn j_below_sqrt_over(&self, j: u64, d: u64) -> bool {
        let lhs = Integer::from(j * d).square();
        self.shifted > lhs
    }

    /// `j <= √N / d`, decided exactly as `(d j)^2 <= N`.
    pub fn j_at_most_sqrt_over(&self, j: u64, d: u64) -> bool {
        let lhs = Integer::from(j * d).square();
        self.shifted >= lhs
    }

    /// Largest `j >= 0` with `j < √N / d` (`None` if even `j = 0` fails,
    /// which cannot happen for `n >= 1`).
    pub fn max_j_below_sqrt_over(&self, d: u64) -> Option<u64> {
        let mut j = (self.n as f64).sqrt() as u64 / d.max(1) + 2;
        while j > 0 && !self.j_below_sqrt_over(j, d) {
            j -= 1;
        }
        self.j_below_sqrt_over(j, d).then_some(j)
    }

    /// Largest `j >= 0` with `j <= √N / d`.
    pub fn max_j_at_most_sqrt_over(&self, d: u64) -> Option<u64> {
        let mut j = (self.n as f64).sqrt() as u64 / d.max(1) + 2;
        while j > 0 && !self.j_at_most_sqrt_over(j, d) {
            j -= 1;
        }
        self.j_at_most_sqrt_over(j, d).then_some(j)
    }
}

/// `x - 1/24` as an exact rational.
pub fn shifted_value(x: Integer) -> Rational {
    Rational::from((x * 24u32 - 1u32, 24u32))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shifted_is_exact() {
        let idx = ShiftedIndex::new(14);
        assert_eq!(*idx.shifted(), Rational::from((335, 24)));
        assert_eq!(idx.shifted_minus(2), Rational::from((287, 24)));
        assert!(idx.shifted() > &0);
    }

    #[test]
    fn sqrt_bounds() {
        // N = 16 - 1/24 so √N/4 is just below 1
        let idx = ShiftedIndex::new(16);
        assert!(!idx.j_at_most_sqrt_over(1, 4));
        assert_eq!(idx.max_j_at_most_sqrt_over(4), Some(0));
        let idx = ShiftedIndex::new(17);
        assert!(idx.j_at_most_sqrt_over(1, 4));
        assert!(idx.j_below_sqrt_over(1, 4));
        assert_eq!(idx.max_j_below_sqrt_over(2), Some(2));
        // n = 14: √N/2 ≈ 1.87
        assert_eq!(ShiftedIndex::new(14).max_j_below_sqrt_over(2), Some(1));
    }

    #[test]
    fn boundary_never_attained() {
        // (d j)^2 = n - 1/24 has no integer solutions, so < and <= agree
        for n in 1..5000u64 {
            let idx = ShiftedIndex::new(n);
            for d in [1, 2, 4] {
                assert_eq!(idx.max_j_below_sqrt_over(d), idx.max_j_at_most_sqrt_over(d));
            }
        }
    }
}
