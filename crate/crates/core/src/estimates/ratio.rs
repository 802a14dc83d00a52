use rug::Rational;

use super::constants::{main_coefficient, over, shift_coefficient, sqrt6};
use crate::error::{precondition, Result};
use crate::index::ShiftedIndex;
use crate::interval::Enclosure;

/// Enclosure of `p(n - j) / p(n)` as a product of three factors:
///
/// ```text
/// e^{-πj/√(6N)} · (1 + j/N - πj²/(4√6 N^{3/2}) - √3/√(2πN) ± 2.71/N) · (1 + √3/(√(2N) π) ± 1350/N)
/// ```
#[derive(Debug, Clone)]
pub struct RatioEstimate {
    pub index: ShiftedIndex,
    pub j: u64,
    pub exponential_factor: Enclosure,
    pub factor1: Enclosure,
    pub factor2: Enclosure,
    pub product: Enclosure,
}

impl RatioEstimate {
    pub fn contains(&self, exact: &Rational) -> bool {
        self.product.contains_rational(exact)
    }
}

/// The three factors and their product at shifted index `big_n`.
pub fn ratio_formula(big_n: &Enclosure, j: u64) -> (Enclosure, Enclosure, Enclosure, Enclosure) {
    let prec = big_n.prec();
    let one = Enclosure::from_int(prec, 1);
    let jj = Enclosure::from_int(prec, j as i64);
    let pi = Enclosure::pi(prec);
    let root = big_n.sqrt();

    let exponential = (-(&pi * &jj / (sqrt6(prec) * &root))).exp();

    let j_sq_term = &pi * jj.square() / (sqrt6(prec).scale(4) * big_n * &root);
    let center1 = &one + &jj / big_n - j_sq_term - shift_coefficient(prec) / &root;
    let factor1 = Enclosure::center_radius(&center1, &over(prec, 271, 100, big_n));

    let center2 = &one + main_coefficient(prec) / &root;
    let factor2 = Enclosure::center_radius(&center2, &over(prec, 1350, 1, big_n));

    let product = &exponential * &factor1 * &factor2;
    (exponential, factor1, factor2, product)
}

/// Ratio estimate, valid for `n >= 14` and `0 <= j < √N/2`.
pub fn ratio_interval(n: u64, j: u64, prec: u32) -> Result<RatioEstimate> {
    if n < 14 {
        return Err(precondition(format!("ratio estimate requires n ≥ 14 (got n = {n})")));
    }
    let index = ShiftedIndex::new(n);
    if !index.j_below_sqrt_over(j, 2) {
        return Err(precondition(format!(
            "ratio estimate requires j < √N/2 (got n = {n}, j = {j})"
        )));
    }
    let (exponential_factor, factor1, factor2, product) = ratio_formula(&index.enclose(prec), j);
    Ok(RatioEstimate {
        index,
        j,
        exponential_factor,
        factor1,
        factor2,
        product,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::PartitionTable;

    #[test]
    fn zero_shift_contains_one() {
        for n in [14, 100, 1000] {
            assert!(ratio_interval(n, 0, 128).unwrap().contains(&Rational::from(1)));
        }
    }

    #[test]
    fn examples() {
        let t = PartitionTable::new();
        assert!(ratio_interval(14, 1, 128).unwrap().contains(&Rational::from((101, 135))));
        let exact = Rational::from((t.p_exact(985), t.p_exact(1000)));
        assert!(ratio_interval(1000, 15, 128).unwrap().contains(&exact));
    }

    #[test]
    fn preconditions() {
        let e = ratio_interval(13, 1, 128).unwrap_err().to_string();
        assert!(e.contains("requires n ≥ 14"), "{e}");
        // √(100 - 1/24)/2 < 5
        assert!(ratio_interval(100, 4, 128).is_ok());
        assert!(ratio_interval(100, 5, 128).is_err());
    }

    #[test]
    fn product_is_product_of_factors() {
        let r = ratio_interval(500, 7, 128).unwrap();
        let again = &r.exponential_factor * &r.factor1 * &r.factor2;
        assert_eq!(again.lo(), r.product.lo());
        assert_eq!(again.hi(), r.product.hi());
        assert!(r.exponential_factor.hi() < &1.0);
    }
}
