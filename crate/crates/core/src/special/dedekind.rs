use rug::{Integer, Rational};

use crate::error::{Error, Result};

/// Exact rationals are kept in lowest terms with a positive denominator.
pub type RationalValue = Rational;

/// The sawtooth `((x))`: `x - floor(x) - 1/2` off the integers, `0` on them.
pub fn sawtooth(x: &Rational) -> Rational {
    if *x.denom() == 1 {
        return Rational::new();
    }
    let (fract, _) = x.clone().fract_floor(Integer::new());
    fract - Rational::from((1, 2))
}

/// `s(h, k) = Σ_{r=1}^{k-1} ((r/k)) ((hr/k))`.
///
/// `h` may be any integer coprime to `k`; the sum only depends on `h mod k`.
/// Evaluated with the O(k) definition in integer arithmetic: for `0 < r < k`
/// we have `((r/k)) = (2r - k) / 2k`, and `hr` is never divisible by `k`.
pub fn dedekind_sum(h: i64, k: u64) -> Result<RationalValue> {
    if k == 0 {
        return Err(Error::NotCoprime { h, k });
    }
    let h_mod = h.rem_euclid(k as i64) as u64;
    if Integer::from(h_mod).gcd(&Integer::from(k)) != 1 {
        return Err(Error::NotCoprime { h, k });
    }
    let kk = i128::from(k);
    let mut numer: i128 = 0;
    for r in 1..k {
        let hr = (u128::from(h_mod) * u128::from(r) % u128::from(k)) as i128;
        numer += (2 * i128::from(r) - kk) * (2 * hr - kk);
    }
    let denom = Integer::from(k).square() * 4u32;
    Ok(Rational::from((Integer::from(numer), denom)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    fn direct(h: i64, k: u64) -> Rational {
        let mut acc = Rational::new();
        for rr in 1..k as i64 {
            acc += sawtooth(&r(rr, k as i64)) * sawtooth(&r(h * rr, k as i64));
        }
        acc
    }

    #[test]
    fn sawtooth_values() {
        assert_eq!(sawtooth(&r(1, 2)), 0);
        assert_eq!(sawtooth(&r(7, 1)), 0);
        assert_eq!(sawtooth(&r(1, 3)), r(-1, 6));
        assert_eq!(sawtooth(&r(-1, 3)), r(1, 6));
        assert_eq!(sawtooth(&r(7, 4)), r(1, 4));
    }

    #[test]
    fn small_sums() {
        assert_eq!(dedekind_sum(0, 1).unwrap(), 0);
        assert_eq!(dedekind_sum(1, 2).unwrap(), 0);
        assert_eq!(dedekind_sum(1, 3).unwrap(), r(1, 18));
        assert_eq!(dedekind_sum(2, 3).unwrap(), r(-1, 18));
        assert!(dedekind_sum(2, 4).is_err());
        assert!(dedekind_sum(0, 5).is_err());
    }

    #[test]
    fn integer_formula_matches_sawtooth_sum() {
        for k in 1..40u64 {
            for h in 0..k as i64 {
                if Integer::from(h).gcd(&Integer::from(k)) == 1 {
                    assert_eq!(dedekind_sum(h, k).unwrap(), direct(h, k), "s({h},{k})");
                }
            }
        }
    }

    #[test]
    fn odd_and_periodic() {
        for k in 2..30u64 {
            for h in 1..k as i64 {
                if let Ok(s) = dedekind_sum(h, k) {
                    assert_eq!(dedekind_sum(-h, k).unwrap(), -s.clone());
                    assert_eq!(dedekind_sum(h + 3 * k as i64, k).unwrap(), s);
                }
            }
        }
    }

    #[test]
    fn six_k_s_is_integral() {
        for k in 1..60u64 {
            for h in 0..k as i64 {
                if let Ok(s) = dedekind_sum(h, k) {
                    let scaled = s * Integer::from(6 * k);
                    assert_eq!(*scaled.denom(), 1);
                }
            }
        }
    }
}
