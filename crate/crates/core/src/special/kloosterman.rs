use rug::{Float, Integer, Rational};

use super::dedekind::dedekind_sum;
use crate::error::{Error, Result};

/// The Dedekind sums `s(h, k)` for every `0 <= h < k` coprime to `k`,
/// precomputed so that `A_k(n)` can be evaluated for many `n`.
#[derive(Debug, Clone)]
pub struct KloostermanPhases {
    k: u64,
    terms: Vec<(u64, Rational)>,
}

impl KloostermanPhases {
    pub fn new(k: u64) -> Self {
        assert!(k >= 1, "A_k(n) needs k >= 1");
        let terms = (0..k)
            .filter(|&h| Integer::from(h).gcd(&Integer::from(k)) == 1)
            .map(|h| (h, dedekind_sum(h as i64, k).expect("coprime by construction")))
            .collect();
        KloostermanPhases { k, terms }
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// `(Re, Im)` of `Σ_h exp(πi s(h,k) - 2πi n h / k)`.
    ///
    /// Each phase `s(h,k) - 2nh/k` is reduced modulo 2 exactly before it is
    /// rounded, so the trigonometric arguments stay in `[0, 2)` regardless
    /// of `n` and `k`.
    pub fn eval(&self, n: u64, prec: u32) -> (Float, Float) {
        let mut re = Float::with_val(prec, 0);
        let mut im = Float::with_val(prec, 0);
        let n_mod = n % self.k;
        for (h, s) in &self.terms {
            let shift = Rational::from((Integer::from(2 * n_mod) * *h, Integer::from(self.k)));
            let phase = Rational::from(s - shift);
            let half = Rational::from(&phase / 2u32);
            let floor = Integer::from(half.floor_ref());
            let reduced = phase - floor * 2u32;
            let arg = Float::with_val(prec, &reduced);
            re += Float::with_val(prec, arg.cos_pi_ref());
            im += Float::with_val(prec, arg.sin_pi_ref());
        }
        (re, im)
    }
}

/// `A_k(n)` as a complex pair `(Re, Im)`.
pub fn kloosterman_a_complex(k: u64, n: u64, prec: u32) -> (Float, Float) {
    KloostermanPhases::new(k).eval(n, prec)
}

/// `A_k(n)`, which is real; the imaginary residue is checked against
/// `2^{-prec/2}`.
pub fn kloosterman_a(k: u64, n: u64, prec: u32) -> Result<Float> {
    if k == 0 {
        return Err(Error::Precondition("A_k(n) needs k >= 1".into()));
    }
    let (re, im) = kloosterman_a_complex(k, n, prec);
    let tol = Float::with_val(prec, Float::i_exp(1, -(prec as i32) / 2));
    if im.clone().abs() > tol {
        return Err(Error::ImaginaryResidue {
            k,
            n,
            residue: im.to_f64(),
        });
    }
    Ok(re)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_values() {
        for n in 0..20 {
            let a1 = kloosterman_a(1, n, 128).unwrap();
            assert_eq!(a1, 1);
            let a2 = kloosterman_a(2, n, 128).unwrap();
            let expect = if n % 2 == 0 { 1.0 } else { -1.0 };
            assert!((a2.to_f64() - expect).abs() < 1e-30);
        }
    }

    #[test]
    fn bounded_by_k() {
        for k in 1..=30u64 {
            let phases = KloostermanPhases::new(k);
            for n in [0u64, 1, 7, 50, 123] {
                let (re, im) = phases.eval(n, 128);
                assert!(re.to_f64().abs() <= k as f64 + 1e-20, "A_{k}({n}) = {re}");
                assert!(im.to_f64().abs() < 1e-30);
            }
        }
    }

    #[test]
    fn k_three_by_hand() {
        // s(1,3) = 1/18 and s(2,3) = -1/18, so the h = 2 term is the
        // conjugate of the h = 1 term: A_3(n) = 2 cos(π(1/18 - 2n/3)).
        for n in 0..12u64 {
            let v = kloosterman_a(3, n, 128).unwrap().to_f64();
            let e = 2.0 * (std::f64::consts::PI * (1.0 / 18.0 - 2.0 * n as f64 / 3.0)).cos();
            assert!((v - e).abs() < 1e-12, "A_3({n}) = {v}");
        }
    }

    #[test]
    fn depends_on_n_mod_k() {
        for k in 1..15u64 {
            let p = KloostermanPhases::new(k);
            let (a, _) = p.eval(5, 100);
            let (b, _) = p.eval(5 + 7 * k, 100);
            assert!((a.to_f64() - b.to_f64()).abs() < 1e-25);
        }
    }
}
