use std::ops::Mul;

use rug::Integer;

use crate::error::{precondition, Result};

/// A power series in `q` with exact integer coefficients, truncated after
/// `q^n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Integer>,
}

impl PowerSeries {
    pub fn zero(n_max: usize) -> Self {
        PowerSeries {
            coeffs: vec![Integer::new(); n_max + 1],
        }
    }

    pub fn one(n_max: usize) -> Self {
        let mut s = Self::zero(n_max);
        s.coeffs[0] = Integer::from(1);
        s
    }

    /// Series from explicit coefficients; `n_max` is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<Integer>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least one coefficient");
        PowerSeries { coeffs }
    }

    pub fn n_max(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Integer {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Integer> {
        self.coeffs
    }

    /// `∏_{k=1}^{n_max} (1 - q^k)` truncated, which equals the full infinite
    /// product up to `q^n_max`.
    pub fn euler_product(n_max: usize) -> Self {
        let mut s = Self::one(n_max);
        for k in 1..=n_max {
            s.mul_one_minus_q_pow(k, 1);
        }
        s
    }

    /// `∏_{k>=1} (1 - q^k)^{-1}`, the generating function of `p(n)`.
    pub fn partition_generating(n_max: usize) -> Self {
        let mut s = Self::one(n_max);
        s.div_euler_product();
        s
    }

    /// Multiplies in place by `(1 - q^j)^r`.
    pub fn mul_one_minus_q_pow(&mut self, j: usize, r: u32) {
        assert!(j >= 1);
        for _ in 0..r {
            for i in (j..self.coeffs.len()).rev() {
                let (lo, hi) = self.coeffs.split_at_mut(i);
                hi[0] -= &lo[i - j];
            }
        }
    }

    /// Multiplies in place by `∏_{k>=1} (1 - q^k)^{-1}`, one geometric
    /// factor `1 / (1 - q^k)` at a time.
    pub fn div_euler_product(&mut self) {
        let len = self.coeffs.len();
        for k in 1..len {
            for i in k..len {
                let (lo, hi) = self.coeffs.split_at_mut(i);
                hi[0] += &lo[i - k];
            }
        }
    }

    /// Truncated quotient `self / divisor`. The divisor must have constant
    /// term `±1` so the quotient stays integral.
    pub fn div(&self, divisor: &PowerSeries) -> Result<PowerSeries> {
        let c0 = divisor.coeffs[0].to_i32();
        if c0 != Some(1) && c0 != Some(-1) {
            return Err(precondition("series division needs a divisor with constant term ±1"));
        }
        let c0 = c0.unwrap();
        let n = self.n_max().min(divisor.n_max());
        let mut out = vec![Integer::new(); n + 1];
        for i in 0..=n {
            let mut acc = self.coeffs[i].clone();
            for k in 1..=i {
                if divisor.coeffs[k] != 0 {
                    acc -= Integer::from(&divisor.coeffs[k] * &out[i - k]);
                }
            }
            if c0 == -1 {
                acc = -acc;
            }
            out[i] = acc;
        }
        Ok(PowerSeries { coeffs: out })
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.n_max().min(rhs.n_max());
        let mut out = PowerSeries::zero(n);
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if *a == 0 {
                continue;
            }
            for (k, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                if *b != 0 {
                    out.coeffs[i + k] += Integer::from(a * b);
                }
            }
        }
        out
    }
}

/// Coefficients of `(1 - q^j)^r ∏_{k>=1} (1 - q^k)^{-1}` up to `q^n_max`.
/// The `n`-th coefficient is `Δ_j^r p(n)` (with `p(m) = 0` for `m < 0`).
pub fn series_delta_coeffs(j: usize, r: u32, n_max: usize) -> Result<Vec<Integer>> {
    if j == 0 {
        return Err(precondition("series_delta_coeffs requires j >= 1"));
    }
    let mut s = PowerSeries::one(n_max);
    s.mul_one_minus_q_pow(j, r);
    s.div_euler_product();
    Ok(s.into_coeffs())
}
