//! Closed intervals over MPFR floats with outward rounding.
//!
//! Every operation rounds its lower endpoint toward −∞ and its upper
//! endpoint toward +∞, so if the inputs contain the true real numbers, the
//! output contains the true result.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::float::{Constant, Round, Special};
use rug::{Float, Integer, Rational};

#[derive(Debug, Clone, PartialEq)]
pub struct Enclosure {
    lo: Float,
    hi: Float,
}

fn down<T>(prec: u32, v: T) -> Float
where
    Float: rug::Assign<T> + rug::ops::AssignRound<T, Round = Round, Ordering = Ordering>,
{
    Float::with_val_round(prec, v, Round::Down).0
}

fn up<T>(prec: u32, v: T) -> Float
where
    Float: rug::Assign<T> + rug::ops::AssignRound<T, Round = Round, Ordering = Ordering>,
{
    Float::with_val_round(prec, v, Round::Up).0
}

impl Enclosure {
    /// Interval `[lo, hi]`. Panics if `lo > hi` or either endpoint is NaN.
    pub fn new(lo: Float, hi: Float) -> Self {
        assert!(
            !lo.is_nan() && !hi.is_nan() && lo <= hi,
            "invalid enclosure [{lo}, {hi}]"
        );
        Enclosure { lo, hi }
    }

    pub fn point(x: Float) -> Self {
        Enclosure {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn entire(prec: u32) -> Self {
        Enclosure {
            lo: Float::with_val(prec, Special::NegInfinity),
            hi: Float::with_val(prec, Special::Infinity),
        }
    }

    pub fn from_integer(prec: u32, v: &Integer) -> Self {
        Enclosure {
            lo: down(prec, v),
            hi: up(prec, v),
        }
    }

    pub fn from_int(prec: u32, v: i64) -> Self {
        Self::from_integer(prec, &Integer::from(v))
    }

    pub fn from_rational(prec: u32, v: &Rational) -> Self {
        Enclosure {
            lo: down(prec, v),
            hi: up(prec, v),
        }
    }

    /// Encloses the exact ratio `num / den`, e.g. `ratio(p, 271, 100)` for
    /// the constant 2.71.
    pub fn ratio(prec: u32, num: i64, den: i64) -> Self {
        Self::from_rational(prec, &Rational::from((num, den)))
    }

    pub fn pi(prec: u32) -> Self {
        Enclosure {
            lo: down(prec, Constant::Pi),
            hi: up(prec, Constant::Pi),
        }
    }

    /// `center ± radius`, using the upper bound of `radius`.
    pub fn center_radius(center: &Enclosure, radius: &Enclosure) -> Self {
        let prec = center.prec().max(radius.prec());
        Enclosure {
            lo: down(prec, &center.lo - &radius.hi),
            hi: up(prec, &center.hi + &radius.hi),
        }
    }

    pub fn lo(&self) -> &Float {
        &self.lo
    }

    pub fn hi(&self) -> &Float {
        &self.hi
    }

    pub fn prec(&self) -> u32 {
        self.lo.prec().max(self.hi.prec())
    }

    /// Width `hi - lo`, rounded up.
    pub fn width(&self) -> Float {
        up(self.prec(), &self.hi - &self.lo)
    }

    /// Midpoint, rounded to nearest. Not an enclosure of anything.
    pub fn mid(&self) -> Float {
        let s = Float::with_val(self.prec() + 1, &self.lo + &self.hi);
        Float::with_val(self.prec(), s / 2u32)
    }

    pub fn contains_rational(&self, v: &Rational) -> bool {
        self.lo <= *v && *v <= self.hi
    }

    pub fn contains_integer(&self, v: &Integer) -> bool {
        self.lo <= *v && *v <= self.hi
    }

    pub fn contains_float(&self, v: &Float) -> bool {
        self.lo <= *v && *v <= self.hi
    }

    /// Whether `other ⊆ self`.
    pub fn contains(&self, other: &Enclosure) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn is_positive(&self) -> bool {
        self.lo > 0
    }

    pub fn is_negative(&self) -> bool {
        self.hi < 0
    }

    pub fn contains_zero(&self) -> bool {
        self.lo <= 0 && self.hi >= 0
    }

    /// Certified `self < other` for every pair of enclosed values.
    pub fn certainly_lt(&self, other: &Enclosure) -> bool {
        self.hi < other.lo
    }

    pub fn hull(&self, other: &Enclosure) -> Enclosure {
        Enclosure {
            lo: self.lo.clone().min(&other.lo),
            hi: self.hi.clone().max(&other.hi),
        }
    }

    pub fn exp(&self) -> Enclosure {
        let prec = self.prec();
        Enclosure {
            lo: down(prec, self.lo.exp_ref()),
            hi: up(prec, self.hi.exp_ref()),
        }
    }

    /// Square root; the part of the interval below zero is discarded.
    /// Panics if the whole interval is negative.
    pub fn sqrt(&self) -> Enclosure {
        assert!(self.hi >= 0, "sqrt of a negative enclosure");
        let prec = self.prec();
        let lo = if self.lo < 0 {
            Float::with_val(prec, 0)
        } else {
            down(prec, self.lo.sqrt_ref())
        };
        Enclosure {
            lo,
            hi: up(prec, self.hi.sqrt_ref()),
        }
    }

    /// Natural logarithm; requires a positive interval.
    pub fn ln(&self) -> Enclosure {
        assert!(self.lo > 0, "ln of a non-positive enclosure");
        let prec = self.prec();
        Enclosure {
            lo: down(prec, self.lo.ln_ref()),
            hi: up(prec, self.hi.ln_ref()),
        }
    }

    pub fn abs(&self) -> Enclosure {
        if self.lo >= 0 {
            self.clone()
        } else if self.hi <= 0 {
            -self
        } else {
            let hi = Float::with_val(self.prec(), -&self.lo).max(&self.hi);
            Enclosure {
                lo: Float::with_val(self.prec(), 0),
                hi,
            }
        }
    }

    pub fn square(&self) -> Enclosure {
        let a = self.abs();
        let prec = self.prec();
        Enclosure {
            lo: down(prec, a.lo.square_ref()),
            hi: up(prec, a.hi.square_ref()),
        }
    }

    pub fn recip(&self) -> Enclosure {
        Enclosure::from_int(self.prec(), 1) / self
    }

    pub fn scale(&self, k: i64) -> Enclosure {
        self * &Enclosure::from_int(self.prec(), k)
    }

    /// Both endpoints as `f64` (rounded outward).
    pub fn to_f64_bounds(&self) -> (f64, f64) {
        (self.lo.to_f64_round(Round::Down), self.hi.to_f64_round(Round::Up))
    }
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]",
            self.lo.to_string_radix_round(10, Some(20), Round::Down),
            self.hi.to_string_radix_round(10, Some(20), Round::Up)
        )
    }
}

impl Neg for &Enclosure {
    type Output = Enclosure;
    fn neg(self) -> Enclosure {
        Enclosure {
            lo: Float::with_val(self.hi.prec(), -&self.hi),
            hi: Float::with_val(self.lo.prec(), -&self.lo),
        }
    }
}

impl Neg for Enclosure {
    type Output = Enclosure;
    fn neg(self) -> Enclosure {
        -&self
    }
}

impl Add for &Enclosure {
    type Output = Enclosure;
    fn add(self, rhs: &Enclosure) -> Enclosure {
        let prec = self.prec().max(rhs.prec());
        Enclosure {
            lo: down(prec, &self.lo + &rhs.lo),
            hi: up(prec, &self.hi + &rhs.hi),
        }
    }
}

impl Sub for &Enclosure {
    type Output = Enclosure;
    fn sub(self, rhs: &Enclosure) -> Enclosure {
        let prec = self.prec().max(rhs.prec());
        Enclosure {
            lo: down(prec, &self.lo - &rhs.hi),
            hi: up(prec, &self.hi - &rhs.lo),
        }
    }
}

impl Mul for &Enclosure {
    type Output = Enclosure;
    fn mul(self, rhs: &Enclosure) -> Enclosure {
        let prec = self.prec().max(rhs.prec());
        let pairs = [
            (&self.lo, &rhs.lo),
            (&self.lo, &rhs.hi),
            (&self.hi, &rhs.lo),
            (&self.hi, &rhs.hi),
        ];
        let mut lo: Option<Float> = None;
        let mut hi: Option<Float> = None;
        for (a, b) in pairs {
            // 0 * inf is treated as 0: the finite factor really is zero
            let (l, h) = if (a.is_zero() && b.is_infinite()) || (a.is_infinite() && b.is_zero()) {
                (Float::with_val(prec, 0), Float::with_val(prec, 0))
            } else {
                (down(prec, a * b), up(prec, a * b))
            };
            lo = Some(match lo {
                Some(x) => x.min(&l),
                None => l,
            });
            hi = Some(match hi {
                Some(x) => x.max(&h),
                None => h,
            });
        }
        Enclosure {
            lo: lo.unwrap(),
            hi: hi.unwrap(),
        }
    }
}

impl Div for &Enclosure {
    type Output = Enclosure;
    fn div(self, rhs: &Enclosure) -> Enclosure {
        let prec = self.prec().max(rhs.prec());
        if rhs.contains_zero() {
            return Enclosure::entire(prec);
        }
        let pairs = [
            (&self.lo, &rhs.lo),
            (&self.lo, &rhs.hi),
            (&self.hi, &rhs.lo),
            (&self.hi, &rhs.hi),
        ];
        let lo = pairs
            .iter()
            .map(|(a, b)| down(prec, *a / *b))
            .reduce(|x, y| x.min(&y))
            .unwrap();
        let hi = pairs
            .iter()
            .map(|(a, b)| up(prec, *a / *b))
            .reduce(|x, y| x.max(&y))
            .unwrap();
        Enclosure { lo, hi }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Enclosure> for Enclosure {
            type Output = Enclosure;
            fn $m(self, rhs: Enclosure) -> Enclosure { (&self).$m(&rhs) }
        }
        impl $tr<&Enclosure> for Enclosure {
            type Output = Enclosure;
            fn $m(self, rhs: &Enclosure) -> Enclosure { (&self).$m(rhs) }
        }
        impl $tr<Enclosure> for &Enclosure {
            type Output = Enclosure;
            fn $m(self, rhs: Enclosure) -> Enclosure { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const P: u32 = 128;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn thirds_are_enclosed() {
        let third = Enclosure::ratio(P, 1, 3);
        assert!(third.contains_rational(&rat(1, 3)));
        assert!(third.lo() < third.hi());
        let three = Enclosure::from_int(P, 3);
        let one = &third * &three;
        assert!(one.contains_rational(&rat(1, 1)));
    }

    #[test]
    fn pi_and_sqrt() {
        let pi = Enclosure::pi(P);
        assert!(pi.lo() < pi.hi());
        assert!(*pi.lo() > 3.141592653589793 - 1e-15);
        let two = Enclosure::from_int(P, 2);
        let s = two.sqrt();
        let sq = s.square();
        assert!(sq.contains_rational(&rat(2, 1)));
    }

    #[test]
    fn exp_ln_roundtrip_contains() {
        let x = Enclosure::ratio(P, 7, 5);
        let y = x.exp().ln();
        assert!(y.contains_rational(&rat(7, 5)));
    }

    #[test]
    fn division_by_zero_interval_is_entire() {
        let a = Enclosure::from_int(P, 1);
        let z = Enclosure::new(Float::with_val(P, -1), Float::with_val(P, 1));
        let q = &a / &z;
        assert!(q.lo().is_infinite() && q.hi().is_infinite());
    }

    #[test]
    fn center_radius() {
        let c = Enclosure::from_int(P, 5);
        let r = Enclosure::ratio(P, 1, 10);
        let e = Enclosure::center_radius(&c, &r);
        assert!(e.contains_rational(&rat(49, 10)));
        assert!(e.contains_rational(&rat(51, 10)));
        assert!(!e.contains_rational(&rat(52, 10)));
    }

    fn small_rat() -> impl Strategy<Value = Rational> {
        (-10_000i64..10_000, 1i64..1_000).prop_map(|(n, d)| Rational::from((n, d)))
    }

    proptest! {
        #[test]
        fn arithmetic_contains_exact(a in small_rat(), b in small_rat(), c in small_rat()) {
            let (ea, eb, ec) = (
                Enclosure::from_rational(64, &a),
                Enclosure::from_rational(64, &b),
                Enclosure::from_rational(64, &c),
            );
            let e = &(&ea * &eb) - &(&ec + &ea);
            let exact = Rational::from(&a * &b) - Rational::from(&c + &a);
            prop_assert!(e.contains_rational(&exact));
            if b != 0 {
                let q = &ea / &eb;
                prop_assert!(q.contains_rational(&Rational::from(&a / &b)));
            }
            let sq = ea.square();
            prop_assert!(sq.contains_rational(&Rational::from(a.square_ref())));
        }

        #[test]
        fn exp_is_monotone_enclosure(n in -2000i64..2000, d in 1i64..50) {
            let x = Rational::from((n, d));
            let e = Enclosure::from_rational(96, &x).exp();
            // compare against a much more precise evaluation
            let precise = Float::with_val(512, &x).exp();
            prop_assert!(e.contains_float(&precise));
        }
    }
}
