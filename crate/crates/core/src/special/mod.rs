//! Dedekind sums, the Kloosterman-type sums `A_k(n)` of the Rademacher
//! series, and the modified Bessel function `I_{3/2}`.

mod bessel;
mod dedekind;
mod kloosterman;

pub use bessel::{bessel_i32_closed, bessel_i32_quadrature, QUADRATURE_X_MAX};
pub use dedekind::{dedekind_sum, sawtooth, RationalValue};
pub use kloosterman::{kloosterman_a, kloosterman_a_complex, KloostermanPhases};
