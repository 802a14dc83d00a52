//! Exact partition numbers, the Rademacher series, and certified enclosures
//! for ratios and second shifted differences of the partition function.
//!
//! The crate is organised bottom-up:
//!
//! - [`exact`]: arbitrary-precision `p(n)`, shifted differences, non-k-ary
//!   counts, truncated power series and brute-force enumeration oracles.
//! - [`interval`]: [`Enclosure`], closed intervals over MPFR floats with
//!   outward rounding.
//! - [`special`]: Dedekind sums, the Kloosterman-type sums `A_k(n)` and the
//!   Bessel function `I_{3/2}`.
//! - [`rademacher`]: the exact series for `p(n)` and the explicit
//!   single-term estimate with its error function `h`.
//! - [`estimates`]: enclosures for `p(n-j)/p(n)`, `f(j,n)/p(n)`, the k-rank
//!   quantities, and convexity certificates.
//! - [`lab`]: sampled verification of the elementary inequalities used to
//!   build those estimates.
//! - [`verify`]: parameterised sweeps that compare every enclosure against
//!   exact values and produce a [`VerificationReport`].

pub mod error;
pub mod estimates;
pub mod exact;
pub mod index;
pub mod interval;
pub mod lab;
pub mod rademacher;
pub mod report;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{PartitionTable, Partition};
pub use index::ShiftedIndex;
pub use interval::Enclosure;
pub use report::VerificationReport;

/// Default working precision in significand bits.
pub const DEFAULT_PRECISION: u32 = 128;
