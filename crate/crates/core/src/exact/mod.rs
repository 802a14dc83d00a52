//! Exact partition arithmetic.
//!
//! Everything here works with arbitrary-precision integers and uses the
//! convention `p(m) = 0` for `m < 0`, so differences that reach below zero
//! stay total.

mod enumerate;
mod series;
mod table;

pub use enumerate::{
    dyson_rank_count, nonkary_enumerate_oracle, p_enumerate_oracle, Partition,
    NONKARY_ORACLE_MAX, P_ORACLE_MAX,
};
pub use series::{series_delta_coeffs, PowerSeries};
pub use table::PartitionTable;
