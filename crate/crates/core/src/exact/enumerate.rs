//! Brute-force counting used as independent oracles for the pentagonal
//! engine. Nothing in this file relies on the pentagonal number theorem.

use rug::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// Largest `n` accepted by [`p_enumerate_oracle`].
pub const P_ORACLE_MAX: u64 = 90;
/// Largest `n` accepted by [`nonkary_enumerate_oracle`].
pub const NONKARY_ORACLE_MAX: u64 = 60;
/// Largest `n` for which [`Partition::all`] is allowed to list partitions.
const LISTING_MAX: u64 = 40;

/// A partition: a non-increasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds a partition from parts in any order.
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Precondition("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn largest(&self) -> u64 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains_part(&self, k: u64) -> bool {
        self.parts.contains(&k)
    }

    /// Dyson's rank: largest part minus number of parts.
    pub fn dyson_rank(&self) -> i64 {
        self.largest() as i64 - self.parts.len() as i64
    }

    /// Adds `ell` to the largest part. The empty partition maps to `(ell)`
    /// (or stays empty when `ell = 0`).
    pub fn bump_largest(&self, ell: u64) -> Partition {
        let mut parts = self.parts.clone();
        match parts.first_mut() {
            Some(first) => *first += ell,
            None if ell > 0 => parts.push(ell),
            None => {}
        }
        Partition { parts }
    }

    /// Every partition of `n`, in reverse lexicographic order.
    pub fn all(n: u64) -> Result<Vec<Partition>> {
        if n > LISTING_MAX {
            return Err(Error::OracleBound { n, max: LISTING_MAX });
        }
        let mut out = Vec::new();
        let mut stack = Vec::new();
        fill(n, n, &mut stack, &mut out);
        Ok(out)
    }
}

fn fill(rest: u64, max_part: u64, stack: &mut Vec<u64>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: stack.clone() });
        return;
    }
    for part in (1..=max_part.min(rest)).rev() {
        stack.push(part);
        fill(rest - part, part, stack, out);
        stack.pop();
    }
}

/// Counts partitions of every `m <= n` with parts drawn from `allowed`,
/// via the "largest part at most m" recursion.
fn count_with_parts(n: u64, allowed: impl Fn(u64) -> bool) -> u64 {
    let n = n as usize;
    // ways[m] after processing parts 1..=k = partitions of m with parts <= k
    let mut ways = vec![0u64; n + 1];
    ways[0] = 1;
    for part in 1..=n {
        if !allowed(part as u64) {
            continue;
        }
        for m in part..=n {
            ways[m] += ways[m - part];
        }
    }
    ways[n]
}

/// `p(n)` by counting partitions with bounded largest part.
pub fn p_enumerate_oracle(n: u64) -> Result<Integer> {
    if n > P_ORACLE_MAX {
        return Err(Error::OracleBound { n, max: P_ORACLE_MAX });
    }
    Ok(Integer::from(count_with_parts(n, |_| true)))
}

/// Number of partitions of `n` with no part equal to `k`, counted directly.
pub fn nonkary_enumerate_oracle(n: u64, k: u64) -> Result<Integer> {
    if n > NONKARY_ORACLE_MAX {
        return Err(Error::OracleBound { n, max: NONKARY_ORACLE_MAX });
    }
    Ok(Integer::from(count_with_parts(n, |part| part != k)))
}

/// Number of partitions of `n` whose Dyson rank equals `m`, by listing.
pub fn dyson_rank_count(m: i64, n: u64) -> Result<u64> {
    Ok(Partition::all(n)?
        .iter()
        .filter(|p| p.dyson_rank() == m)
        .count() as u64)
}
