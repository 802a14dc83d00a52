use std::sync::RwLock;

use rug::Integer;

use crate::error::{precondition, Result};

/// Memoized exact values of `p(n)` computed with Euler's pentagonal
/// recurrence.
///
/// Growth takes a write lock; reads of already computed values only take a
/// read lock, so a table can be grown once and then shared across a
/// parallel sweep.
#[derive(Debug)]
pub struct PartitionTable {
    values: RwLock<Vec<Integer>>,
}

impl Default for PartitionTable {
    fn default() -> Self {
        Self::new()
    }
}

impl PartitionTable {
    pub fn new() -> Self {
        PartitionTable {
            values: RwLock::new(vec![Integer::from(1)]),
        }
    }

    /// A table that already holds `p(0..=n_max)`.
    pub fn up_to(n_max: u64) -> Self {
        let table = Self::new();
        table.ensure(n_max);
        table
    }

    /// Largest `n` with a stored value.
    pub fn max_n(&self) -> u64 {
        self.values.read().expect("partition table poisoned").len() as u64 - 1
    }

    /// Grows the table so that `p(n)` is stored.
    pub fn ensure(&self, n: u64) {
        if n <= self.max_n() {
            return;
        }
        let mut values = self.values.write().expect("partition table poisoned");
        let n = n as usize;
        if values.len() > n {
            return;
        }
        let missing = n + 1 - values.len();
        values.reserve(missing);
        while values.len() <= n {
            let i = values.len();
            let mut acc = Integer::new();
            for k in 1usize.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > i {
                    break;
                }
                let g2 = k * (3 * k + 1) / 2;
                if k % 2 == 1 {
                    acc += &values[i - g1];
                    if g2 <= i {
                        acc += &values[i - g2];
                    }
                } else {
                    acc -= &values[i - g1];
                    if g2 <= i {
                        acc -= &values[i - g2];
                    }
                }
            }
            values.push(acc);
        }
    }

    /// `p(m)`, with `p(m) = 0` for negative `m`. Grows the table if needed.
    pub fn p(&self, m: i64) -> Integer {
        if m < 0 {
            return Integer::new();
        }
        self.ensure(m as u64);
        self.values.read().expect("partition table poisoned")[m as usize].clone()
    }

    /// `p(n)` for a non-negative `n`.
    pub fn p_exact(&self, n: u64) -> Integer {
        self.p(n as i64)
    }

    /// `f(j, n) = p(n) - 2p(n-j) + p(n-2j)`.
    pub fn f_jn(&self, n: u64, j: u64) -> Result<Integer> {
        if j == 0 {
            return Err(precondition("f(j, n) requires j >= 1"));
        }
        if 2 * j > n {
            return Err(precondition(format!(
                "f(j, n) requires 2j <= n (got n = {n}, j = {j})"
            )));
        }
        let (n, j) = (n as i64, j as i64);
        let mut value = self.p(n);
        value -= self.p(n - j) * 2u32;
        value += self.p(n - 2 * j);
        Ok(value)
    }

    /// `Δ_j^r p(n) = Σ_{i=0}^{r} (-1)^i C(r, i) p(n - ij)`.
    pub fn delta_r_j_direct(&self, n: u64, j: u64, r: u32) -> Result<Integer> {
        if j == 0 {
            return Err(precondition("Δ_j requires j >= 1"));
        }
        if u64::from(r) * j > n {
            return Err(precondition(format!(
                "Δ_j^r p(n) requires r*j <= n (got n = {n}, j = {j}, r = {r})"
            )));
        }
        let mut acc = Integer::new();
        for i in 0..=r {
            let term = Integer::from(Integer::binomial_u(r, i)) * self.p(n as i64 - i64::from(i) * j as i64);
            if i % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        Ok(acc)
    }

    /// Number of partitions of `n` with no part equal to `k`:
    /// `ν_k(n) = p(n) - p(n-k)`. Zero for negative `n`.
    pub fn nu_k(&self, n: i64, k: u64) -> Result<Integer> {
        if k == 0 {
            return Err(precondition("ν_k requires k >= 1"));
        }
        Ok(self.p(n) - self.p(n - k as i64))
    }
}
