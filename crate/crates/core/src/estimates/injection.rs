//! Comparing non-j-ary counts at `n - ℓ` and `n` via the map that adds `ℓ`
//! to the largest part.

use std::collections::HashSet;

use rug::Integer;

use crate::error::{precondition, Error, Result};
use crate::exact::{Partition, PartitionTable};

/// Largest `n` for which [`injection_map_check`] enumerates partitions.
pub const INJECTION_MAP_MAX: u64 = 30;

/// `p(n - ℓ) - p(n - ℓ - j) <= p(n) - p(n - j)`, decided exactly.
pub fn injection_inequality(n: u64, j: u64, ell: u64, table: &PartitionTable) -> Result<bool> {
    if n == 0 || j == 0 {
        return Err(precondition("injection inequality requires n ≥ 1 and j ≥ 1"));
    }
    let (n, j, ell) = (n as i64, j as i64, ell as i64);
    let left: Integer = table.p(n - ell) - table.p(n - ell - j);
    let right: Integer = table.p(n) - table.p(n - j);
    Ok(left <= right)
}

/// Outcome of applying `(λ₁, λ₂, …) ↦ (λ₁ + ℓ, λ₂, …)` to every partition
/// of `n - ℓ` without a part `j`.
#[derive(Debug, Clone)]
pub struct InjectionMapCheck {
    pub n: u64,
    pub j: u64,
    pub ell: u64,
    pub domain_size: usize,
    pub distinct_images: usize,
    /// The domain contains the empty partition (`n = ℓ`), on which the map
    /// has no largest part to act; it is sent to `(ℓ)` here.
    pub domain_has_empty: bool,
    /// First image that contains the part `j`, if any.
    pub first_escape: Option<Partition>,
}

impl InjectionMapCheck {
    pub fn injective(&self) -> bool {
        self.distinct_images == self.domain_size
    }

    pub fn preserves_non_j_ary(&self) -> bool {
        self.first_escape.is_none()
    }
}

/// Enumerates the map for `n <= 30`.
pub fn injection_map_check(n: u64, j: u64, ell: u64) -> Result<InjectionMapCheck> {
    if n > INJECTION_MAP_MAX {
        return Err(Error::OracleBound { n, max: INJECTION_MAP_MAX });
    }
    if j == 0 {
        return Err(precondition("injection map requires j ≥ 1"));
    }
    let domain: Vec<Partition> = if ell > n {
        Vec::new()
    } else {
        Partition::all(n - ell)?.into_iter().filter(|p| !p.contains_part(j)).collect()
    };
    let mut seen = HashSet::new();
    let mut first_escape = None;
    for p in &domain {
        let image = p.bump_largest(ell);
        debug_assert_eq!(image.weight(), n);
        if first_escape.is_none() && image.contains_part(j) {
            first_escape = Some(image.clone());
        }
        seen.insert(image);
    }
    Ok(InjectionMapCheck {
        n,
        j,
        ell,
        domain_size: domain.len(),
        distinct_images: seen.len(),
        domain_has_empty: ell == n,
        first_escape,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_at_12_2_3() {
        let c = injection_map_check(12, 2, 3).unwrap();
        assert!(c.injective());
        assert!(c.preserves_non_j_ary());
        let t = PartitionTable::new();
        assert_eq!(c.domain_size as u64, t.nu_k(9, 2).unwrap().to_u64().unwrap());
    }

    #[test]
    fn identity_shift_is_equality() {
        let t = PartitionTable::new();
        for n in 1..200 {
            for j in 1..10 {
                assert!(injection_inequality(n, j, 0, &t).unwrap());
            }
        }
    }

    #[test]
    fn shift_below_j_can_create_the_part_j() {
        // (1,1,1) of 3 becomes (2,1,1)
        let c = injection_map_check(4, 2, 1).unwrap();
        assert!(c.injective());
        assert!(!c.preserves_non_j_ary());
    }

    #[test]
    fn degenerate_point() {
        // p(0) - p(-1) = 1 exceeds p(1) - p(0) = 0
        let t = PartitionTable::new();
        assert!(!injection_inequality(1, 1, 1, &t).unwrap());
        assert!(injection_map_check(1, 1, 1).unwrap().domain_has_empty);
    }
}
