//! Certificates for `f(j, n) = p(n) - 2p(n-j) + p(n-2j) >= 0`.
//!
//! Three routes, tried in order of cost:
//!
//! * `Analytic`: the sufficient condition derived from the second-difference
//!   estimate, checked in interval arithmetic. With
//!   `X = e^{-√2πj/√(3N)} - 2e^{-πj/√(6N)}` it asks that
//!   `e^{-√2πj/√(3N)} (j/N - 3πj²/(4√6 N^{3/2})) > 0`, `-1 < X < 0` and
//!   `S = c/√N + j/N - πj²/(4√6 N^{3/2}) + 3926/N < 0`.
//! * `PropositionBound`: the single-term enclosures of `p(n)`, `p(n-j)`,
//!   `p(n-2j)` combined as `P₀ - 2P_j + P_{2j}` with a positive lower end.
//! * `Exact`: `f(j, n)` from the partition table.
//!
//! For `n <= 13` only the exact route is used.

use rug::Integer;
use serde::Serialize;

use super::constants::{gap_coefficient, over, sqrt6};
use crate::error::{precondition, Result};
use crate::exact::PartitionTable;
use crate::index::ShiftedIndex;
use crate::interval::Enclosure;
use crate::rademacher::single_term_interval;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    Exact,
    Analytic,
    PropositionBound,
}

impl std::fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CertificateKind::Exact => "exact",
            CertificateKind::Analytic => "analytic",
            CertificateKind::PropositionBound => "proposition-bound",
        })
    }
}

/// The quantities of the analytic sufficient condition at `(n, j)`.
#[derive(Debug, Clone)]
pub struct ChainOutcome {
    pub x: Enclosure,
    /// `e^{-√2πj/√(3N)} (j/N - 3πj²/(4√6 N^{3/2}))`.
    pub final_term: Enclosure,
    /// `S = c/√N + j/N - πj²/(4√6 N^{3/2}) + 3926/N`.
    pub s: Enclosure,
    /// `(1 + S) X + final_term + 1`, which must be positive.
    pub first_inequality: Enclosure,
}

impl ChainOutcome {
    pub fn final_term_positive(&self) -> bool {
        self.final_term.is_positive()
    }

    pub fn x_in_unit_interval(&self) -> bool {
        self.x.lo() > &-1 && self.x.is_negative()
    }

    pub fn s_negative(&self) -> bool {
        self.s.is_negative()
    }

    /// Either the reduced condition or the unreduced display is certified.
    pub fn certified(&self) -> bool {
        (self.final_term_positive() && self.x_in_unit_interval() && self.s_negative())
            || self.first_inequality.is_positive()
    }
}

/// Evaluates the analytic sufficient condition at `(n, j)`.
pub fn analytic_chain(n: u64, j: u64, prec: u32) -> ChainOutcome {
    let big_n = ShiftedIndex::new(n).enclose(prec);
    let one = Enclosure::from_int(prec, 1);
    let jj = Enclosure::from_int(prec, j as i64);
    let pi = Enclosure::pi(prec);
    let root = big_n.sqrt();

    let b = &pi * &jj / (sqrt6(prec) * &root);
    let exp_b = (-&b).exp();
    let exp_a = (-b.scale(2)).exp();
    let x = &exp_a - exp_b.scale(2);

    let j_over = &jj / &big_n;
    let j_sq = &pi * jj.square() / (sqrt6(prec).scale(4) * &big_n * &root);
    let final_term = &exp_a * (&j_over - j_sq.scale(3));
    let s = gap_coefficient(prec) / &root + &j_over - &j_sq + over(prec, 3926, 1, &big_n);
    let first_inequality = (&one + &s) * &x + &final_term + &one;
    ChainOutcome {
        x,
        final_term,
        s,
        first_inequality,
    }
}

/// `P(n, 0) - 2P(n, j) + P(n, 2j)` from the single-term enclosures; needs
/// `2j < n`.
pub fn proposition_second_difference(n: u64, j: u64, prec: u32) -> Result<Enclosure> {
    if 2 * j >= n {
        return Err(precondition(format!(
            "single-term second difference requires 2j < n (got n = {n}, j = {j})"
        )));
    }
    let p0 = single_term_interval(n, 0, prec)?;
    let pj = single_term_interval(n, j, prec)?;
    let p2j = single_term_interval(n, 2 * j, prec)?;
    Ok(p0 - pj.scale(2) + p2j)
}

/// Smallest `n` from which on the analytic route certifies shift `j`,
/// located by bisection on `[14, 10^15]`.
pub fn analytic_chain_threshold(j: u64, prec: u32) -> Option<u64> {
    let ok = |n: u64| ShiftedIndex::new(n).j_below_sqrt_over(j, 4) && analytic_chain(n, j, prec).certified();
    let (mut lo, mut hi) = (14u64, 1_000_000_000_000_000u64);
    if !ok(hi) {
        return None;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if ok(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(hi)
}

#[derive(Debug, Clone)]
pub struct ConvexityCertificate {
    pub n: u64,
    pub j: u64,
    pub holds: bool,
    pub kind: CertificateKind,
    /// `n >= 14` and `j < √N/4`, where the analytic route is licensed.
    /// `j = √N/4` never occurs since `N` is not an integer.
    pub in_theorem_range: bool,
    pub chain: Option<ChainOutcome>,
    pub exact_value: Option<Integer>,
}

/// Certifies `f(j, n) >= 0` for `n >= 2`, `1 <= j`, `2j <= n`.
pub fn convexity_certificate(n: u64, j: u64, table: &PartitionTable, prec: u32) -> Result<ConvexityCertificate> {
    if n < 2 {
        return Err(precondition(format!("convexity certificate requires n ≥ 2 (got n = {n})")));
    }
    if j == 0 || 2 * j > n {
        return Err(precondition(format!(
            "convexity certificate requires 1 ≤ j ≤ n/2 (got n = {n}, j = {j})"
        )));
    }
    let index = ShiftedIndex::new(n);
    let in_theorem_range = n >= 14 && index.j_below_sqrt_over(j, 4);
    let mut cert = ConvexityCertificate {
        n,
        j,
        holds: false,
        kind: CertificateKind::Exact,
        in_theorem_range,
        chain: None,
        exact_value: None,
    };
    if n >= 14 {
        if in_theorem_range {
            let chain = analytic_chain(n, j, prec);
            let ok = chain.certified();
            cert.chain = Some(chain);
            if ok {
                cert.holds = true;
                cert.kind = CertificateKind::Analytic;
                return Ok(cert);
            }
        }
        if 2 * j < n && proposition_second_difference(n, j, prec)?.is_positive() {
            cert.holds = true;
            cert.kind = CertificateKind::PropositionBound;
            return Ok(cert);
        }
    }
    let f = table.f_jn(n, j)?;
    cert.holds = f >= 0;
    cert.exact_value = Some(f);
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples_are_exact() {
        let t = PartitionTable::new();
        let c = convexity_certificate(2, 1, &t, 128).unwrap();
        assert!(c.holds && c.kind == CertificateKind::Exact);
        assert_eq!(c.exact_value.unwrap(), 1);
        let c = convexity_certificate(14, 1, &t, 128).unwrap();
        assert!(c.holds);
        assert!(!c.in_theorem_range);
    }

    #[test]
    fn large_cases_avoid_exact() {
        let t = PartitionTable::new();
        let c = convexity_certificate(5000, 10, &t, 128).unwrap();
        assert!(c.holds);
        assert_eq!(c.kind, CertificateKind::PropositionBound);
        assert!(c.chain.as_ref().is_some_and(|ch| !ch.s_negative()));
    }

    #[test]
    fn chain_pieces_at_desk_scale() {
        let ch = analytic_chain(10_000, 20, 128);
        assert!(ch.final_term_positive());
        assert!(ch.x_in_unit_interval());
        // 3926/N dominates 0.301/√N until N ≈ 1.7e8
        assert!(!ch.s_negative());
    }

    #[test]
    fn chain_certifies_far_out() {
        let ch = analytic_chain(400_000_000, 100, 128);
        assert!(ch.certified());
        let start = analytic_chain_threshold(1, 128).unwrap();
        assert!(start > 100_000_000 && start < 400_000_000, "{start}");
    }

    #[test]
    fn second_difference_matches_exact() {
        let t = PartitionTable::new();
        let enc = proposition_second_difference(300, 4, 128).unwrap();
        assert!(enc.contains_integer(&t.f_jn(300, 4).unwrap()));
    }
}
