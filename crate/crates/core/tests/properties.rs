use std::sync::OnceLock;

use proptest::prelude::*;
use rug::{Integer, Rational};

use shiftdiff::estimates::{fjn_ratio_interval, krank_diff_exact, krank_ell, ratio_interval};
use shiftdiff::exact::{nonkary_enumerate_oracle, series_delta_coeffs, PartitionTable};
use shiftdiff::index::ShiftedIndex;
use shiftdiff::rademacher::single_term_interval;
use shiftdiff::special::dedekind_sum;

const P: u32 = 128;
const TOP: u64 = 20_000;

fn table() -> &'static PartitionTable {
    static T: OnceLock<PartitionTable> = OnceLock::new();
    T.get_or_init(|| PartitionTable::up_to(TOP))
}

/// `(n, j)` with `n` in range and `j` scaled into `[lo, top(n)]`.
fn pair(n_lo: u64, d: u64, j_lo: u64) -> impl Strategy<Value = (u64, u64)> {
    (n_lo..=TOP, 0.0f64..1.0).prop_filter_map("no admissible j", move |(n, t)| {
        let top = ShiftedIndex::new(n).max_j_below_sqrt_over(d)?;
        let j = (j_lo + ((top + 1 - j_lo) as f64 * t) as u64).min(top);
        (top >= j_lo).then_some((n, j))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ratio_enclosure_beyond_sweep((n, j) in pair(14, 2, 0)) {
        let t = table();
        let exact = Rational::from((t.p_exact(n - j), t.p_exact(n)));
        prop_assert!(ratio_interval(n, j, P).unwrap().contains(&exact));
    }

    #[test]
    fn second_difference_enclosure_beyond_sweep((n, j) in pair(14, 4, 1)) {
        let t = table();
        let exact = Rational::from((t.f_jn(n, j).unwrap(), t.p_exact(n)));
        prop_assert!(fjn_ratio_interval(n, j, P).unwrap().total.contains_rational(&exact));
    }

    #[test]
    fn single_term_enclosure_beyond_sweep((n, j) in pair(2, 1, 0)) {
        let exact = Integer::from(table().p_exact(n - j));
        prop_assert!(single_term_interval(n, j, P).unwrap().contains_integer(&exact));
    }

    #[test]
    fn convexity_holds_off_the_sweep((n, j) in pair(14, 4, 1)) {
        prop_assert!(table().f_jn(n, j).unwrap() > 0);
    }

    #[test]
    fn krank_difference_is_second_difference_at_top(k in 1u64..6, extra in 17u64..400, slack in 0u64..50) {
        // n' = n - k - m + 1 = extra; choose m > n/2
        let m = extra + k + slack + 1;
        let n = extra + k + m - 1;
        prop_assume!(2 * m > n && krank_ell(k, m, n).is_ok());
        let t = table();
        let diff = krank_diff_exact(k, m, n, t).unwrap();
        prop_assert_eq!(diff, Rational::from((t.f_jn(extra, 1).unwrap(), t.p_exact(extra))));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn series_matches_table(n in 2u64..400, r in 0u32..4, j in 1u64..40) {
        prop_assume!(u64::from(r) * j <= n);
        let coeffs = series_delta_coeffs(j as usize, r, n as usize).unwrap();
        let t = table();
        prop_assert_eq!(&coeffs[n as usize], &t.delta_r_j_direct(n, j, r).unwrap());
        if r == 2 && 2 * j <= n {
            prop_assert_eq!(&coeffs[n as usize], &t.f_jn(n, j).unwrap());
        }
    }

    #[test]
    fn nonkary_matches_enumeration(n in 0u64..=60, k in 1u64..70) {
        prop_assert_eq!(table().nu_k(n as i64, k).unwrap(), nonkary_enumerate_oracle(n, k).unwrap());
    }

    #[test]
    fn dedekind_sum_symmetries(k in 2u64..200, h in -400i64..400) {
        prop_assume!(Integer::from(h).gcd(&Integer::from(k)) == 1);
        let s = dedekind_sum(h, k).unwrap();
        prop_assert_eq!(dedekind_sum(-h, k).unwrap(), -s.clone());
        prop_assert_eq!(dedekind_sum(h + k as i64, k).unwrap(), s);
    }
}
