//! Acceptance gate. One test per criterion; each prints a single
//! `criterion <id>: PASS|FAIL ...` line and asserts the same verdict.
//!
//! Run with `cargo test -p shiftdiff --test acceptance -- --nocapture` to see
//! the lines. Time limits are wall-clock on the machine running the test.

use std::time::{Duration, Instant};

use shiftdiff::lab::LabConfig;
use shiftdiff::report::VerificationReport;
use shiftdiff::verify;

const P: u32 = 128;

struct Outcome {
    pass: bool,
    summary: String,
}

fn from_reports(reports: &[VerificationReport]) -> Outcome {
    let pass = reports.iter().all(|r| r.pass);
    let cases: u64 = reports.iter().map(|r| r.cases).sum();
    let failures: usize = reports.iter().map(|r| r.failures.len()).sum();
    let mut summary = format!("{cases} cases, {failures} failures");
    if let Some(first) = reports.iter().flat_map(|r| r.failures.first()).next() {
        summary.push_str(&format!(
            "; first: {} ({})",
            first.label,
            first.detail.as_deref().unwrap_or("")
        ));
    }
    for r in reports {
        for (k, v) in &r.notes {
            if !v.is_empty() {
                summary.push_str(&format!("; {k}={v}"));
            }
        }
    }
    Outcome { pass, summary }
}

fn criterion(id: &str, title: &str, limit: Option<Duration>, run: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let out = run();
    let elapsed = start.elapsed();
    let in_time = limit.map_or(true, |l| elapsed <= l);
    let pass = out.pass && in_time;
    let limit_text = limit.map_or(String::new(), |l| format!(" (limit {:.0} s)", l.as_secs_f64()));
    println!(
        "criterion {id}: {} {title} [{:.1} s{limit_text}] {}",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        out.summary
    );
    assert!(out.pass, "criterion {id} failed: {}", out.summary);
    assert!(in_time, "criterion {id} took {elapsed:?}, over {limit:?}");
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

#[test]
fn c01_exact_engine_equivalence() {
    criterion("1", "p(n) recurrence equals enumeration, n <= 60", secs(5), || {
        from_reports(&[verify::exact_oracles(60).unwrap()])
    });
}

#[test]
fn c02_rademacher_reconstruction() {
    criterion("2", "rounded series equals p(n), 1 <= n <= 2000", secs(120), || {
        from_reports(&[verify::rademacher_rounding(2000, P)])
    });
}

#[test]
fn c03_single_term_containment() {
    criterion("3", "p(n-j) in single-term enclosure, n <= 3000, j <= sqrt N", secs(120), || {
        from_reports(&[verify::single_term_containment(3000, P)])
    });
}

#[test]
fn c04_ratio_containment() {
    criterion("4", "p(n-j)/p(n) in ratio enclosure, n <= 5000, j < sqrt N/2, C <= 2", secs(300), || {
        from_reports(&[verify::ratio_containment(5000, None, P)])
    });
}

#[test]
fn c05_second_difference_containment() {
    criterion("5", "f(j,n)/p(n) in enclosure, n <= 5000, j < sqrt N/4", secs(300), || {
        from_reports(&[verify::fjn_containment(5000, None, P)])
    });
}

#[test]
fn c06a_convexity_certified() {
    criterion("6a", "convexity certified, n <= 10^4, j <= sqrt N/4, n <= 13 exact", None, || {
        from_reports(&[verify::convexity_sweep(10_000, None, P)])
    });
}

#[test]
fn c06b_convexity_analytic_fraction() {
    criterion("6b", "analytic route settles >= 90% of n >= 14 convexity cases", None, || {
        let conv = verify::convexity_sweep(10_000, None, P);
        from_reports(&[verify::analytic_fraction_target(&conv, 0.9)])
    });
}

#[test]
fn c07_krank_identity() {
    criterion("7", "rank boundary identity equals Dyson rank count, 4 <= n <= 30", None, || {
        from_reports(&[verify::krank_identity(30)])
    });
}

#[test]
fn c08a_krank_enclosures() {
    criterion("8a", "k-rank ratio and difference enclosures, k <= 5, n <= 500", None, || {
        from_reports(&[verify::krank_enclosures(5, 500, P)])
    });
}

#[test]
fn c08b_krank_positivity() {
    criterion("8b", "k-rank difference enclosure positive for 10^4 <= l < 2*10^4", None, || {
        from_reports(&[verify::krank_positivity(10_000, 20_000, P)])
    });
}

#[test]
fn c09_nonkary() {
    criterion("9", "non-k-ary difference equals f(k,n) (n <= 500) and is positive (n <= 10^4)", None, || {
        from_reports(&[verify::nonkary_sweep(10_000, 500)])
    });
}

#[test]
fn c10a_injection_inequality() {
    criterion("10a", "p(n-l)-p(n-l-j) <= p(n)-p(n-j), n <= 2000, j <= 20, l <= 20", None, || {
        from_reports(&[verify::injection_sweep(2000, 20, 20)])
    });
}

#[test]
fn c10b_injection_map() {
    criterion("10b", "largest-part map injective and non-j-ary preserving, n <= 30", None, || {
        from_reports(&[verify::injection_map(30, 10, 10)])
    });
}

#[test]
fn c11_inequality_lab() {
    criterion("11", "every registered inequality holds on 10^4 grid + 10^3 random points", secs(60), || {
        let cfg = LabConfig::default();
        assert_eq!((cfg.grid, cfg.random, cfg.prec), (10_000, 1_000, P));
        let reports = verify::inequality_reports(&cfg, None).unwrap();
        let mut out = from_reports(&reports[reports.len() - 1..]);
        let positive = reports.iter().all(|r| r.worst_margin.map_or(false, |m| m > 0.0));
        out.pass &= positive;
        out
    });
}

#[test]
fn c12_special_functions() {
    criterion("12", "Dedekind reciprocity, |A_k(n)| <= k, Bessel closed form vs quadrature", None, || {
        from_reports(&[verify::special_functions(P)])
    });
}
