//! Sampled verification of the elementary inequalities used to assemble the
//! explicit estimates.
//!
//! Each [`InequalityCase`] states `left <= right` (or `<`) over a domain.
//! The driver evaluates both sides at every sample point at a fixed
//! precision and records `right - left`; a case passes when this is
//! strictly positive everywhere it was sampled.
//!
//! Real domains get a dense grid of cell midpoints (log-spaced when the
//! range spans more than two decades), points `1e-9`, `1e-7`, `1e-5`
//! (relative) inside each endpoint, each closed endpoint itself, and
//! seeded random points. Integer lattices `{(n, j) : n >= 14, (d j)² < N}`
//! are swept exhaustively up to a cutoff and then sampled at random beyond it.

mod cases;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rug::float::Round;
use rug::{Float, Rational};

use crate::error::{precondition, Result};
use crate::index::ShiftedIndex;
use crate::report::{CaseRecord, VerificationReport};

pub use cases::registry;

/// Default seed for the random sample points.
pub const DEFAULT_SEED: u64 = 0x5EED_2024;
/// Default number of grid points per real case.
pub const DEFAULT_GRID: usize = 10_000;
/// Default number of random points per case.
pub const DEFAULT_RANDOM: usize = 1_000;
/// Default cutoff of the exhaustive lattice sweep.
pub const DEFAULT_LATTICE_N_MAX: u64 = 10_000;
/// Random lattice points are drawn with `n` up to this value.
pub const LATTICE_RANDOM_N_MAX: u64 = 1_000_000;

/// One side-by-side evaluation.
#[derive(Debug, Clone)]
pub struct Sides {
    pub left: Float,
    pub right: Float,
}

/// A real interval with exact rational endpoints.
#[derive(Debug, Clone)]
pub struct RealInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl RealInterval {
    pub fn new(lo: (i64, i64), hi: (i64, i64), lo_closed: bool, hi_closed: bool) -> Self {
        RealInterval {
            lo: Rational::from(lo),
            hi: Rational::from(hi),
            lo_closed,
            hi_closed,
        }
    }

    pub fn contains(&self, x: &Float) -> bool {
        let above = if self.lo_closed { *x >= self.lo } else { *x > self.lo };
        let below = if self.hi_closed { *x <= self.hi } else { *x < self.hi };
        above && below
    }

    fn log_spaced(&self) -> bool {
        self.lo > 0 && Rational::from(&self.hi / &self.lo) >= 100
    }

    /// Maps `t ∈ (0, 1)` into the interval.
    fn at(&self, t: f64, prec: u32) -> Float {
        let lo = Float::with_val(prec, &self.lo);
        let hi = Float::with_val(prec, &self.hi);
        if self.log_spaced() {
            let a = lo.ln();
            let b = hi.ln();
            let span = Float::with_val(prec, &b - &a);
            (a + span * t).exp()
        } else {
            let span = Float::with_val(prec, &hi - &lo);
            lo + span * t
        }
    }

    fn length(&self) -> f64 {
        Rational::from(&self.hi - &self.lo).to_f64()
    }

    fn endpoint_points(&self, prec: u32) -> Vec<Float> {
        let mut out = Vec::new();
        for (end, closed, inward) in [(&self.lo, self.lo_closed, 1i32), (&self.hi, self.hi_closed, -1)] {
            let e = Float::with_val(prec, end);
            let scale = Float::with_val(prec, e.abs_ref()).max(&Float::with_val(prec, 1));
            if closed {
                let round = if inward > 0 { Round::Up } else { Round::Down };
                out.push(Float::with_val_round(prec, end, round).0);
            }
            for delta in [1e-9, 1e-7, 1e-5] {
                let step = Float::with_val(prec, &scale * delta);
                let p = if inward > 0 { Float::with_val(prec, &e + &step) } else { Float::with_val(prec, &e - &step) };
                out.push(p);
            }
        }
        out
    }
}

/// Integer points `(n, j)` with `n >= n_min`, `j >= 1` and `(d j)² < n - 1/24`.
#[derive(Debug, Clone, Copy)]
pub struct Lattice {
    pub n_min: u64,
    pub d: u64,
}

impl Lattice {
    fn max_j(&self, n: u64) -> u64 {
        ShiftedIndex::new(n).max_j_below_sqrt_over(self.d).unwrap_or(0)
    }

    pub fn contains(&self, n: u64, j: u64) -> bool {
        n >= self.n_min && j >= 1 && ShiftedIndex::new(n).j_below_sqrt_over(j, self.d)
    }
}

#[derive(Debug, Clone)]
pub enum Domain {
    Real(Vec<RealInterval>),
    Lattice(Lattice),
    Points(Vec<Rational>),
}

#[derive(Debug, Clone)]
pub enum Point {
    Real(Float),
    Lattice { n: u64, j: u64 },
}

impl Point {
    fn label(&self) -> String {
        match self {
            Point::Real(x) => format!("x={}", x.to_string_radix(10, Some(20))),
            Point::Lattice { n, j } => format!("n={n},j={j}"),
        }
    }
}

#[derive(Clone, Copy)]
pub enum Evaluator {
    Real(fn(&Float, u32) -> Sides),
    /// Receives `N = n - 1/24` as a float and the integer shift.
    Lattice(fn(&Float, u64, u32) -> Sides),
}

/// A registered inequality with its domain.
#[derive(Clone)]
pub struct InequalityCase {
    pub name: &'static str,
    pub statement: &'static str,
    pub domain: Domain,
    /// Anything the sampled result does not show by itself, such as an
    /// endpoint where the two sides coincide.
    pub note: Option<&'static str>,
    pub eval: Evaluator,
}

impl std::fmt::Debug for InequalityCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("InequalityCase").field("name", &self.name).finish()
    }
}

/// Sampling parameters.
#[derive(Debug, Clone, Copy)]
pub struct LabConfig {
    pub grid: usize,
    pub random: usize,
    pub seed: u64,
    pub prec: u32,
    pub lattice_n_max: u64,
}

impl Default for LabConfig {
    fn default() -> Self {
        LabConfig {
            grid: DEFAULT_GRID,
            random: DEFAULT_RANDOM,
            seed: DEFAULT_SEED,
            prec: crate::DEFAULT_PRECISION,
            lattice_n_max: DEFAULT_LATTICE_N_MAX,
        }
    }
}

/// Looks a case up by name.
pub fn find_case(name: &str) -> Option<InequalityCase> {
    registry().into_iter().find(|c| c.name == name)
}

pub fn case_names() -> Vec<&'static str> {
    registry().iter().map(|c| c.name).collect()
}

fn case_seed(seed: u64, name: &str) -> u64 {
    // FNV-1a, so each case draws an independent but fixed stream
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    seed ^ h
}

/// Every sample point of `case` under `cfg`, grid first.
pub fn sample_points(case: &InequalityCase, cfg: &LabConfig) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(case_seed(cfg.seed, case.name));
    let prec = cfg.prec;
    let mut out = Vec::new();
    match &case.domain {
        Domain::Real(pieces) => {
            let total: f64 = pieces.iter().map(|p| p.length()).sum();
            for piece in pieces {
                let share = ((cfg.grid as f64) * piece.length() / total).round().max(1.0) as usize;
                for i in 0..share {
                    out.push(Point::Real(piece.at((i as f64 + 0.5) / share as f64, prec)));
                }
                out.extend(piece.endpoint_points(prec).into_iter().map(Point::Real));
            }
            for _ in 0..cfg.random {
                let mut pick = rng.gen::<f64>() * total;
                let mut chosen = &pieces[0];
                for piece in pieces {
                    chosen = piece;
                    if pick < piece.length() {
                        break;
                    }
                    pick -= piece.length();
                }
                let t: f64 = rng.gen_range(f64::EPSILON..1.0);
                out.push(Point::Real(chosen.at(t, prec)));
            }
        }
        Domain::Lattice(lat) => {
            for n in lat.n_min..=cfg.lattice_n_max.max(lat.n_min) {
                for j in 1..=lat.max_j(n) {
                    out.push(Point::Lattice { n, j });
                }
            }
            let hi = LATTICE_RANDOM_N_MAX.max(cfg.lattice_n_max + 1);
            let mut drawn = 0;
            while drawn < cfg.random {
                let n = rng.gen_range(lat.n_min..=hi);
                let top = lat.max_j(n);
                if top == 0 {
                    continue;
                }
                out.push(Point::Lattice { n, j: rng.gen_range(1..=top) });
                drawn += 1;
            }
        }
        Domain::Points(xs) => {
            out.extend(xs.iter().map(|x| Point::Real(Float::with_val(prec, x))));
        }
    }
    out
}

fn in_domain(domain: &Domain, point: &Point) -> bool {
    match (domain, point) {
        (Domain::Real(pieces), Point::Real(x)) => pieces.iter().any(|p| p.contains(x)),
        (Domain::Lattice(l), Point::Lattice { n, j }) => l.contains(*n, *j),
        (Domain::Points(xs), Point::Real(x)) => xs.iter().any(|v| *x == *v),
        _ => false,
    }
}

fn evaluate(case: &InequalityCase, point: &Point, prec: u32) -> Sides {
    match (case.eval, point) {
        (Evaluator::Real(f), Point::Real(x)) => f(x, prec),
        (Evaluator::Lattice(f), Point::Lattice { n, j }) => {
            let big_n = Float::with_val(prec, ShiftedIndex::new(*n).shifted());
            f(&big_n, *j, prec)
        }
        _ => unreachable!("evaluator and domain disagree for {}", case.name),
    }
}

/// Runs `case` with `samples` grid points and the default random count,
/// seed and precision.
pub fn run_inequality(case: &InequalityCase, samples: usize) -> Result<VerificationReport> {
    run_inequality_with(case, &LabConfig { grid: samples, ..LabConfig::default() })
}

/// Runs `case` under `cfg`. The reported margin of each point is
/// `(right - left) / max(|right|, |left|)`; pass/fail uses the sign of
/// `right - left` itself.
pub fn run_inequality_with(case: &InequalityCase, cfg: &LabConfig) -> Result<VerificationReport> {
    if cfg.grid < 1000 {
        return Err(precondition(format!("inequality sampling requires at least 1000 grid points (got {})", cfg.grid)));
    }
    let points = sample_points(case, cfg);
    let records: Vec<(CaseRecord, Float)> = points
        .par_iter()
        .map(|pt| {
            let label = pt.label();
            if !in_domain(&case.domain, pt) {
                return (
                    CaseRecord::check(label, false, None, "sample point outside the stated domain"),
                    Float::with_val(cfg.prec, f64::NAN),
                );
            }
            let s = evaluate(case, pt, cfg.prec);
            let gap = Float::with_val(cfg.prec, &s.right - &s.left);
            let scale = Float::with_val(cfg.prec, s.right.abs_ref()).max(&Float::with_val(cfg.prec, s.left.abs_ref()));
            let rel = if scale.is_zero() { 0.0 } else { Float::with_val(cfg.prec, &gap / &scale).to_f64() };
            let ok = gap > 0;
            let detail = if ok {
                String::new()
            } else {
                format!("left {} right {}", s.left.to_string_radix(10, Some(20)), s.right.to_string_radix(10, Some(20)))
            };
            (CaseRecord::check(label, ok, Some(rel), detail), gap)
        })
        .collect();

    let mut report = VerificationReport::new(format!("inequality:{}", case.name))
        .range("statement", case.statement)
        .range("samples", points.len());
    let mut worst_abs: Option<Float> = None;
    for (rec, gap) in records {
        if !gap.is_nan() && worst_abs.as_ref().map_or(true, |w| gap < *w) {
            worst_abs = Some(gap);
        }
        report.record(rec);
    }
    if let Some(w) = worst_abs {
        report.note("worst_absolute_margin", w.to_string_radix(10, Some(12)));
    }
    if let Some(note) = case.note {
        report.note("note", note);
    }
    report.note("seed", cfg.seed);
    report.note("precision", cfg.prec);
    Ok(report)
}

/// Runs every registered case.
pub fn run_all(cfg: &LabConfig) -> Result<Vec<VerificationReport>> {
    registry().iter().map(|c| run_inequality_with(c, cfg)).collect()
}
