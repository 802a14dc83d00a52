//! Command-line front end: single-value queries, verification sweeps and
//! JSON/CSV reports.

pub mod document;

use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use rug::{Integer, Rational};
use serde_json::{json, Value};

use shiftdiff::error::Error;
use shiftdiff::estimates::{
    fjn_ratio_interval, krank_boundary_value, krank_diff_exact, krank_diff_interval, krank_ell, krank_ratio_exact,
    krank_ratio_interval, nonkary_diff_check, nonkary_ratio_interval, ratio_interval,
};
use shiftdiff::exact::{p_enumerate_oracle, PartitionTable};
use shiftdiff::report::VerificationReport;
use shiftdiff::verify::{self, Suite, SweepConfig};

use document::{interval_json, rational_string, ReportDocument};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "shiftdiff", version, about = "Exact values and certified enclosures for shifted differences of p(n)")]
pub struct Cli {
    /// Working precision in bits.
    #[arg(long, global = true, env = "SHIFTDIFF_PRECISION", default_value_t = shiftdiff::DEFAULT_PRECISION,
          value_parser = clap::value_parser!(u32).range(32..=1 << 16))]
    pub precision: u32,

    /// Also write the JSON report to this file.
    #[arg(long, global = true)]
    pub json: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// p(n) from the pentagonal recurrence.
    Exact {
        n: u64,
        /// Cross-check against counting by largest part.
        #[arg(long)]
        oracle: bool,
    },
    /// p(n-j)/p(n) against its enclosure (n >= 14, j < √N/2).
    Ratio { n: u64, j: u64 },
    /// (p(n) - 2p(n-j) + p(n-2j))/p(n) against its enclosure (n >= 14, 1 <= j < √N/4).
    Fjn { n: u64, j: u64 },
    /// k-rank boundary value for m > n/2 with its ratio and difference enclosures.
    Krank {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
    },
    /// Partitions of n without part k, and the difference ν_k(n) - ν_k(n-k).
    Nonkary { n: u64, k: u64 },
    /// Run a verification sweep.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(Suite::NAMES))]
        suite: String,
        #[arg(long)]
        n_max: Option<u64>,
        #[arg(long)]
        j_max: Option<u64>,
        /// Seed for the random points of the inequality suite.
        #[arg(long)]
        seed: Option<u64>,
        /// Restrict the inequality suite to one case.
        #[arg(long)]
        case: Option<String>,
        /// Write per-case margins as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

/// What a command produced: the document, plus any CSV table.
pub struct Output {
    pub document: ReportDocument,
    pub csv: Option<String>,
}

pub fn execute(cli: &Cli) -> Result<Output, Error> {
    let start = Instant::now();
    let prec = cli.precision;
    let (name, params, pass, result, csv) = match &cli.command {
        Command::Exact { n, oracle } => {
            let (pass, result) = exact(*n, *oracle)?;
            ("exact", json!({ "n": n, "oracle": oracle }), pass, result, None)
        }
        Command::Ratio { n, j } => {
            let (pass, result) = ratio(*n, *j, prec)?;
            ("ratio", json!({ "n": n, "j": j }), pass, result, None)
        }
        Command::Fjn { n, j } => {
            let (pass, result) = fjn(*n, *j, prec)?;
            ("fjn", json!({ "n": n, "j": j }), pass, result, None)
        }
        Command::Krank { k, m, n } => {
            let (pass, result) = krank(*k, *m, *n, prec)?;
            ("krank", json!({ "k": k, "m": m, "n": n }), pass, result, None)
        }
        Command::Nonkary { n, k } => {
            let (pass, result) = nonkary(*n, *k, prec)?;
            ("nonkary", json!({ "n": n, "k": k }), pass, result, None)
        }
        Command::Verify { suite, n_max, j_max, seed, case, csv } => {
            let cfg = SweepConfig {
                n_max: *n_max,
                j_max: *j_max,
                prec: Some(prec),
                seed: *seed,
                case: case.clone(),
            };
            let suite_kind: Suite = suite.parse()?;
            if case.is_some() && suite_kind != Suite::Inequalities {
                return Err(Error::Precondition("--case only applies to the inequalities suite".into()));
            }
            let reports = verify::run_suite(suite_kind, &cfg)?;
            for r in &reports {
                eprintln!("{}", r.summary_line());
            }
            let pass = reports.iter().all(|r| r.pass);
            let table = csv.as_ref().map(|_| reports_csv(&reports));
            let params = json!({
                "suite": suite, "n_max": n_max, "j_max": j_max, "seed": seed, "case": case,
            });
            ("verify", params, pass, json!({ "reports": reports }), table)
        }
    };
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(Output {
        document: ReportDocument::new(name, params, prec, pass, result, elapsed_ms),
        csv,
    })
}

/// Parses arguments, runs, writes outputs and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    let out = match execute(&cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let text = serde_json::to_string_pretty(&out.document).expect("report serializes");
    println!("{text}");
    if let Some(path) = &cli.json {
        if let Err(e) = fs::write(path, format!("{text}\n")) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return EXIT_USAGE;
        }
    }
    if let (Command::Verify { csv: Some(path), .. }, Some(table)) = (&cli.command, &out.csv) {
        if let Err(e) = fs::write(path, table) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return EXIT_USAGE;
        }
    }
    if out.document.pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn reports_csv(reports: &[VerificationReport]) -> String {
    let mut out = String::from("suite,label,passed,margin\n");
    for r in reports {
        for line in r.to_csv().lines().skip(1) {
            out.push_str(&format!("{},{line}\n", r.suite));
        }
    }
    out
}

fn exact(n: u64, oracle: bool) -> Result<(bool, Value), Error> {
    let table = PartitionTable::up_to(n);
    let p = table.p_exact(n);
    let mut result = json!({ "p": p.to_string() });
    let mut pass = true;
    if oracle {
        let counted = p_enumerate_oracle(n)?;
        pass = counted == p;
        result["oracle"] = json!(counted.to_string());
        result["agreement"] = json!(pass);
    }
    Ok((pass, result))
}

fn ratio(n: u64, j: u64, prec: u32) -> Result<(bool, Value), Error> {
    let est = ratio_interval(n, j, prec)?;
    let table = PartitionTable::up_to(n);
    let exact = Rational::from((table.p_exact(n - j), table.p_exact(n)));
    let contained = est.contains(&exact);
    let rel_width = rug::Float::with_val(prec, &est.product.width() / &rug::Float::with_val(prec, &exact));
    let result = json!({
        "exact": rational_string(&exact),
        "enclosure": interval_json(&est.product, Some(&exact)),
        "factors": {
            "exponential": interval_json(&est.exponential_factor, None),
            "first": interval_json(&est.factor1, None),
            "second": interval_json(&est.factor2, None),
        },
        "contained": contained,
        "relative_width": rel_width.to_f64(),
    });
    Ok((contained, result))
}

fn fjn(n: u64, j: u64, prec: u32) -> Result<(bool, Value), Error> {
    let est = fjn_ratio_interval(n, j, prec)?;
    let table = PartitionTable::up_to(n);
    let f = table.f_jn(n, j)?;
    let exact = Rational::from((f.clone(), table.p_exact(n)));
    let contained = est.total.contains_rational(&exact);
    let result = json!({
        "f_jn": f.to_string(),
        "p": table.p_exact(n).to_string(),
        "exact": rational_string(&exact),
        "enclosure": interval_json(&est.total, Some(&exact)),
        "contained": contained,
    });
    Ok((contained, result))
}

fn krank(k: u64, m: u64, n: u64, prec: u32) -> Result<(bool, Value), Error> {
    let (ell, top) = krank_ell(k, m, n)?;
    let table = PartitionTable::up_to(n + 1);
    let value = krank_boundary_value(k, m, n, &table)?;
    let ratio_exact = krank_ratio_exact(k, m, n, &table)?;
    let diff_exact = krank_diff_exact(k, m, n, &table)?;
    let ratio_enc = krank_ratio_interval(k, m, n, prec)?;
    let diff_enc = krank_diff_interval(k, m, n, prec)?;
    let contained = ratio_enc.contains_rational(&ratio_exact) && diff_enc.contains_rational(&diff_exact);
    let result = json!({
        "boundary_value": value.to_string(),
        "n_prime": top,
        "ell": rational_string(&ell),
        "ratio": { "exact": rational_string(&ratio_exact), "enclosure": interval_json(&ratio_enc, Some(&ratio_exact)) },
        "difference": { "exact": rational_string(&diff_exact), "enclosure": interval_json(&diff_enc, Some(&diff_exact)) },
        "contained": contained,
    });
    Ok((contained, result))
}

fn nonkary(n: u64, k: u64, prec: u32) -> Result<(bool, Value), Error> {
    if k == 0 {
        return Err(Error::Precondition("non-k-ary count requires k ≥ 1".into()));
    }
    let table = PartitionTable::up_to(n);
    let nu: Integer = table.nu_k(n as i64, k)?;
    let mut result = json!({ "nu": nu.to_string() });
    let mut pass = true;
    if 2 * k <= n && n >= 2 {
        let check = nonkary_diff_check(n, k, &table)?;
        pass &= check.identity_holds();
        result["difference"] = json!(check.difference.to_string());
        result["f_jn"] = json!(check.f_jn.to_string());
        result["identity"] = json!(check.identity_holds());
    }
    if let Ok(enc) = nonkary_ratio_interval(n, k, prec) {
        let exact = Rational::from((nu, table.p_exact(n)));
        pass &= enc.contains_rational(&exact);
        result["ratio"] = json!({ "exact": rational_string(&exact), "enclosure": interval_json(&enc, Some(&exact)) });
    }
    result["pass"] = json!(pass);
    Ok((pass, result))
}
