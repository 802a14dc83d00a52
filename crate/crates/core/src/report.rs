use serde::Serialize;

/// One checked case of a sweep.
#[derive(Debug, Clone, Serialize)]
pub struct CaseRecord {
    pub label: String,
    pub passed: bool,
    /// Suite-specific margin; for containment checks the distance from the
    /// exact value to the nearer endpoint divided by the interval width.
    pub margin: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Outcome of a verification sweep: what was covered, what failed, and the
/// tightest margin seen.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub ranges: Vec<(String, String)>,
    pub cases: u64,
    pub failures: Vec<CaseRecord>,
    pub worst_margin: Option<f64>,
    pub worst_case: Option<String>,
    /// Extra named figures a suite wants to surface (fractions, constants).
    pub notes: Vec<(String, String)>,
    pub pass: bool,
    #[serde(skip)]
    pub records: Vec<CaseRecord>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            ranges: Vec::new(),
            cases: 0,
            failures: Vec::new(),
            worst_margin: None,
            worst_case: None,
            notes: Vec::new(),
            pass: true,
            records: Vec::new(),
        }
    }

    pub fn range(mut self, name: impl Into<String>, value: impl ToString) -> Self {
        self.ranges.push((name.into(), value.to_string()));
        self
    }

    pub fn note(&mut self, name: impl Into<String>, value: impl ToString) {
        self.notes.push((name.into(), value.to_string()));
    }

    pub fn note_value(&self, name: &str) -> Option<&str> {
        self.notes
            .iter()
            .find(|(k, _)| k == name)
            .map(|(_, v)| v.as_str())
    }

    pub fn record(&mut self, case: CaseRecord) {
        self.cases += 1;
        if let Some(m) = case.margin {
            if self.worst_margin.map_or(true, |w| m < w) {
                self.worst_margin = Some(m);
                self.worst_case = Some(case.label.clone());
            }
        }
        if !case.passed {
            self.pass = false;
            self.failures.push(case.clone());
        }
        self.records.push(case);
    }

    /// Marks the report failed without a specific case, e.g. when a
    /// suite-level target is missed.
    pub fn fail_with(&mut self, label: impl Into<String>, detail: impl Into<String>) {
        self.pass = false;
        self.failures.push(CaseRecord {
            label: label.into(),
            passed: false,
            margin: None,
            detail: Some(detail.into()),
        });
    }

    pub fn extend(&mut self, cases: impl IntoIterator<Item = CaseRecord>) {
        for c in cases {
            self.record(c);
        }
    }

    /// Per-case table as CSV (`label,passed,margin`).
    pub fn to_csv(&self) -> String {
        let mut out = String::from("label,passed,margin\n");
        for r in &self.records {
            let margin = r.margin.map(|m| format!("{m:e}")).unwrap_or_default();
            out.push_str(&format!("\"{}\",{},{}\n", r.label.replace('"', "'"), r.passed, margin));
        }
        out
    }

    pub fn summary_line(&self) -> String {
        format!(
            "[{}] {}: {} cases, {} failures, worst margin {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.suite,
            self.cases,
            self.failures.len(),
            self.worst_margin
                .map(|m| format!("{m:.3e}"))
                .unwrap_or_else(|| "n/a".into())
        )
    }
}

impl CaseRecord {
    pub fn pass(label: impl Into<String>, margin: Option<f64>) -> Self {
        CaseRecord {
            label: label.into(),
            passed: true,
            margin,
            detail: None,
        }
    }

    pub fn check(label: impl Into<String>, passed: bool, margin: Option<f64>, detail: impl Into<String>) -> Self {
        let detail = detail.into();
        CaseRecord {
            label: label.into(),
            passed,
            margin,
            detail: (!passed && !detail.is_empty()).then_some(detail),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_flag_tracks_failures() {
        let mut r = VerificationReport::new("demo").range("n", "1..=3");
        r.record(CaseRecord::pass("a", Some(0.5)));
        r.record(CaseRecord::pass("b", Some(0.1)));
        assert!(r.pass && r.failures.is_empty());
        assert_eq!(r.worst_case.as_deref(), Some("b"));
        r.record(CaseRecord::check("c", false, Some(-0.2), "outside"));
        assert!(!r.pass);
        assert_eq!(r.failures.len(), 1);
        assert_eq!(r.cases, 3);
        assert!(r.to_csv().lines().count() == 4);
    }
}
