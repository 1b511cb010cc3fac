use chebgamma::{ComplexScalar, Warnings};
use serde::{Deserialize, Serialize};

/// Complex value as it appears in reports.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Cx {
    pub re: f64,
    pub im: f64,
}

impl From<ComplexScalar> for Cx {
    fn from(z: ComplexScalar) -> Self {
        Self { re: z.re, im: z.im }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedWithWarning,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Self::Pass => "pass",
            Self::Fail => "fail",
            Self::SkippedWithWarning => "skipped-with-warning",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case_id: String,
    /// Parameters of the reported (worst) row.
    pub params: String,
    pub lhs_value: Cx,
    pub rhs_value: Cx,
    pub abs_err: f64,
    pub rel_err: f64,
    pub tolerance: f64,
    pub status: Status,
    /// Rows evaluated: the canonical point plus any random draws.
    pub rows: usize,
    /// Union of the warning flags over all rows.
    pub warnings: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Only recorded on request, so that reports stay reproducible.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub cases: Vec<CaseReport>,
}

impl VerifyReport {
    pub fn failures(&self) -> usize {
        self.cases
            .iter()
            .filter(|c| c.status == Status::Fail)
            .count()
    }
}

pub fn warning_labels(flags: Warnings) -> Vec<String> {
    let labels = flags.labels();
    labels
        .split('|')
        .filter(|l| !l.is_empty())
        .map(str::to_string)
        .collect()
}

/// Plain-text rendering, one line per case after a header with the seed.
pub fn render_text(report: &VerifyReport) -> String {
    let mut out = format!("seed {}\n", report.seed);
    for c in &report.cases {
        out.push_str(&format!(
            "{:<22} {:<20} rel_err {:.3e}  abs_err {:.3e}  tol {:.0e}  rows {:>2}",
            c.case_id,
            c.status.label(),
            c.rel_err,
            c.abs_err,
            c.tolerance,
            c.rows
        ));
        if let Some(ms) = c.wall_time_ms {
            out.push_str(&format!("  {ms:.2} ms"));
        }
        if !c.warnings.is_empty() {
            out.push_str(&format!("  [{}]", c.warnings.join(", ")));
        }
        if let Some(note) = &c.note {
            out.push_str(&format!("  ({note})"));
        }
        out.push('\n');
    }
    let failed = report.failures();
    out.push_str(&format!(
        "{} cases, {} failed\n",
        report.cases.len(),
        failed
    ));
    out
}
