//! Parameter sweeps over a grid read from a small text config.
//!
//! ```text
//! # comment
//! a_pi  = 10, 20          # or `a = ...`; one of the two is required
//! k     = 1, 2, 0.5-0.1i
//! alpha = 0.3, -0.2
//! beta  = 0.1
//! mode  = both            # series | closed | both
//! policy = optimal        # exact | fixed | optimal
//! max_shell = 2000
//! rel_tol = 1e-15
//! tolerance = 1e-9        # rel_diff threshold for `both`
//! output = sweep.csv
//! format = csv            # csv | json
//! ```
//!
//! Rows come out in lexicographic order over the axes, in the order the
//! axes are declared (first declared axis varies slowest).

use std::collections::HashSet;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use chebgamma::{
    closed_form, series_sum, ComplexScalar, Params, TruncationMode, TruncationPolicy, Warnings,
};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::literal::parse_complex;
use crate::report::Status;

pub const MAX_POINTS: usize = 1_000_000;

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("config line {line}, field `{field}`: {message}")]
    Config {
        line: usize,
        field: String,
        message: String,
    },
    #[error("config: {0}")]
    Missing(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AxisName {
    A,
    APi,
    K,
    Alpha,
    Beta,
}

impl AxisName {
    fn parse(key: &str) -> Option<Self> {
        Some(match key {
            "a" => Self::A,
            "a_pi" => Self::APi,
            "k" => Self::K,
            "alpha" => Self::Alpha,
            "beta" => Self::Beta,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Axis {
    pub name: AxisName,
    pub values: Vec<ComplexScalar>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    Series,
    Closed,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    /// In declaration order.
    pub axes: Vec<Axis>,
    pub mode: SweepMode,
    pub policy: TruncationPolicy,
    pub tolerance: f64,
    pub output_path: PathBuf,
    pub format: Format,
}

impl SweepConfig {
    pub fn points(&self) -> usize {
        self.axes.iter().map(|a| a.values.len()).product()
    }

    /// Grid point `index` in row order.
    fn point(&self, mut index: usize) -> Params {
        let mut p = Params::new(
            ComplexScalar::new(1.0, 0.0),
            ComplexScalar::new(1.0, 0.0),
            ComplexScalar::new(0.0, 0.0),
            ComplexScalar::new(0.0, 0.0),
        );
        for axis in self.axes.iter().rev() {
            let v = axis.values[index % axis.values.len()];
            index /= axis.values.len();
            match axis.name {
                AxisName::A => p.a = v,
                AxisName::APi => p.a = v / std::f64::consts::PI,
                AxisName::K => p.k = v,
                AxisName::Alpha => p.alpha = v,
                AxisName::Beta => p.beta = v,
            }
        }
        p
    }
}

fn config_err(line: usize, field: &str, message: impl Into<String>) -> SweepError {
    SweepError::Config {
        line,
        field: field.to_string(),
        message: message.into(),
    }
}

pub fn parse_config(text: &str) -> Result<SweepConfig, SweepError> {
    let mut axes = Vec::new();
    let mut seen = HashSet::new();
    let mut mode = SweepMode::Both;
    let mut policy = TruncationPolicy::default();
    let mut tolerance = 1e-9;
    let mut output = None;
    let mut format = None;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((key, value)) = content.split_once('=') else {
            return Err(config_err(line, content, "expected `key = value`"));
        };
        let (key, value) = (key.trim(), value.trim());
        if !seen.insert(key.to_string()) {
            return Err(config_err(line, key, "given more than once"));
        }
        if let Some(name) = AxisName::parse(key) {
            let values = value
                .split(',')
                .map(|t| parse_complex(t.trim()).map_err(|e| config_err(line, key, e.to_string())))
                .collect::<Result<Vec<_>, _>>()?;
            if value.is_empty() || values.is_empty() {
                return Err(config_err(line, key, "empty axis"));
            }
            axes.push(Axis { name, values });
            continue;
        }
        let number = |v: &str| -> Result<f64, SweepError> {
            v.parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| {
                    config_err(line, key, format!("expected a finite number, got `{v}`"))
                })
        };
        match key {
            "mode" => {
                mode = match value {
                    "series" => SweepMode::Series,
                    "closed" => SweepMode::Closed,
                    "both" => SweepMode::Both,
                    _ => {
                        return Err(config_err(
                            line,
                            key,
                            format!("expected series, closed or both, got `{value}`"),
                        ))
                    }
                }
            }
            "policy" => {
                policy.mode = match value {
                    "exact" => TruncationMode::ExactIfTerminating,
                    "fixed" => TruncationMode::Fixed,
                    "optimal" => TruncationMode::Optimal,
                    _ => {
                        return Err(config_err(
                            line,
                            key,
                            format!("expected exact, fixed or optimal, got `{value}`"),
                        ))
                    }
                }
            }
            "max_shell" => {
                policy.max_shell = value.parse().map_err(|_| {
                    config_err(
                        line,
                        key,
                        format!("expected a positive integer, got `{value}`"),
                    )
                })?;
            }
            "rel_tol" => policy.rel_tol = number(value)?,
            "tolerance" => {
                tolerance = number(value)?;
                if tolerance <= 0.0 {
                    return Err(config_err(line, key, "must be positive"));
                }
            }
            "output" => {
                if value.is_empty() {
                    return Err(config_err(line, key, "empty path"));
                }
                output = Some(PathBuf::from(value));
            }
            "format" => {
                format = Some(match value {
                    "csv" => Format::Csv,
                    "json" => Format::Json,
                    _ => {
                        return Err(config_err(
                            line,
                            key,
                            format!("expected csv or json, got `{value}`"),
                        ))
                    }
                })
            }
            _ => return Err(config_err(line, key, "unknown field")),
        }
    }

    policy
        .validate()
        .map_err(|e| SweepError::Missing(format!("policy: {e}")))?;
    let has = |n: AxisName| axes.iter().any(|a| a.name == n);
    match (has(AxisName::A), has(AxisName::APi)) {
        (true, true) => {
            return Err(SweepError::Missing(
                "give either `a` or `a_pi`, not both".into(),
            ))
        }
        (false, false) => return Err(SweepError::Missing("missing axis `a` (or `a_pi`)".into())),
        _ => {}
    }
    for (n, key) in [
        (AxisName::K, "k"),
        (AxisName::Alpha, "alpha"),
        (AxisName::Beta, "beta"),
    ] {
        if !has(n) {
            return Err(SweepError::Missing(format!("missing axis `{key}`")));
        }
    }
    let output_path = output.ok_or_else(|| SweepError::Missing("missing field `output`".into()))?;
    let format = format.unwrap_or_else(|| {
        if output_path.extension().is_some_and(|e| e == "json") {
            Format::Json
        } else {
            Format::Csv
        }
    });
    let config = SweepConfig {
        axes,
        mode,
        policy,
        tolerance,
        output_path,
        format,
    };
    let points = config
        .axes
        .iter()
        .try_fold(1usize, |acc, a| acc.checked_mul(a.values.len()))
        .filter(|&n| n <= MAX_POINTS);
    if points.is_none() {
        return Err(SweepError::Missing(format!(
            "grid exceeds {MAX_POINTS} points"
        )));
    }
    Ok(config)
}

pub fn read_config(path: &Path) -> Result<SweepConfig, SweepError> {
    let text = std::fs::read_to_string(path).map_err(|source| SweepError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_config(&text)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub a_re: f64,
    pub a_im: f64,
    pub k_re: f64,
    pub k_im: f64,
    pub alpha_re: f64,
    pub alpha_im: f64,
    pub beta_re: f64,
    pub beta_im: f64,
    pub series_re: Option<f64>,
    pub series_im: Option<f64>,
    pub series_err: Option<f64>,
    pub closed_re: Option<f64>,
    pub closed_im: Option<f64>,
    pub rel_diff: Option<f64>,
    pub warnings: String,
    pub status: &'static str,
}

fn evaluate_point(p: Params, config: &SweepConfig) -> SweepRow {
    let mut flags = Warnings::empty();
    let mut messages = Vec::new();
    let mut series = None;
    let mut closed = None;
    if config.mode != SweepMode::Closed {
        match series_sum(p, config.policy) {
            Ok(s) => {
                flags |= s.warnings;
                series = Some((s.value, s.error_estimate));
            }
            Err(e) => messages.push(format!("series: {e}")),
        }
    }
    if config.mode != SweepMode::Series {
        match closed_form(p) {
            Ok(v) => {
                flags |= v.flags;
                closed = Some(v.value);
            }
            Err(e) => messages.push(format!("closed: {e}")),
        }
    }
    let rel_diff = match (series, closed) {
        (Some((s, _)), Some(c)) => Some((s - c).norm() / s.norm().max(c.norm()).max(1e-300)),
        _ => None,
    };
    let status = if !messages.is_empty() {
        Status::SkippedWithWarning
    } else if rel_diff.is_some_and(|d| !(d <= config.tolerance)) {
        Status::Fail
    } else {
        Status::Pass
    };
    let labels = flags.labels();
    if !labels.is_empty() {
        messages.insert(0, labels);
    }
    SweepRow {
        a_re: p.a.re,
        a_im: p.a.im,
        k_re: p.k.re,
        k_im: p.k.im,
        alpha_re: p.alpha.re,
        alpha_im: p.alpha.im,
        beta_re: p.beta.re,
        beta_im: p.beta.im,
        series_re: series.map(|s| s.0.re),
        series_im: series.map(|s| s.0.im),
        series_err: series.map(|s| s.1),
        closed_re: closed.map(|c| c.re),
        closed_im: closed.map(|c| c.im),
        rel_diff,
        warnings: messages.join("; "),
        status: status.label(),
    }
}

/// Evaluates every grid point. Points are independent and run in parallel;
/// the result is in row order.
pub fn evaluate(config: &SweepConfig) -> Vec<SweepRow> {
    (0..config.points())
        .into_par_iter()
        .map(|i| evaluate_point(config.point(i), config))
        .collect()
}

const COLUMNS: [&str; 16] = [
    "a_re",
    "a_im",
    "k_re",
    "k_im",
    "alpha_re",
    "alpha_im",
    "beta_re",
    "beta_im",
    "series_re",
    "series_im",
    "series_err",
    "closed_re",
    "closed_im",
    "rel_diff",
    "warnings",
    "status",
];

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<(), SweepError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(COLUMNS)?;
    for r in rows {
        w.write_record([
            num(r.a_re),
            num(r.a_im),
            num(r.k_re),
            num(r.k_im),
            num(r.alpha_re),
            num(r.alpha_im),
            num(r.beta_re),
            num(r.beta_im),
            opt(r.series_re),
            opt(r.series_im),
            opt(r.series_err),
            opt(r.closed_re),
            opt(r.closed_im),
            opt(r.rel_diff),
            r.warnings.clone(),
            r.status.to_string(),
        ])?;
    }
    w.flush().map_err(|e| SweepError::Csv(e.into()))?;
    Ok(())
}

pub fn write_json<W: Write>(rows: &[SweepRow], mut out: W) -> Result<(), SweepError> {
    serde_json::to_writer_pretty(&mut out, rows)?;
    writeln!(out).map_err(|e| SweepError::Csv(e.into()))?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSummary {
    pub points: usize,
    pub skipped: usize,
    pub failures: usize,
    pub output: PathBuf,
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepSummary, SweepError> {
    let rows = evaluate(config);
    let path = &config.output_path;
    let io = |source| SweepError::Io {
        path: path.clone(),
        source,
    };
    let file = BufWriter::new(File::create(path).map_err(io)?);
    match config.format {
        Format::Csv => write_csv(&rows, file)?,
        Format::Json => write_json(&rows, file)?,
    }
    let count = |s: Status| rows.iter().filter(|r| r.status == s.label()).count();
    Ok(SweepSummary {
        points: rows.len(),
        skipped: count(Status::SkippedWithWarning),
        failures: count(Status::Fail),
        output: path.clone(),
    })
}
