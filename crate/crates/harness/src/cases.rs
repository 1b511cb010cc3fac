//! Named verification cases. Each case compares a left-hand side (series,
//! limit or kernel identity) with a right-hand side (closed form or printed
//! formula) at a canonical point and, where the case allows it, at ten
//! random draws; the worst row is reported.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, PI};
use std::time::Instant;

use chebgamma::complexfn::{
    analytic_continuation_gamma, gamma, lower_gamma, upper_gamma, wind_sheet, GammaBranchSpec,
};
use chebgamma::{
    closed_form, closed_form_cos, contour_sum, diff_closed_form, difference_series,
    example1_erfc_value, golden_ratio_value, prop1_value, series_sum, ComplexScalar, Params,
    TruncationMode, TruncationPolicy, Warnings,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::compare::{compare, NEAR_ZERO};
use crate::report::{warning_labels, CaseReport, Cx, Status, VerifyReport};

pub const DEFAULT_SEED: u64 = 1729;
pub const RANDOM_DRAWS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown case `{0}`; run `list` for the registered cases")]
pub struct UnknownCase(pub String);

pub struct CaseInfo {
    pub id: &'static str,
    pub description: &'static str,
    pub anchor: &'static str,
    pub tolerance: f64,
    run: fn(&mut ChaCha8Rng) -> Vec<RowResult>,
}

struct Row {
    params: String,
    lhs: ComplexScalar,
    rhs: ComplexScalar,
    flags: Warnings,
}

struct RowError {
    params: String,
    message: String,
}

type RowResult = Result<Row, RowError>;

fn c(re: f64) -> ComplexScalar {
    ComplexScalar::new(re, 0.0)
}

fn describe(p: &Params) -> String {
    format!(
        "a_pi={} k={} alpha={} beta={}",
        p.a_pi(),
        p.k,
        p.alpha,
        p.beta
    )
}

fn row(
    params: String,
    f: impl FnOnce() -> chebgamma::Result<(ComplexScalar, ComplexScalar, Warnings)>,
) -> RowResult {
    match f() {
        Ok((lhs, rhs, flags)) => Ok(Row {
            params,
            lhs,
            rhs,
            flags,
        }),
        Err(e) => Err(RowError {
            params,
            message: e.to_string(),
        }),
    }
}

fn exact() -> TruncationPolicy {
    TruncationPolicy {
        mode: TruncationMode::ExactIfTerminating,
        ..TruncationPolicy::default()
    }
}

/// Real pair in `(-0.9, 0.9)` at least `0.1` apart.
fn separated_pair(rng: &mut ChaCha8Rng) -> (f64, f64) {
    loop {
        let a = rng.gen_range(-0.9..0.9);
        let b = rng.gen_range(-0.9..0.9);
        if f64::abs(a - b) >= 0.1 {
            return (a, b);
        }
    }
}

fn series_vs_closed(p: Params) -> RowResult {
    row(describe(&p), || {
        let s = series_sum(p, exact())?;
        let cf = closed_form(p)?;
        Ok((s.value, cf.value, s.warnings | cf.flags))
    })
}

fn kernel_recurrence(rng: &mut ChaCha8Rng) -> Vec<RowResult> {
    let point = |s: ComplexScalar, z: ComplexScalar| {
        row(format!("s={s} z={z}"), || {
            let lo = lower_gamma(s, z)?;
            let up = upper_gamma(s, z)?;
            let g = gamma(s)?;
            Ok((lo.value + up.value, g.value, lo.flags | up.flags | g.flags))
        })
    };
    let mut rows = vec![point(c(0.5), c(1.0))];
    for _ in 0..RANDOM_DRAWS {
        let s = ComplexScalar::new(rng.gen_range(0.1..8.0), rng.gen_range(-2.0..2.0));
        let z = ComplexScalar::from_polar(
            rng.gen_range(0.1..30.0),
            rng.gen_range(-FRAC_PI_4..FRAC_PI_4),
        );
        rows.push(point(s, z));
    }
    rows
}

fn kernel_continuation(rng: &mut ChaCha8Rng) -> Vec<RowResult> {
    // canonical: e^{i pi} Gamma(1/2, 1) + (1 - e^{i pi}) Gamma(1/2)
    let mut rows = vec![row("s=0.5 z=1 m=1".into(), || {
        let wound = analytic_continuation_gamma(c(0.5), c(1.0), GammaBranchSpec::new(1))?;
        let principal = upper_gamma(c(0.5), c(1.0))?;
        Ok((
            wound.value,
            c(2.0 * PI.sqrt()) - principal.value,
            wound.flags,
        ))
    })];
    // random: wind by m, unwind by -m
    for j in 0..RANDOM_DRAWS {
        let s = ComplexScalar::new(rng.gen_range(0.5..4.0), rng.gen_range(-0.25..0.25));
        let z = ComplexScalar::from_polar(rng.gen_range(0.1..5.0), rng.gen_range(-3.0..3.0));
        let m = [1i64, -1, 2, -2][j % 4];
        rows.push(row(format!("s={s} z={z} m={m}"), || {
            let wound = analytic_continuation_gamma(s, z, GammaBranchSpec::new(m))?;
            let back = wind_sheet(s, wound.value, -m)?;
            let principal = upper_gamma(s, z)?;
            Ok((back.value, principal.value, wound.flags | back.flags))
        }));
    }
    rows
}

fn contour_terms(rng: &mut ChaCha8Rng) -> Vec<RowResult> {
    let point = |p: Params| {
        row(describe(&p), || {
            let terms = contour_sum(p)?;
            let cf = closed_form(p)?;
            Ok((terms.value, cf.value, terms.flags | cf.flags))
        })
    };
    let mut rows = vec![point(Params::with_a_pi(c(10.0), c(1.0), c(0.3), c(-0.4)))];
    let ks = [0.7, 1.3, 2.5, -0.5];
    for j in 0..RANDOM_DRAWS {
        let (a, b) = separated_pair(rng);
        let z = [5.0, 20.0][j % 2];
        rows.push(point(Params::with_a_pi(c(z), c(ks[j % 4]), c(a), c(b))));
    }
    rows
}

fn theorem_integer_k(rng: &mut ChaCha8Rng) -> Vec<RowResult> {
    let mut rows = vec![series_vs_closed(Params::with_a_pi(
        c(10.0),
        c(2.0),
        c(0.5),
        c(-0.5),
    ))];
    let ks = [1.0, 2.0, 3.0, 5.0];
    for j in 0..RANDOM_DRAWS {
        let (a, b) = separated_pair(rng);
        let z = [2.0, 10.0][j % 2];
        rows.push(series_vs_closed(Params::with_a_pi(
            c(z),
            c(ks[j % 4]),
            c(a),
            c(b),
        )));
    }
    rows
}

fn prop1_k1(rng: &mut ChaCha8Rng) -> Vec<RowResult> {
    let point = |z: f64| {
        let p = Params::with_a_pi(c(z), c(1.0), c(1.0), c(1.0));
        row(describe(&p), || {
            let s = series_sum(p, exact())?;
            let v = prop1_value(p.a, p.k)?;
            Ok((s.value, v.value, s.warnings | v.flags))
        })
    };
    let mut rows = vec![point(10.0)];
    for _ in 0..RANDOM_DRAWS {
        rows.push(point(rng.gen_range(1.0..100.0)));
    }
    rows
}

fn prop2_cos(rng: &mut ChaCha8Rng) -> Vec<RowResult> {
    let point = |a: f64, k: f64, ta: f64, tb: f64| {
        row(format!("a={a} k={k} theta_a={ta} theta_b={tb}"), || {
            let v = closed_form_cos(c(a), c(k), c(ta), c(tb))?;
            let w = closed_form(Params::new(c(a), c(k), c(ta.cos()), c(tb.cos())))?;
            Ok((v.value, w.value, v.flags | w.flags))
        })
    };
    let mut rows = vec![point(10.0 / PI, 1.0, FRAC_PI_2, FRAC_PI_3)];
    while rows.len() <= RANDOM_DRAWS {
        let ta = rng.gen_range(0.25..PI - 0.25);
        let tb = rng.gen_range(0.25..PI - 0.25);
        let a = rng.gen_range(1.0..10.0);
        let k = rng.gen_range(-0.9..3.0);
        if f64::abs(ta.cos() - tb.cos()) >= 0.1 {
            rows.push(point(a, k, ta, tb));
        }
    }
    rows
}

fn example1_erfc(_: &mut ChaCha8Rng) -> Vec<RowResult> {
    let z = 4f64.exp();
    let params = format!("a_pi={z} k=-0.5 theta_a=pi/2 theta_b=pi/4");
    vec![
        row(params.clone(), || {
            let v = closed_form_cos(c(z / PI), c(-0.5), c(FRAC_PI_2), c(FRAC_PI_4))?;
            let printed = example1_erfc_value::<f64>()?;
            Ok((v.value, printed.value, v.flags | printed.flags))
        }),
        row(params + " (optimal series)", || {
            let p = Params::with_a_pi(c(z), c(-0.5), c(0.0), c(FRAC_PI_4.cos()));
            let s = series_sum(p, TruncationPolicy::optimal())?;
            let printed = example1_erfc_value::<f64>()?;
            Ok((s.value, printed.value, s.warnings | printed.flags))
        }),
    ]
}

fn example2_golden(rng: &mut ChaCha8Rng) -> Vec<RowResult> {
    let s5 = 5f64.sqrt();
    let point = |z: f64, k: f64| {
        let p = Params::with_a_pi(c(z), c(k), c(s5), c(s5 / 2.0));
        row(describe(&p), || {
            let s = series_sum(p, exact())?;
            let v = golden_ratio_value(p.a, p.k)?;
            Ok((s.value, v.value, s.warnings | v.flags))
        })
    };
    let mut rows = vec![point(20.0, 2.0)];
    for j in 0..RANDOM_DRAWS {
        rows.push(point(rng.gen_range(5.0..60.0), (j % 4 + 1) as f64));
    }
    rows
}

fn difference(cc: u8, rng: &mut ChaCha8Rng) -> Vec<RowResult> {
    let point = |z: f64, k: f64| {
        let x = c(f64::from(cc));
        let p = Params::with_a_pi(c(z), c(k), x, x);
        row(describe(&p), || {
            let d = difference_series(p, exact())?;
            let v = diff_closed_form(cc, p.a, p.k)?;
            Ok((d.value, v.value, d.warnings | v.flags))
        })
    };
    let mut rows = vec![point(30.0, 2.0)];
    for j in 0..RANDOM_DRAWS {
        rows.push(point(rng.gen_range(10.0..60.0), (j % 4 + 1) as f64));
    }
    rows
}

fn diff_c1(rng: &mut ChaCha8Rng) -> Vec<RowResult> {
    difference(1, rng)
}
fn diff_c2(rng: &mut ChaCha8Rng) -> Vec<RowResult> {
    difference(2, rng)
}
fn diff_c3(rng: &mut ChaCha8Rng) -> Vec<RowResult> {
    difference(3, rng)
}
fn diff_c4(rng: &mut ChaCha8Rng) -> Vec<RowResult> {
    difference(4, rng)
}
fn diff_c5(rng: &mut ChaCha8Rng) -> Vec<RowResult> {
    difference(5, rng)
}

const fn case(
    id: &'static str,
    description: &'static str,
    anchor: &'static str,
    tolerance: f64,
    run: fn(&mut ChaCha8Rng) -> Vec<RowResult>,
) -> CaseInfo {
    CaseInfo {
        id,
        description,
        anchor,
        tolerance,
        run,
    }
}

pub static CASES: [CaseInfo; 13] = [
    case(
        "kernel-recurrence",
        "lower plus upper incomplete gamma equals the complete gamma function",
        "incomplete gamma recurrence",
        1e-11,
        kernel_recurrence,
    ),
    case(
        "kernel-continuation",
        "winding onto sheet m and back returns the principal incomplete gamma",
        "incomplete gamma continuation",
        1e-11,
        kernel_continuation,
    ),
    case(
        "contour-terms",
        "sum of the twelve contour terms equals the assembled closed form",
        "contour-term decomposition",
        1e-11,
        contour_terms,
    ),
    case(
        "theorem1-int-k",
        "closed form equals the terminating series for integer k",
        "main closed form",
        1e-9,
        theorem_integer_k,
    ),
    case(
        "prop1-k1",
        "series at alpha = beta = 1 equals 1 + 1/k + e^z (1+k-z) E_{1-k}(z), k = 1",
        "unit-argument reduction",
        1e-12,
        prop1_k1,
    ),
    case(
        "prop2-cos",
        "cosine-angle form equals the closed form at alpha = cos, beta = cos",
        "cosine form",
        1e-12,
        prop2_cos,
    ),
    case(
        "example1-erfc",
        "cosine form and optimal series against the erf/erfc expression",
        "erfc example",
        1e-10,
        example1_erfc,
    ),
    case(
        "example2-golden",
        "series at alpha = sqrt 5, beta = sqrt 5 / 2 against the golden-ratio formula",
        "golden-ratio example",
        1e-9,
        example2_golden,
    ),
    case(
        "diff-c1",
        "difference series at alpha = beta = 1 against its closed form",
        "difference identity, c = 1",
        1e-6,
        diff_c1,
    ),
    case(
        "diff-c2",
        "difference series at alpha = beta = 2 against its closed form",
        "difference identity, c = 2",
        1e-6,
        diff_c2,
    ),
    case(
        "diff-c3",
        "difference series at alpha = beta = 3 against its closed form",
        "difference identity, c = 3",
        1e-6,
        diff_c3,
    ),
    case(
        "diff-c4",
        "difference series at alpha = beta = 4 against its closed form",
        "difference identity, c = 4",
        1e-6,
        diff_c4,
    ),
    case(
        "diff-c5",
        "difference series at alpha = beta = 5 against its closed form",
        "difference identity, c = 5",
        1e-6,
        diff_c5,
    ),
];

pub fn find_case(id: &str) -> Result<(usize, &'static CaseInfo), UnknownCase> {
    CASES
        .iter()
        .enumerate()
        .find(|(_, c)| c.id == id)
        .ok_or_else(|| UnknownCase(id.to_string()))
}

/// Error measure used to pick the worst row: the quantity the pass rule
/// tests, divided by the tolerance.
fn score(lhs: ComplexScalar, rhs: ComplexScalar, tol: f64) -> f64 {
    let cmp = compare(lhs, rhs, tol);
    let e = if rhs.norm() < NEAR_ZERO {
        cmp.abs_err
    } else {
        cmp.rel_err
    };
    if e.is_nan() {
        f64::INFINITY
    } else {
        e / tol
    }
}

/// Runs one case. The random stream depends only on the seed and the
/// case's position in [`CASES`], so a single case reproduces its row from
/// a full run.
pub fn run_case(id: &str, seed: u64, with_timing: bool) -> Result<CaseReport, UnknownCase> {
    let (position, info) = find_case(id)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(position as u64);
    let start = Instant::now();
    let rows = (info.run)(&mut rng);
    let elapsed = start.elapsed();

    let tol = info.tolerance;
    let mut flags = Warnings::empty();
    let mut worst: Option<&Row> = None;
    let mut first_error: Option<&RowError> = None;
    for r in &rows {
        match r {
            Ok(row) => {
                flags |= row.flags;
                let better =
                    worst.is_none_or(|w| score(row.lhs, row.rhs, tol) > score(w.lhs, w.rhs, tol));
                if better {
                    worst = Some(row);
                }
            }
            Err(e) => {
                first_error.get_or_insert(e);
            }
        }
    }

    let nan = Cx {
        re: f64::NAN,
        im: f64::NAN,
    };
    let mut report = CaseReport {
        case_id: info.id.to_string(),
        params: String::new(),
        lhs_value: nan,
        rhs_value: nan,
        abs_err: f64::NAN,
        rel_err: f64::NAN,
        tolerance: tol,
        status: Status::Fail,
        rows: rows.len(),
        warnings: warning_labels(flags),
        note: None,
        wall_time_ms: with_timing.then_some(elapsed.as_secs_f64() * 1e3),
    };
    if let Some(w) = worst {
        let cmp = compare(w.lhs, w.rhs, tol);
        report.params = w.params.clone();
        report.lhs_value = w.lhs.into();
        report.rhs_value = w.rhs.into();
        report.abs_err = cmp.abs_err;
        report.rel_err = cmp.rel_err;
        report.status = if cmp.pass { Status::Pass } else { Status::Fail };
    }
    if let Some(e) = first_error {
        report.status = Status::Fail;
        report.note = Some(format!("{}: {}", e.params, e.message));
    }
    Ok(report)
}

/// Runs the named case, or every registered case in order.
pub fn verify(
    case: Option<&str>,
    seed: u64,
    with_timing: bool,
) -> Result<VerifyReport, UnknownCase> {
    let cases = match case {
        Some(id) => vec![run_case(id, seed, with_timing)?],
        None => CASES
            .iter()
            .map(|c| run_case(c.id, seed, with_timing))
            .collect::<Result<_, _>>()?,
    };
    Ok(VerifyReport { seed, cases })
}
