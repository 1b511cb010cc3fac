use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use chebgamma::{
    closed_form, closed_form_cos, contour_sum, limit_eval, series_sum, ComplexScalar, LimitKind,
    LimitSpec, Params, TruncationMode, TruncationPolicy,
};
use chebgamma_harness::report::render_text;
use chebgamma_harness::{
    format_complex, parse_complex, read_config, run_sweep, verify, CASES, DEFAULT_SEED,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "chebgamma",
    version,
    about = "Double Chebyshev series and their incomplete-gamma closed forms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the closed form at one point.
    Eval {
        #[command(flatten)]
        point: Point,
        #[arg(long, value_enum, default_value_t = EvalPath::Closed)]
        path: EvalPath,
        /// Evaluate through limit extrapolation on a removable singular set.
        #[arg(long, value_enum)]
        limit: Option<LimitArg>,
    },
    /// Sum the series at one point.
    Series {
        #[command(flatten)]
        point: Point,
        #[arg(long, value_enum, default_value_t = ModeArg::Optimal)]
        mode: ModeArg,
        #[arg(long, default_value_t = 2000)]
        max_shell: usize,
        #[arg(long, default_value_t = 1e-15)]
        rel_tol: f64,
    },
    /// Run the registered verification cases.
    Verify {
        #[arg(long = "case")]
        case: Option<String>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Also write the report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Record wall-clock time per case (reports are then not reproducible).
        #[arg(long)]
        with_timing: bool,
    },
    /// Evaluate a parameter grid described by a config file.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        /// Override the config's output path.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// List the registered verification cases.
    List,
}

#[derive(Args)]
struct Point {
    /// The parameter a; the expansion variable is a pi.
    #[arg(long, value_parser = complex, allow_hyphen_values = true, required_unless_present = "a_pi", conflicts_with = "a_pi")]
    a: Option<ComplexScalar>,
    /// The expansion variable a pi, instead of --a.
    #[arg(long, value_parser = complex, allow_hyphen_values = true)]
    a_pi: Option<ComplexScalar>,
    #[arg(long, value_parser = complex, allow_hyphen_values = true)]
    k: ComplexScalar,
    #[arg(long, value_parser = complex, allow_hyphen_values = true)]
    alpha: ComplexScalar,
    #[arg(long, value_parser = complex, allow_hyphen_values = true)]
    beta: ComplexScalar,
}

impl Point {
    fn params(&self) -> Params {
        match (self.a, self.a_pi) {
            (Some(a), _) => Params::new(a, self.k, self.alpha, self.beta),
            (None, Some(z)) => Params::with_a_pi(z, self.k, self.alpha, self.beta),
            (None, None) => unreachable!("clap requires one of --a, --a-pi"),
        }
    }
}

fn complex(s: &str) -> Result<ComplexScalar, String> {
    parse_complex(s).map_err(|e| e.to_string())
}

#[derive(Clone, Copy, ValueEnum)]
enum EvalPath {
    Closed,
    Terms,
    Cos,
}

#[derive(Clone, Copy, ValueEnum)]
enum LimitArg {
    AlphaToBeta,
    AlphaToOne,
    AlphaToMinusOne,
    BothToOne,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Fixed,
    Optimal,
}

fn show(name: &str, value: impl std::fmt::Display) -> io::Result<()> {
    writeln!(io::stdout(), "{name:<15} {value}")
}

fn flags_text(labels: String) -> String {
    if labels.is_empty() {
        "none".into()
    } else {
        labels
    }
}

fn eval(point: &Point, path: EvalPath, limit: Option<LimitArg>) -> Result<()> {
    let p = point.params();
    show("a_pi", format_complex(p.a_pi()))?;
    if let Some(kind) = limit {
        let kind = match kind {
            LimitArg::AlphaToBeta => LimitKind::AlphaToBeta,
            LimitArg::AlphaToOne => LimitKind::AlphaToOne,
            LimitArg::AlphaToMinusOne => LimitKind::AlphaToMinusOne,
            LimitArg::BothToOne => LimitKind::BothToOne,
        };
        let v = limit_eval(p, LimitSpec::new(kind))?;
        show("value", format_complex(v.value))?;
        show("path", "limit")?;
        show("estimate", format!("{:.3e}", v.estimate))?;
        show("levels", v.levels_used)?;
        show("worst_ratio", format!("{:.3}", v.worst_ratio))?;
        show("warnings", flags_text(v.flags.labels()))?;
        return Ok(());
    }
    let (v, name) = match path {
        EvalPath::Closed => (closed_form(p), "closed"),
        EvalPath::Terms => (contour_sum(p), "terms"),
        EvalPath::Cos => (
            closed_form_cos(p.a, p.k, p.alpha.acos(), p.beta.acos()),
            "cos",
        ),
    };
    let v = v.with_context(|| "use --limit on a removable singular set".to_string())?;
    show("value", format_complex(v.value))?;
    show("path", name)?;
    show("warnings", flags_text(v.flags.labels()))?;
    Ok(())
}

fn series(point: &Point, mode: ModeArg, max_shell: usize, rel_tol: f64) -> Result<()> {
    let mode = match mode {
        ModeArg::Exact => TruncationMode::ExactIfTerminating,
        ModeArg::Fixed => TruncationMode::Fixed,
        ModeArg::Optimal => TruncationMode::Optimal,
    };
    let policy = TruncationPolicy::new(mode, max_shell, rel_tol)?;
    let s = series_sum(point.params(), policy)?;
    show("value", format_complex(s.value))?;
    show("error_estimate", format!("{:.3e}", s.error_estimate))?;
    show("shells_used", s.shells_used)?;
    show("termination", s.termination.label())?;
    show("warnings", flags_text(s.warnings.labels()))?;
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Eval { point, path, limit } => eval(&point, path, limit)?,
        Command::Series {
            point,
            mode,
            max_shell,
            rel_tol,
        } => series(&point, mode, max_shell, rel_tol)?,
        Command::Verify {
            case,
            seed,
            json,
            with_timing,
        } => {
            let report = verify(case.as_deref(), seed, with_timing)?;
            write!(io::stdout(), "{}", render_text(&report))?;
            if let Some(path) = json {
                let text = serde_json::to_string_pretty(&report)?;
                std::fs::write(&path, text + "\n")
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            if report.failures() > 0 {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Sweep { config, output } => {
            let mut cfg = read_config(&config)?;
            if let Some(path) = output {
                cfg.output_path = path;
            }
            if cfg.points() == 0 {
                bail!("empty grid");
            }
            let summary = run_sweep(&cfg)?;
            writeln!(
                io::stdout(),
                "{} points, {} skipped with warning, {} above tolerance, written to {}",
                summary.points,
                summary.skipped,
                summary.failures,
                summary.output.display()
            )?;
            if summary.failures > 0 {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::List => {
            for c in &CASES {
                writeln!(
                    io::stdout(),
                    "{:<20} {:<30} {}",
                    c.id,
                    c.anchor,
                    c.description
                )?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e)
            if e.downcast_ref::<io::Error>()
                .is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) =>
        {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
