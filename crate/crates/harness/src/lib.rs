//! Verification cases, parameter sweeps and report formats behind the
//! `chebgamma` command-line tool.

pub mod cases;
pub mod compare;
pub mod literal;
pub mod report;
pub mod sweep;

pub use cases::{find_case, run_case, verify, CaseInfo, UnknownCase, CASES, DEFAULT_SEED};
pub use compare::{compare, Comparison};
pub use literal::{format_complex, parse_complex, LiteralError};
pub use report::{CaseReport, Status, VerifyReport};
pub use sweep::{parse_config, read_config, run_sweep, SweepConfig, SweepError, SweepSummary};
