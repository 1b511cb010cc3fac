use thiserror::Error;

/// Removable singular sets of the closed form. Evaluating there requires
/// [`crate::closedform::limit_eval`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Singularity {
    AlphaEqualsBeta,
    AlphaAtUnit,
    BetaAtUnit,
    OrderAtPole,
    ThetaAtMultipleOfPi,
}

impl std::fmt::Display for Singularity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Self::AlphaEqualsBeta => "alpha = beta",
            Self::AlphaAtUnit => "alpha = +/-1",
            Self::BetaAtUnit => "beta = +/-1",
            Self::OrderAtPole => "k in {0, -1}",
            Self::ThetaAtMultipleOfPi => "sin(theta) = 0",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite input to {0}")]
    NonFinite(&'static str),

    #[error("{what} has a pole at {re}{im:+}i")]
    Pole {
        what: &'static str,
        re: f64,
        im: f64,
    },

    #[error(
        "{0}: argument on the negative real axis; request a sheet via analytic_continuation_gamma"
    )]
    BranchCut(&'static str),

    #[error("{what} did not converge within {iterations} iterations")]
    NoConvergence {
        what: &'static str,
        iterations: usize,
    },

    #[error("closed form is singular at {0}; evaluate through limit_eval")]
    Singular(Singularity),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("limit extrapolation failed to contract (last ratio {ratio:.3})")]
    LimitNoConvergence { ratio: f64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
