//! Double Chebyshev series `sum_{n,p} T_n(alpha) T_p(beta) / ((a pi)^{n+p} (k)_{1-n-p})`
//! and their closed forms in terms of incomplete gamma functions.
//!
//! Every kernel is generic over [`Real`] (`f32` or `f64`). The aliases at the
//! crate root fix the scalar to `f64`.

pub mod chebyshev;
pub mod closedform;
pub mod complexfn;
pub mod error;
pub mod flags;
mod real;
pub mod series;

pub use error::{Error, Result, Singularity};
pub use flags::{Flagged, Warnings};
pub use real::Real;

pub use chebyshev::{cheb_t, growth_rate, shell_coeff, ShellCoefficient};
pub use closedform::{
    closed_form, closed_form_cos, contour_sum, contour_term, diff_closed_form, example1_erfc_value,
    golden_ratio_value, limit_eval, prop1_value, ContourTermSpec, LimitKind, LimitSpec, LimitValue,
    CONTOUR_TERMS,
};
pub use complexfn::{
    analytic_continuation_gamma, erfc_complex, exp_integral_e, log_gamma, lower_gamma,
    pochhammer_recip, upper_gamma, GammaBranchSpec,
};
pub use series::{
    difference_series, series_sum, series_terminates, SeriesResult, Termination, TruncationMode,
    TruncationPolicy,
};

/// Complex scalar used by the `f64` front end.
pub type ComplexScalar = num_complex::Complex<f64>;
/// Series parameters over `f64`.
pub type Params = series::SeriesParams<f64>;
/// Series result over `f64`.
pub type Series = series::SeriesResult<f64>;

pub use num_complex::Complex;
