//! Complex special-function kernels: log-gamma, incomplete gamma,
//! exponential integral, error functions and Pochhammer weights.

pub mod cplx;
mod erf;
mod expint;
mod incgamma;
mod loggamma;
mod pochhammer;

pub use erf::{erf_complex, erfc_complex};
pub use expint::{exp_integral_e, exp_integral_e_scaled, exp_integral_e_upper};
pub use incgamma::{
    analytic_continuation_gamma, lower_gamma, upper_gamma, upper_gamma_scaled, wind_sheet,
    GammaBranchSpec, MAX_ITER,
};
pub use loggamma::{gamma, log_gamma};
pub use pochhammer::pochhammer_recip;

pub(crate) use incgamma::upper_scaled_principal;
