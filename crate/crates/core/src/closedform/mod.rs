//! Closed forms of the shell series: the twelve contour terms, the
//! assembled incomplete-gamma expression and its cosine form, the named
//! special cases, and limits at removable singularities.
//!
//! Throughout, `z = a pi` and `r = x +/- i sqrt(1 - x^2)` for `x` one of
//! `alpha`, `beta`. Incomplete gammas enter only through the combination
//! `e^{z r} Gamma(s, z r)`, which is evaluated in scaled form.

mod contour;
mod limit;
mod named;
mod theorem;

pub use contour::{
    contour_sum, contour_term, ContourTermSpec, PrefactorKind, RootSign, Side, CONTOUR_TERMS,
};
pub use limit::{limit_eval, LimitKind, LimitSpec, LimitValue};
pub use named::{diff_closed_form, example1_erfc_value, golden_ratio_value, prop1_value};
pub use theorem::{closed_form, closed_form_cos, closed_form_unchecked};

use num_complex::Complex;

use crate::complexfn::cplx::is_integer;
use crate::complexfn::{cplx::on_negative_axis, upper_scaled_principal};
use crate::error::{Error, Result, Singularity};
use crate::flags::{Flagged, Warnings};
use crate::series::SeriesParams;
use crate::Real;

/// Distance below which inputs count as sitting on a removable singularity.
pub const SINGULARITY_MOAT: f64 = 1e-6;

pub(crate) fn near<T: Real>(a: Complex<T>, b: Complex<T>) -> bool {
    (a - b).norm() < T::lit(SINGULARITY_MOAT)
}

/// Rejects `alpha ~ beta`, `alpha ~ +/-1`, `beta ~ +/-1` and `k ~ 0, -1`.
pub(crate) fn check_regular<T: Real>(p: &SeriesParams<T>, what: &'static str) -> Result<()> {
    p.validate(what)?;
    let one = Complex::new(T::one(), T::zero());
    if near(p.alpha, p.beta) {
        return Err(Error::Singular(Singularity::AlphaEqualsBeta));
    }
    if near(p.alpha, one) || near(p.alpha, -one) {
        return Err(Error::Singular(Singularity::AlphaAtUnit));
    }
    if near(p.beta, one) || near(p.beta, -one) {
        return Err(Error::Singular(Singularity::BetaAtUnit));
    }
    check_order(p.k)
}

pub(crate) fn check_order<T: Real>(k: Complex<T>) -> Result<()> {
    let one = Complex::new(T::one(), T::zero());
    if near(k, Complex::new(T::zero(), T::zero())) || near(k, -one) {
        return Err(Error::Singular(Singularity::OrderAtPole));
    }
    Ok(())
}

/// `e^w Gamma(s, w)` with the negative real axis read from above; flagged
/// when that choice matters.
pub(crate) fn scaled_gamma<T: Real>(
    s: Complex<T>,
    w: Complex<T>,
    flags: &mut Warnings,
) -> Result<Complex<T>> {
    if on_negative_axis(w) && !is_integer(s) {
        *flags |= Warnings::BRANCH_SENSITIVE;
    }
    Ok(upper_scaled_principal(s, w)?.record(flags))
}

pub(crate) fn finish<T: Real>(value: Complex<T>, mut flags: Warnings) -> Flagged<Complex<T>> {
    if !(value.re.is_finite() && value.im.is_finite()) {
        flags |= Warnings::OVERFLOW_SATURATION;
    }
    Flagged::new(value, flags)
}
