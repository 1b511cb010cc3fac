//! Generalized exponential integral through the upper incomplete gamma.

use num_complex::Complex;
use num_traits::{One, Zero};

use super::cplx::{ensure_finite, is_integer, on_negative_axis, pow};
use super::incgamma::{upper_gamma, upper_gamma_scaled, upper_principal};
use crate::error::{Error, Result};
use crate::flags::{Flagged, Warnings};
use crate::Real;

/// `E_nu(z) = z^{nu - 1} Gamma(1 - nu, z)` on the principal branch.
///
/// Computed as `Gamma(1 - nu, z) / z^{1 - nu}` so that multiplying back by
/// the same power reproduces the gamma value to rounding.
pub fn exp_integral_e<T: Real>(nu: Complex<T>, z: Complex<T>) -> Result<Flagged<Complex<T>>> {
    ensure_finite(nu, "exp_integral_e")?;
    ensure_finite(z, "exp_integral_e")?;
    if z.is_zero() {
        return Err(Error::InvalidArgument("exp_integral_e needs z != 0".into()));
    }
    let s = Complex::<T>::one() - nu;
    let g = upper_gamma(s, z)?;
    Ok(g.map(|g| g / pow(z, s)))
}

/// `e^z E_nu(z)`, finite for large `Re z` where `E_nu(z)` underflows.
pub fn exp_integral_e_scaled<T: Real>(
    nu: Complex<T>,
    z: Complex<T>,
) -> Result<Flagged<Complex<T>>> {
    ensure_finite(nu, "exp_integral_e_scaled")?;
    ensure_finite(z, "exp_integral_e_scaled")?;
    if z.is_zero() {
        return Err(Error::InvalidArgument(
            "exp_integral_e_scaled needs z != 0".into(),
        ));
    }
    let s = Complex::<T>::one() - nu;
    let g = upper_gamma_scaled(s, z)?;
    Ok(g.map(|g| g / pow(z, s)))
}

/// As [`exp_integral_e`], but a negative real `z` is read as `arg z = pi`
/// instead of being rejected. Such values carry
/// [`Warnings::BRANCH_SENSITIVE`] unless `nu` is an integer.
pub fn exp_integral_e_upper<T: Real>(nu: Complex<T>, z: Complex<T>) -> Result<Flagged<Complex<T>>> {
    ensure_finite(nu, "exp_integral_e")?;
    ensure_finite(z, "exp_integral_e")?;
    if z.is_zero() {
        return Err(Error::InvalidArgument("exp_integral_e needs z != 0".into()));
    }
    let s = Complex::<T>::one() - nu;
    let mut flags = Warnings::empty();
    if on_negative_axis(z) && !is_integer(s) {
        flags |= Warnings::BRANCH_SENSITIVE;
    }
    let g = upper_principal(s, z)?.record(&mut flags);
    Ok(Flagged::new(g / pow(z, s), flags))
}
