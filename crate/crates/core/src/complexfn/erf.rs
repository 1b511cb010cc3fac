//! Complementary error function for complex arguments.

use num_complex::Complex;
use num_traits::{One, Zero};

use super::cplx::ensure_finite;
use super::incgamma::{lower_series, upper_principal};
use crate::error::Result;
use crate::flags::{Flagged, Warnings};
use crate::Real;

const SATURATION_RADIUS: f64 = 26.0;

/// `erfc(z)`.
///
/// In the closed first quadrant `erfc(z) = Gamma(1/2, z^2) / sqrt(pi)`; the
/// rest of the plane follows from `erfc(conj z) = conj erfc(z)` and
/// `erfc(-z) = 2 - erfc(z)`. For `|z| > 26` along directions where the value
/// tends to 0 or 2, the result is flagged as saturated.
pub fn erfc_complex<T: Real>(z: Complex<T>) -> Result<Flagged<Complex<T>>> {
    ensure_finite(z, "erfc_complex")?;
    if z.is_zero() {
        return Ok(Flagged::clean(Complex::one()));
    }
    if z.im < T::zero() {
        return Ok(erfc_complex(z.conj())?.map(|v| v.conj()));
    }
    if z.re < T::zero() {
        let two = T::lit(2.0);
        return Ok(erfc_complex(-z)?.map(|v| Complex::new(two, T::zero()) - v));
    }
    let mut flags = Warnings::empty();
    let half = Complex::new(T::lit(0.5), T::zero());
    let g = upper_principal(half, z * z)?.record(&mut flags);
    if z.norm() > T::lit(SATURATION_RADIUS) && z.re > z.im {
        flags |= Warnings::OVERFLOW_SATURATION;
    }
    Ok(Flagged::new(g / T::PI().sqrt(), flags))
}

/// `erf(z) = 1 - erfc(z)`, using `gamma(1/2, z^2) / sqrt(pi)` near the
/// origin where the subtraction would cancel.
pub fn erf_complex<T: Real>(z: Complex<T>) -> Result<Flagged<Complex<T>>> {
    ensure_finite(z, "erf_complex")?;
    if z.is_zero() {
        return Ok(Flagged::clean(Complex::zero()));
    }
    if z.norm() >= T::one() {
        return Ok(erfc_complex(z)?.map(|v| Complex::<T>::one() - v));
    }
    if z.im < T::zero() {
        return Ok(erf_complex(z.conj())?.map(|v| v.conj()));
    }
    if z.re < T::zero() {
        return Ok(erf_complex(-z)?.map(|v| -v));
    }
    let half = Complex::new(T::lit(0.5), T::zero());
    Ok(lower_series(half, z * z)?.map(|g| g / T::PI().sqrt()))
}
