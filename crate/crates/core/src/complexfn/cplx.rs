//! Branch conventions and small complex utilities.
//!
//! Every logarithm, power and square root in the crate goes through this
//! module so that the principal branch (-pi < arg <= pi) is applied
//! uniformly. A negative real number carrying a `-0.0` imaginary part is
//! treated as lying on the upper side of the cut, the same as `+0.0`.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::flags::{Flagged, Warnings};
use crate::Real;

#[inline]
pub fn c<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(T::lit(re), T::lit(im))
}

#[inline]
pub fn real<T: Real>(re: T) -> Complex<T> {
    Complex::new(re, T::zero())
}

/// Maps a signed-zero imaginary part to `+0.0`.
#[inline]
pub fn canonical<T: Real>(z: Complex<T>) -> Complex<T> {
    if z.im == T::zero() {
        Complex::new(z.re, T::zero())
    } else {
        z
    }
}

pub fn ensure_finite<T: Real>(z: Complex<T>, what: &'static str) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite(what))
    }
}

/// True when `z` lies on the closed negative real axis (excluding 0).
#[inline]
pub fn on_negative_axis<T: Real>(z: Complex<T>) -> bool {
    z.im == T::zero() && z.re < T::zero()
}

/// Principal logarithm, `arg` in (-pi, pi].
#[inline]
pub fn ln<T: Real>(z: Complex<T>) -> Complex<T> {
    canonical(z).ln()
}

/// Principal square root.
#[inline]
pub fn sqrt<T: Real>(z: Complex<T>) -> Complex<T> {
    canonical(z).sqrt()
}

/// Principal power `z^s = exp(s log z)`; `0^s` is 0 for `Re s > 0` and 1 for `s = 0`.
pub fn pow<T: Real>(z: Complex<T>, s: Complex<T>) -> Complex<T> {
    if z.is_zero() {
        if s.is_zero() {
            return Complex::one();
        }
        if s.re > T::zero() {
            return Complex::zero();
        }
        return Complex::new(T::infinity(), T::zero());
    }
    if s.im == T::zero() && s.re == s.re.round() && s.re.abs() <= T::lit(64.0) {
        return powi(z, s.re.to_i32().unwrap_or(0));
    }
    (s * ln(z)).exp()
}

/// Integer power by repeated squaring.
pub fn powi<T: Real>(z: Complex<T>, n: i32) -> Complex<T> {
    let mut base = if n < 0 { z.inv() } else { z };
    let mut e = n.unsigned_abs();
    let mut acc = Complex::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base = base * base;
        e >>= 1;
    }
    acc
}

/// `exp(w)` with saturation: overflow is clamped to the largest finite
/// modulus (phase kept) and flagged; underflow to zero is flagged too.
pub fn exp_flagged<T: Real>(w: Complex<T>) -> Flagged<Complex<T>> {
    let ln_max = T::max_value().ln();
    let ln_min = (T::min_positive_value() * T::epsilon()).ln();
    if w.re > ln_max {
        let phase = Complex::new(w.im.cos(), w.im.sin());
        return Flagged::new(phase * T::max_value(), Warnings::OVERFLOW_SATURATION);
    }
    let v = w.exp();
    if w.re < ln_min {
        return Flagged::new(v, Warnings::OVERFLOW_SATURATION);
    }
    Flagged::clean(v)
}

/// Nearest integer when `x` is within `tol` of it (and real).
pub fn near_integer<T: Real>(x: Complex<T>, tol: T) -> Option<i64> {
    let r = x.re.round();
    if (x.re - r).abs() <= tol && x.im.abs() <= tol {
        r.to_i64()
    } else {
        None
    }
}

/// Exact integer test (no tolerance).
#[inline]
pub fn is_integer<T: Real>(x: Complex<T>) -> bool {
    x.im == T::zero() && x.re == x.re.round()
}

/// Largest modulus among the finite components, used for saturating values.
#[inline]
pub fn is_finite<T: Real>(z: Complex<T>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}
