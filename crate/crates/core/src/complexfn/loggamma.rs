use num_complex::Complex;
use num_traits::Zero;

use super::cplx::{ensure_finite, exp_flagged, ln};
use crate::error::{Error, Result};
use crate::flags::Flagged;
use crate::Real;

// B_{2j} / (2j (2j - 1)), j = 1..10
const STIRLING: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
];

const SHIFT_TARGET: f64 = 10.0;
const POLE_TOL: f64 = 1e-12;

/// Principal log-gamma: analytic in the plane cut along `(-inf, 0]` and
/// real on the positive real axis.
///
/// Uses the Stirling series once `Re z >= 10`, shifting upward with
/// `ln Gamma(z) = ln Gamma(z + n) - sum ln(z + j)` otherwise.
pub fn log_gamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    ensure_finite(z, "log_gamma")?;
    check_pole(z, "log_gamma")?;

    let target = T::lit(SHIFT_TARGET);
    let mut w = z;
    let mut shift = Complex::zero();
    // Summing principal logs factor by factor keeps the result on the branch
    // that is analytic off the negative real axis and real for real z > 0.
    while w.re < target {
        shift += ln(w);
        w.re += T::one();
    }
    Ok(stirling(w) - shift)
}

/// `Gamma(z)` via `exp(log_gamma(z))`, saturating on overflow.
pub fn gamma<T: Real>(z: Complex<T>) -> Result<Flagged<Complex<T>>> {
    Ok(exp_flagged(log_gamma(z)?))
}

pub(crate) fn check_pole<T: Real>(z: Complex<T>, what: &'static str) -> Result<()> {
    if z.re <= T::lit(POLE_TOL) {
        let r = z.re.round();
        if (z.re - r).abs() < T::lit(POLE_TOL) && z.im.abs() < T::lit(POLE_TOL) {
            return Err(Error::Pole {
                what,
                re: z.re.as_f64(),
                im: z.im.as_f64(),
            });
        }
    }
    Ok(())
}

fn stirling<T: Real>(w: Complex<T>) -> Complex<T> {
    let half = T::lit(0.5);
    let half_ln_2pi = T::lit(0.918_938_533_204_672_8);
    let lw = ln(w);
    let inv = w.inv();
    let inv2 = inv * inv;
    // Horner in 1/w^2, then one factor of 1/w.
    let mut acc = Complex::new(T::lit(STIRLING[STIRLING.len() - 1]), T::zero());
    for &coef in STIRLING.iter().rev().skip(1) {
        acc = acc * inv2 + T::lit(coef);
    }
    (w - half) * lw - w + half_ln_2pi + acc * inv
}
