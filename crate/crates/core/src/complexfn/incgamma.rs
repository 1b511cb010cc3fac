//! Upper and lower incomplete gamma functions of complex order and argument.
//!
//! Regime selection: the lower-gamma power series (combined with
//! `gamma(s,z) + Gamma(s,z) = Gamma(s)`) inside `|z| < 1.5 (1 + |s|)`, the
//! Legendre continued fraction outside it. Each regime falls back on the
//! other if it fails to converge within the iteration budget.

use num_complex::Complex;
use num_traits::{One, Zero};

use super::cplx::{ensure_finite, exp_flagged, is_integer, ln, near_integer, on_negative_axis};
use super::loggamma::{check_pole, gamma};
use crate::error::{Error, Result};
use crate::flags::{Flagged, Warnings};
use crate::Real;

/// Iteration budget shared by the series and continued-fraction loops.
pub const MAX_ITER: usize = 10_000;

const CROSSOVER: f64 = 1.5;
const CANCELLATION_LIMIT: f64 = 4.0;
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Sheet selector for `Gamma(s, z e^{2 pi i m})`. `winding = 0` is the
/// principal sheet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub struct GammaBranchSpec {
    pub winding: i64,
}

impl GammaBranchSpec {
    pub const PRINCIPAL: Self = Self { winding: 0 };

    pub fn new(winding: i64) -> Self {
        Self { winding }
    }
}

/// Upper incomplete gamma `Gamma(s, z)` on the principal branch of `z`.
///
/// Arguments on the negative real axis are rejected for non-integer `s`
/// because the value depends on the side of the cut; use
/// [`analytic_continuation_gamma`] to pick one.
pub fn upper_gamma<T: Real>(s: Complex<T>, z: Complex<T>) -> Result<Flagged<Complex<T>>> {
    ensure_finite(s, "upper_gamma")?;
    ensure_finite(z, "upper_gamma")?;
    if on_negative_axis(z) && !is_integer(s) {
        return Err(Error::BranchCut("upper_gamma"));
    }
    upper_principal(s, z)
}

/// Lower incomplete gamma `gamma(s, z)`.
pub fn lower_gamma<T: Real>(s: Complex<T>, z: Complex<T>) -> Result<Flagged<Complex<T>>> {
    ensure_finite(s, "lower_gamma")?;
    ensure_finite(z, "lower_gamma")?;
    check_pole(s, "lower_gamma")?;
    if z.is_zero() {
        if s.re > T::zero() {
            return Ok(Flagged::clean(Complex::zero()));
        }
        return Err(Error::Pole {
            what: "lower_gamma at z = 0",
            re: s.re.as_f64(),
            im: s.im.as_f64(),
        });
    }
    if on_negative_axis(z) && !is_integer(s) {
        return Err(Error::BranchCut("lower_gamma"));
    }
    let complement = |s, z| -> Result<Flagged<Complex<T>>> {
        let mut flags = Warnings::empty();
        let full = gamma(s)?.record(&mut flags);
        let upper = continued_fraction(s, z, false)?.record(&mut flags);
        Ok(Flagged::new(full - upper, flags))
    };
    if series_regime(s, z) {
        lower_series(s, z).or_else(|_| complement(s, z))
    } else {
        complement(s, z).or_else(|_| lower_series(s, z))
    }
}

/// `Gamma(s, z e^{2 pi i m})` for the winding `m` in `branch`.
///
/// `m = 0` off the cut is exactly [`upper_gamma`]. On the negative real
/// axis the base value is taken from the upper side (`arg z = pi`), and
/// the result is flagged as branch-sensitive when `s` is not an integer.
pub fn analytic_continuation_gamma<T: Real>(
    s: Complex<T>,
    z: Complex<T>,
    branch: GammaBranchSpec,
) -> Result<Flagged<Complex<T>>> {
    ensure_finite(s, "analytic_continuation_gamma")?;
    ensure_finite(z, "analytic_continuation_gamma")?;
    if z.is_zero() {
        return Err(Error::InvalidArgument(
            "analytic_continuation_gamma needs z != 0".into(),
        ));
    }
    check_pole(s, "analytic_continuation_gamma")?;
    let on_cut = on_negative_axis(z);
    if branch.winding == 0 && !on_cut {
        return upper_gamma(s, z);
    }
    let mut flags = Warnings::empty();
    if on_cut && !is_integer(s) {
        flags |= Warnings::BRANCH_SENSITIVE;
    }
    let base = upper_principal(s, z)?.record(&mut flags);
    if branch.winding == 0 {
        return Ok(Flagged::new(base, flags));
    }
    let wound = wind_sheet(s, base, branch.winding)?.record(&mut flags);
    Ok(Flagged::new(wound, flags))
}

/// Maps a value of `Gamma(s, .)` on sheet `j` to sheet `j + winding`:
/// `V -> e^{2 pi i m s} V + (1 - e^{2 pi i m s}) Gamma(s)`.
pub fn wind_sheet<T: Real>(
    s: Complex<T>,
    value: Complex<T>,
    winding: i64,
) -> Result<Flagged<Complex<T>>> {
    if winding == 0 {
        return Ok(Flagged::clean(value));
    }
    let mut flags = Warnings::empty();
    let phase = winding_phase(s, winding);
    let one_minus = Complex::<T>::one() - phase;
    if one_minus.is_zero() {
        return Ok(Flagged::clean(value));
    }
    let full = gamma(s)?.record(&mut flags);
    Ok(Flagged::new(phase * value + one_minus * full, flags))
}

/// `e^{2 pi i m s}` with the real part of `m s` reduced modulo 1 first, so
/// that integer orders give a phase of exactly one.
fn winding_phase<T: Real>(s: Complex<T>, winding: i64) -> Complex<T> {
    let m = T::from_i64(winding).expect("winding representable");
    let turns = m * s.re;
    let frac = turns - turns.floor();
    let angle = T::TAU() * frac;
    let modulus = (-T::TAU() * m * s.im).exp();
    Complex::new(modulus * angle.cos(), modulus * angle.sin())
}

/// Principal-branch upper gamma with the negative real axis read as
/// `arg z = pi`. No branch-cut rejection.
pub(crate) fn upper_principal<T: Real>(
    s: Complex<T>,
    z: Complex<T>,
) -> Result<Flagged<Complex<T>>> {
    upper_core(s, z, false)
}

/// `e^z Gamma(s, z)` under the same conventions as [`upper_principal`].
pub(crate) fn upper_scaled_principal<T: Real>(
    s: Complex<T>,
    z: Complex<T>,
) -> Result<Flagged<Complex<T>>> {
    upper_core(s, z, true)
}

/// Exponentially scaled upper gamma `e^z Gamma(s, z)` on the principal
/// branch. Finite where `Gamma(s, z)` alone would underflow, as in the
/// products `e^{w} Gamma(s, w)` of the closed forms.
pub fn upper_gamma_scaled<T: Real>(s: Complex<T>, z: Complex<T>) -> Result<Flagged<Complex<T>>> {
    ensure_finite(s, "upper_gamma_scaled")?;
    ensure_finite(z, "upper_gamma_scaled")?;
    if on_negative_axis(z) && !is_integer(s) {
        return Err(Error::BranchCut("upper_gamma_scaled"));
    }
    upper_scaled_principal(s, z)
}

fn upper_core<T: Real>(s: Complex<T>, z: Complex<T>, scaled: bool) -> Result<Flagged<Complex<T>>> {
    let rescale = |v: Flagged<Complex<T>>| -> Flagged<Complex<T>> {
        if !scaled {
            return v;
        }
        let mut flags = v.flags;
        let e = exp_flagged(z).record(&mut flags);
        Flagged::new(v.value * e, flags)
    };
    if z.is_zero() {
        if s.re > T::zero() {
            return gamma(s);
        }
        return Err(Error::Pole {
            what: "upper_gamma at z = 0",
            re: s.re.as_f64(),
            im: s.im.as_f64(),
        });
    }
    if let Some(n) = near_integer(s, T::lit(1e-12)).filter(|&n| n <= 0) {
        let m = n.unsigned_abs() as usize;
        if on_negative_axis(z) || z.norm() < T::lit(2.0) {
            return Ok(rescale(nonpositive_integer_order(m, z)));
        }
        return continued_fraction(s, z, scaled)
            .or_else(|_| Ok(rescale(nonpositive_integer_order(m, z))));
    }
    let by_series = |s, z| -> Result<Flagged<Complex<T>>> {
        let mut flags = Warnings::empty();
        let full = gamma(s)?.record(&mut flags);
        let lower = lower_series(s, z)?.record(&mut flags);
        Ok(Flagged::new(full - lower, flags))
    };
    if on_negative_axis(z) {
        if !scaled {
            return by_series(s, z);
        }
        // e^z gamma(s, z) stays finite when gamma(s, z) does not; e^z
        // Gamma(s) may underflow, which only drops a negligible term
        let mut flags = Warnings::empty();
        let full = gamma(s)?.record(&mut flags) * z.exp();
        let lower = exp_flagged(z + lower_series_ln(s, z)?).record(&mut flags);
        return Ok(Flagged::new(full - lower, flags));
    }
    if series_regime(s, z) {
        let Ok(v) = by_series(s, z) else {
            return continued_fraction(s, z, scaled);
        };
        // Gamma(s) - gamma(s, z) cancels when the tail is small next to
        // either term; the continued fraction has no such subtraction.
        if cancellation(s, v.value) > T::lit(CANCELLATION_LIMIT) {
            if let Ok(cf) = continued_fraction(s, z, scaled) {
                return Ok(cf);
            }
        }
        Ok(rescale(v))
    } else {
        continued_fraction(s, z, scaled).or_else(|_| by_series(s, z).map(rescale))
    }
}

fn cancellation<T: Real>(s: Complex<T>, upper: Complex<T>) -> T {
    let Ok(full) = gamma(s) else {
        return T::infinity();
    };
    (full.value.norm() + (full.value - upper).norm()) / upper.norm()
}

#[inline]
fn series_regime<T: Real>(s: Complex<T>, z: Complex<T>) -> bool {
    z.norm() < T::lit(CROSSOVER) * (T::one() + s.norm())
}

/// `gamma(s, z)` by power series. For `Re z >= 0` uses
/// `z^s e^{-z} sum z^n / (s)_{n+1}`; otherwise
/// `z^s sum (-z)^n / (n! (s + n))`, whose terms do not alternate when `z`
/// is near the negative real axis.
pub(crate) fn lower_series<T: Real>(s: Complex<T>, z: Complex<T>) -> Result<Flagged<Complex<T>>> {
    Ok(exp_flagged(lower_series_ln(s, z)?))
}

/// Logarithm of [`lower_series`], finite where `gamma(s, z)` itself
/// overflows. Partial sums are renormalised as they grow.
fn lower_series_ln<T: Real>(s: Complex<T>, z: Complex<T>) -> Result<Complex<T>> {
    let tol = T::convergence_tol();
    let zmod = z.norm();
    let lz = ln(z);
    let big = T::lit(1e150);
    let ln_big = big.ln();
    let mut offset = T::zero();
    let positive = z.re >= T::zero();
    let (mut term, mut sum) = if positive {
        (s.inv(), s.inv())
    } else {
        (Complex::one(), s.inv())
    };
    for n in 1..MAX_ITER {
        let nf = T::from_count(n);
        let add = if positive {
            term = term * z / (s + nf);
            term
        } else {
            term = term * -z / nf;
            term / (s + nf)
        };
        sum += add;
        if add.norm() <= tol * sum.norm() && nf > zmod {
            let head = if positive { s * lz - z } else { s * lz };
            return Ok(head + ln(sum) + offset);
        }
        if sum.norm() > big || term.norm() > big {
            term /= big;
            sum /= big;
            offset += ln_big;
        }
    }
    Err(Error::NoConvergence {
        what: "lower gamma series",
        iterations: MAX_ITER,
    })
}

/// Legendre continued fraction for `Gamma(s, z)` (times `e^z` when
/// `scaled`), evaluated with the
/// modified Lentz method:
/// `Gamma(s,z) = e^{-z} z^s / (z + 1 - s - 1(1-s)/(z + 3 - s - 2(2-s)/(...)))`.
fn continued_fraction<T: Real>(
    s: Complex<T>,
    z: Complex<T>,
    scaled: bool,
) -> Result<Flagged<Complex<T>>> {
    let tol = T::convergence_tol();
    let tiny = T::min_positive_value().sqrt();
    let guard = |v: Complex<T>| {
        if v.is_zero() {
            Complex::new(tiny, T::zero())
        } else {
            v
        }
    };

    let mut f = guard(z + T::one() - s);
    let mut c = f;
    let mut d = Complex::<T>::zero();
    for n in 1..=MAX_ITER {
        let nf = T::from_count(n);
        let an = (s - nf) * nf;
        let bn = z + T::from_count(2 * n + 1) - s;
        d = guard(bn + an * d).inv();
        c = guard(bn + an / c);
        let delta = c * d;
        f *= delta;
        if (delta - T::one()).norm() < tol {
            let w = s * ln(z) - ln(f);
            let v = exp_flagged(if scaled { w } else { w - z });
            if !(v.value.re.is_finite() && v.value.im.is_finite()) {
                break;
            }
            return Ok(v);
        }
    }
    Err(Error::NoConvergence {
        what: "incomplete gamma continued fraction",
        iterations: MAX_ITER,
    })
}

/// `Gamma(-m, z)` for a non-positive integer order:
/// `((-1)^m / m!) (E1(z) - e^{-z} sum_{j<m} (-1)^j j! / z^{j+1})`,
/// with `E1` from its convergent power series.
fn nonpositive_integer_order<T: Real>(m: usize, z: Complex<T>) -> Flagged<Complex<T>> {
    let tol = T::convergence_tol();
    let mut power = Complex::<T>::one();
    let mut sum = Complex::<T>::zero();
    for j in 1..MAX_ITER {
        let jf = T::from_count(j);
        power = power * (-z) / jf;
        let term = power / jf;
        sum += term;
        if term.norm() <= tol * sum.norm().max(T::one()) && jf > z.norm() {
            break;
        }
    }
    let e1 = -ln(z) - sum - T::lit(EULER_GAMMA);
    if m == 0 {
        return Flagged::clean(e1);
    }
    let mut flags = Warnings::empty();
    let emz = exp_flagged(-z).record(&mut flags);
    let zinv = z.inv();
    let mut tail = Complex::<T>::zero();
    let mut fact = T::one();
    let mut zpow = zinv;
    for j in 0..m {
        if j > 0 {
            fact *= T::from_count(j);
            zpow *= zinv;
        }
        let sign = if j % 2 == 0 { T::one() } else { -T::one() };
        tail += zpow * (sign * fact);
    }
    let mfact = fact * T::from_count(m.max(1));
    let sign = if m.is_multiple_of(2) {
        T::one()
    } else {
        -T::one()
    };
    Flagged::new((e1 - emz * tail) * (sign / mfact), flags)
}
