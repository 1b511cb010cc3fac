//! Special cases of the closed form written in terms of exponential
//! integrals, error functions and incomplete gammas.

use num_complex::Complex;
use num_traits::{One, Zero};

use super::{finish, scaled_gamma};
use crate::complexfn::cplx::{ensure_finite, exp_flagged, is_integer, pow};
use crate::complexfn::erfc_complex;
use crate::error::{Error, Result};
use crate::flags::{Flagged, Warnings};
use crate::Real;

fn check<T: Real>(a: Complex<T>, k: Complex<T>, what: &'static str) -> Result<()> {
    ensure_finite(a, what)?;
    ensure_finite(k, what)?;
    if a.is_zero() {
        return Err(Error::InvalidArgument(format!(
            "{what}: a pi must be nonzero"
        )));
    }
    if k.is_zero() {
        return Err(Error::Pole {
            what,
            re: 0.0,
            im: 0.0,
        });
    }
    Ok(())
}

/// `e^w E_nu(w) = e^w Gamma(1 - nu, w) / w^{1 - nu}`.
fn scaled_e<T: Real>(nu: Complex<T>, w: Complex<T>, flags: &mut Warnings) -> Result<Complex<T>> {
    let s = Complex::<T>::one() - nu;
    Ok(scaled_gamma(s, w, flags)? / pow(w, s))
}

/// `1 + 1/k + e^{a pi} (1 + k - a pi) E_{1-k}(a pi)`: the series at
/// `alpha = beta = 1`.
pub fn prop1_value<T: Real>(a: Complex<T>, k: Complex<T>) -> Result<Flagged<Complex<T>>> {
    check(a, k, "prop1_value")?;
    let z = a * T::PI();
    let one = Complex::<T>::one();
    let mut flags = Warnings::empty();
    let e = scaled_e(one - k, z, &mut flags)?;
    Ok(finish(one + k.inv() + (one + k - z) * e, flags))
}

/// The series at `alpha = sqrt(5)`, `beta = sqrt(5)/2`:
/// `1/k + (1 / (4 sqrt 5)) sum_j w_j e^{c_j a pi} E_{1-k}(c_j a pi)` with
/// `c_j` the powers `phi^{-2}, phi^{-1}, phi, phi^2` of the golden ratio.
pub fn golden_ratio_value<T: Real>(a: Complex<T>, k: Complex<T>) -> Result<Flagged<Complex<T>>> {
    check(a, k, "golden_ratio_value")?;
    let z = a * T::PI();
    let s5 = T::lit(5.0).sqrt();
    let two = T::lit(2.0);
    let four = T::lit(4.0);
    let terms = [
        (four + s5, s5 - two),
        (s5 - T::one(), (s5 - T::one()) / two),
        (T::one() + s5, (T::one() + s5) / two),
        (s5 - four, s5 + two),
    ];
    let nu = Complex::<T>::one() - k;
    let mut flags = Warnings::empty();
    let mut acc = Complex::<T>::zero();
    for (w, c) in terms {
        acc += scaled_e(nu, z * c, &mut flags)? * w;
    }
    Ok(finish(k.inv() + acc / (four * s5), flags))
}

/// The erfc expression for `k = -1/2`, `a pi = e^4`, `alpha = 0`,
/// `beta = cos(pi/4)`.
pub fn example1_erfc_value<T: Real>() -> Result<Flagged<Complex<T>>> {
    let mut flags = Warnings::empty();
    let pi = T::PI();
    let e2 = T::lit(2.0).exp();
    let e4 = T::lit(4.0).exp();
    let s2 = T::lit(2.0).sqrt();
    let i = Complex::<T>::i();
    let one = Complex::<T>::one();
    // (-1)^p on the principal branch
    let unit = |p: f64| Complex::from_polar(T::one(), pi * T::lit(p));
    let mut erfc = |w: Complex<T>| erfc_complex(w).map(|v| v.record(&mut flags));
    let ex = |w: Complex<T>, flags: &mut Warnings| exp_flagged(w).record(flags);

    // erf(w) + 1 is evaluated as erfc(-w)
    let t1 = (one * T::lit(2.0) + i * s2) * (-i * e4).exp() * erfc(-unit(0.75) * e2)?;
    let t2 = unit(0.875) * T::lit(2.0) * erfc(-unit(0.875) * e2)?;
    let t3 = unit(0.625) * T::lit(2.0) * erfc(unit(0.125) * e2)?;
    let t4 = (one * s2 + i * T::lit(2.0)) * (i * e4).exp() * erfc(unit(0.25) * e2)?;
    let t2 = t2 * ex(-unit(0.75) * e4, &mut flags);
    let t3 = t3 * ex(unit(0.25) * e4, &mut flags);
    let front = (one + i) / T::lit(4.0) * e2 * pi.sqrt();
    Ok(finish(front * (t1 + t2 + t3 - t4), flags))
}

/// Closed form of the difference series at `alpha = beta = c`,
/// `c = 1..=5`:
/// `sum_{n,p} (-1 + (-1)^{n+p}) T_n(c) T_p(c) / ((a pi)^{n+p} (k)_{1-n-p})`.
///
/// The formulas contain `Gamma(k, .)` at negative arguments and powers such
/// as `(-a)^k`; all are taken on the principal branch, so for non-integer
/// `k` the value is flagged as branch-sensitive. The `c = 3` and `c = 5`
/// formulas carry products of powers of negative surds and are always
/// flagged.
pub fn diff_closed_form<T: Real>(
    c: u8,
    a: Complex<T>,
    k: Complex<T>,
) -> Result<Flagged<Complex<T>>> {
    check(a, k, "diff_closed_form")?;
    let mut flags = Warnings::empty();
    let v = match c {
        1 => diff1(a, k, &mut flags)?,
        2 => diff2(a, k, &mut flags)?,
        3 => diff_odd(a, k, Surd::Three, &mut flags)?,
        4 => diff4(a, k, &mut flags)?,
        5 => diff_odd(a, k, Surd::Five, &mut flags)?,
        _ => {
            return Err(Error::InvalidArgument(format!(
                "diff_closed_form: c must be in 1..=5, got {c}"
            )));
        }
    };
    if c == 3 || c == 5 {
        flags |= Warnings::BRANCH_SENSITIVE;
    }
    if !is_integer(k) {
        flags |= Warnings::BRANCH_SENSITIVE;
    }
    Ok(finish(v, flags))
}

fn diff1<T: Real>(a: Complex<T>, k: Complex<T>, f: &mut Warnings) -> Result<Complex<T>> {
    let pi = T::PI();
    let i = Complex::<T>::i();
    let one = Complex::<T>::one();
    let z = a * pi;
    let eik = (i * k * pi).exp();
    let lead = k * (one + k + z) * scaled_gamma(k, -z, f)?
        + (pow(-a, k) - pow(a, k) * eik) * (one + k) * pow(one * pi, k);
    let tail = k * (one + k - z) * scaled_gamma(k, z, f)?;
    Ok((lead / eik - tail) / (pow(z, k) * k))
}

fn diff2<T: Real>(a: Complex<T>, k: Complex<T>, f: &mut Warnings) -> Result<Complex<T>> {
    let pi = T::PI();
    let i = Complex::<T>::i();
    let s3 = T::lit(3.0).sqrt();
    let two = T::lit(2.0);
    let three = T::lit(3.0);
    let six = T::lit(6.0);
    let nu = Complex::<T>::one() - k;
    let eik = (i * k * pi).exp();
    let (m, p) = (s3 - two, s3 + two);
    let front = pow(a, -k) / (k * T::lit(12.0));
    let first = (pow(-a, k) - pow(a, k) * eik) * (k + two) * six / eik;
    let body = -pow(a, k)
        * (k * three + six + s3 * two + a * (m * three * pi))
        * scaled_e(nu, -(a * m * pi), f)?
        + pow(-a, k) / eik
            * (k * three + six + s3 * two - a * (m * three * pi))
            * scaled_e(nu, a * m * pi, f)?
        + pow(-a, k) / eik
            * (k * three + six - s3 * two + a * (p * three * pi))
            * scaled_e(nu, -(a * p * pi), f)?
        + pow(a, k)
            * (-k * three - six + s3 * two + a * (p * three * pi))
            * scaled_e(nu, a * p * pi, f)?;
    Ok(front * (first + k * body))
}

fn diff4<T: Real>(a: Complex<T>, k: Complex<T>, f: &mut Warnings) -> Result<Complex<T>> {
    let pi = T::PI();
    let i = Complex::<T>::i();
    let s15 = T::lit(15.0).sqrt();
    let (m, p) = (s15 - T::lit(4.0), s15 + T::lit(4.0));
    let eik = (i * k * pi).exp();
    let c15 = T::lit(15.0);
    let c30 = T::lit(30.0);
    let four = T::lit(4.0);
    let one = Complex::<T>::one();
    let front = pow(a, -k) * pow(one * (m * pi), -k) / (k * T::lit(60.0));
    let body = (pow(-a, k) - pow(a, k) * eik)
        * (k + T::lit(2.0))
        * pow(one * ((four - s15) * pi), k)
        * c30
        - eik
            * k
            * (k * c15 + c30 + s15 * four + a * (m * c15 * pi))
            * scaled_gamma(k, -(a * m * pi), f)?
        + k * (k * c15 + c30 + s15 * four - a * (m * c15 * pi)) * scaled_gamma(k, a * m * pi, f)?
        + pow(one * (T::lit(31.0) - s15 * T::lit(8.0)), k)
            * k
            * ((k * c15 + c30 - s15 * four + a * (p * c15 * pi))
                * scaled_gamma(k, -(a * p * pi), f)?
                + eik
                    * (-k * c15 - c30 + s15 * four + a * (p * c15 * pi))
                    * scaled_gamma(k, a * p * pi, f)?);
    Ok(front * body)
}

#[derive(Clone, Copy)]
enum Surd {
    Three,
    Five,
}

/// The `c = 3` and `c = 5` formulas share one shape. With
/// `P = c + d`, `p = c - d`, `m = -p` where `d = 2 sqrt 2` or `2 sqrt 6`,
/// and constants `(n, u, h, g)` = `(16, 8, 3 sqrt 2, 4)` or `(48, 24, 5 sqrt 6, 12)`.
/// The printed exponentials all pair with a gamma of the same argument and
/// are folded into `e^w Gamma(k, w)`.
fn diff_odd<T: Real>(
    a: Complex<T>,
    k: Complex<T>,
    which: Surd,
    f: &mut Warnings,
) -> Result<Complex<T>> {
    let pi = T::PI();
    let i = Complex::<T>::i();
    let one = Complex::<T>::one();
    let (c, d, n, u, h, g) = match which {
        Surd::Three => {
            let s2 = T::lit(2.0).sqrt();
            (3.0, s2 * T::lit(2.0), 16.0, 8.0, s2 * T::lit(3.0), 4.0)
        }
        Surd::Five => {
            let s6 = T::lit(6.0).sqrt();
            (5.0, s6 * T::lit(2.0), 48.0, 24.0, s6 * T::lit(5.0), 12.0)
        }
    };
    let (c, n, u, g) = (T::lit(c), T::lit(n), T::lit(u), T::lit(g));
    let big = c + d;
    let small = c - d;
    let m = one * (-small);
    let p = one * small;
    let two = T::lit(2.0);
    let ikpi = i * k * pi;
    let e1 = ikpi.exp();
    let (e2, e3) = (e1 * e1, e1 * e1 * e1);
    let front =
        pow(m, -k * two) * pow(a, -k) * pow(m * a, -k) * pow(one * (-(big * pi)), -k) / (k * n);
    let body = e2
        * pow(p, k * two)
        * pow(-a, k)
        * (pow(-a, k) - pow(a, k) * e1)
        * (k + two)
        * pow(one * pi, k)
        * u
        + e2 * pow(p, k * T::lit(3.0))
            * pow(-a, k)
            * k
            * (k * g + u - h + a * (big * g * pi))
            * scaled_gamma(k, -(a * big * pi), f)?
        + pow(m * a, k)
            * k
            * (-e3 * (k * g + u + h + a * m * g * pi) * scaled_gamma(k, a * p * pi, f)?
                + e2 * (k * g + u + h + a * p * g * pi) * scaled_gamma(k, a * m * pi, f)?
                + e3 * pow(p, k * two)
                    * (-k * g - u + h + a * (big * g * pi))
                    * scaled_gamma(k, a * big * pi, f)?);
    Ok(front * body)
}
