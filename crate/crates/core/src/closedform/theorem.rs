//! The assembled incomplete-gamma expression for the shell series and its
//! form in angle coordinates `alpha = cos(theta_a)`, `beta = cos(theta_b)`.

use num_complex::Complex;
use num_traits::One;

use super::{check_order, check_regular, finish, near, scaled_gamma};
use crate::complexfn::cplx::{ensure_finite, pow, sqrt};
use crate::error::{Error, Result, Singularity};
use crate::flags::{Flagged, Warnings};
use crate::series::SeriesParams;
use crate::Real;

/// Closed form of `sum_{n,p} T_n(alpha) T_p(beta) / ((a pi)^{n+p} (k)_{1-n-p})`.
///
/// Inputs within `1e-6` of `alpha = beta`, `alpha, beta = +/-1` or
/// `k = 0, -1` are rejected with [`Error::Singular`]; evaluate those through
/// [`super::limit_eval`].
pub fn closed_form<T: Real>(params: SeriesParams<T>) -> Result<Flagged<Complex<T>>> {
    check_regular(&params, "closed_form")?;
    closed_form_unchecked(params)
}

/// [`closed_form`] without the singularity moat. Only exact singular points
/// fail; close to them the result loses accuracy.
pub fn closed_form_unchecked<T: Real>(params: SeriesParams<T>) -> Result<Flagged<Complex<T>>> {
    params.validate("closed_form")?;
    let SeriesParams {
        k,
        alpha: al,
        beta: be,
        ..
    } = params;
    let z = params.a_pi();
    let one = Complex::<T>::one();
    let i = Complex::<T>::i();
    let sa = sqrt(one - al * al);
    let sb = sqrt(one - be * be);
    let denom = i * k * (k + one) * pow(z, k) * sa * (al - be) * sb * T::lit(4.0);
    if denom.norm() == T::zero() {
        return Err(Error::Singular(singular_kind(&params)));
    }
    let ap = al + i * sa;
    let am = al - i * sa;
    let bp = be + i * sb;
    let bm = be - i * sb;

    let mut flags = Warnings::empty();
    let k1 = k + one;
    let k2 = k + T::lit(2.0);
    let mut g = |s: Complex<T>, r: Complex<T>| scaled_gamma(s, z * r, &mut flags);
    let g_am0 = g(k, am)?;
    let g_am1 = g(k1, am)?;
    let g_am2 = g(k2, am)?;
    let g_ap0 = g(k, ap)?;
    let g_ap1 = g(k1, ap)?;
    let g_ap2 = g(k2, ap)?;
    let g_bm0 = g(k, bm)?;
    let g_bm1 = g(k1, bm)?;
    let g_bm2 = g(k2, bm)?;
    let g_bp0 = g(k, bp)?;
    let g_bp1 = g(k1, bp)?;
    let g_bp2 = g(k2, bp)?;
    let kk = k * k1;

    let bracket = sb * g_am2 * pow(am, -k - T::lit(2.0))
        - k1 * al * sb * g_am1 * pow(am, -k1)
        - k1 * be * sb * g_am1 * pow(am, -k1)
        + kk * al * be * sb * g_am0 * pow(am, -k)
        - kk * al * pow(ap, -k) * be * sb * g_ap0
        - kk * al * sa * be * pow(bm, -k) * g_bm0
        + kk * al * sa * be * pow(bp, -k) * g_bp0
        + k1 * al * pow(ap, -k1) * sb * g_ap1
        + k1 * pow(ap, -k1) * be * sb * g_ap1
        + k1 * sa * be * pow(bm, -k1) * g_bm1
        + k1 * al * sa * pow(bm, -k1) * g_bm1
        - k1 * sa * be * pow(bp, -k1) * g_bp1
        - k1 * al * sa * pow(bp, -k1) * g_bp1
        - pow(ap, -k2) * sb * g_ap2
        - sa * pow(bm, -k2) * g_bm2
        + sa * pow(bp, -k2) * g_bp2;

    Ok(finish(bracket / denom, flags))
}

fn singular_kind<T: Real>(p: &SeriesParams<T>) -> Singularity {
    let one = Complex::<T>::one();
    if p.alpha == p.beta {
        Singularity::AlphaEqualsBeta
    } else if p.alpha == one || p.alpha == -one {
        Singularity::AlphaAtUnit
    } else if p.beta == one || p.beta == -one {
        Singularity::BetaAtUnit
    } else {
        Singularity::OrderAtPole
    }
}

/// The closed form written in the angles `theta_a`, `theta_b` with
/// `alpha = cos(theta_a)`, `beta = cos(theta_b)`, using `e^{+/- i theta}`,
/// `cot` and `csc` in place of the square roots.
pub fn closed_form_cos<T: Real>(
    a: Complex<T>,
    k: Complex<T>,
    theta_a: Complex<T>,
    theta_b: Complex<T>,
) -> Result<Flagged<Complex<T>>> {
    ensure_finite(a, "closed_form_cos")?;
    ensure_finite(k, "closed_form_cos")?;
    ensure_finite(theta_a, "closed_form_cos")?;
    ensure_finite(theta_b, "closed_form_cos")?;
    if a.norm() == T::zero() {
        return Err(Error::InvalidArgument(
            "closed_form_cos: a pi must be nonzero".into(),
        ));
    }
    check_order(k)?;
    let zero = Complex::new(T::zero(), T::zero());
    let (sin_a, sin_b) = (theta_a.sin(), theta_b.sin());
    let (cos_a, cos_b) = (theta_a.cos(), theta_b.cos());
    if near(sin_a, zero) || near(sin_b, zero) {
        return Err(Error::Singular(Singularity::ThetaAtMultipleOfPi));
    }
    if near(cos_a, cos_b) {
        return Err(Error::Singular(Singularity::AlphaEqualsBeta));
    }

    let z = a * T::PI();
    let one = Complex::<T>::one();
    let i = Complex::<T>::i();
    let e_a = (i * theta_a).exp();
    let em_a = (-i * theta_a).exp();
    let e_b = (i * theta_b).exp();
    let em_b = (-i * theta_b).exp();
    let cot_a = cos_a / sin_a;
    let cot_b = cos_b / sin_b;
    let csc_a = sin_a.inv();
    let csc_b = sin_b.inv();
    let sum = cos_a + cos_b;
    let k1 = k + one;
    let k2 = k + T::lit(2.0);

    let mut flags = Warnings::empty();
    let mut g = |s: Complex<T>, r: Complex<T>| scaled_gamma(s, z * r, &mut flags);

    let bracket = pow(em_a, -k) * k * k1 * cos_b * cot_a * g(k, em_a)?
        - pow(e_a, -k) * k * k1 * cos_b * cot_a * g(k, e_a)?
        - k * k1 * cos_a * cot_b * (pow(e_b, k) * g(k, em_b)? - pow(em_b, k) * g(k, e_b)?)
        - e_a * pow(em_a, -k) * k1 * sum * csc_a * g(k1, em_a)?
        + em_a * pow(e_a, -k) * k1 * sum * csc_a * g(k1, e_a)?
        + e_b * pow(e_b, k) * k1 * sum * csc_b * g(k1, em_b)?
        - em_b * pow(em_b, k) * k1 * sum * csc_b * g(k1, e_b)?
        + e_a * e_a * pow(em_a, -k) * csc_a * g(k2, em_a)?
        - em_a * em_a * pow(e_a, -k) * csc_a * g(k2, e_a)?
        - e_b * e_b * pow(e_b, k) * csc_b * g(k2, em_b)?
        + em_b * em_b * pow(em_b, k) * csc_b * g(k2, e_b)?;

    let denom = k * i * k1 * pow(z, k) * (cos_a - cos_b) * T::lit(4.0);
    Ok(finish(bracket / denom, flags))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(re: f64) -> Complex<f64> {
        Complex::new(re, 0.0)
    }

    #[test]
    fn unit_order_anchor() {
        let p = SeriesParams::with_a_pi(cx(10.0), cx(1.0), cx(0.3), cx(-0.4));
        let v = closed_form(p).unwrap().value;
        assert!((v - cx(0.99)).norm() < 1e-13, "{v}");
        let h = std::f64::consts::FRAC_PI_2;
        let v = closed_form_cos(cx(10.0 / std::f64::consts::PI), cx(1.0), cx(h), cx(h / 1.5))
            .unwrap()
            .value;
        assert!((v - cx(1.05)).norm() < 1e-13, "{v}");
    }

    #[test]
    fn moat() {
        let p = SeriesParams::with_a_pi(cx(10.0), cx(1.0), cx(0.3), cx(0.3 + 1e-7));
        assert!(matches!(
            closed_form(p),
            Err(Error::Singular(Singularity::AlphaEqualsBeta))
        ));
        let p = SeriesParams::with_a_pi(cx(10.0), cx(1.0), cx(1.0), cx(0.3));
        assert!(matches!(
            closed_form(p),
            Err(Error::Singular(Singularity::AlphaAtUnit))
        ));
        let p = SeriesParams::with_a_pi(cx(10.0), cx(-1.0), cx(0.2), cx(0.3));
        assert!(matches!(
            closed_form(p),
            Err(Error::Singular(Singularity::OrderAtPole))
        ));
    }
}
