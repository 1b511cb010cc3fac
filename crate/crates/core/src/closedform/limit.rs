//! Values of the closed form on its removable singular sets, by Richardson
//! extrapolation of nearby regular evaluations.

use num_complex::Complex;
use num_traits::{One, Zero};

use super::{closed_form_unchecked, near};
use crate::error::{Error, Result};
use crate::flags::{Flagged, Warnings};
use crate::series::SeriesParams;
use crate::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LimitKind {
    /// `beta -> beta (1 + eps)`, or `beta + eps` when `beta = 0`.
    AlphaToBeta,
    /// `alpha = 1 - eps`.
    AlphaToOne,
    /// `alpha = -1 + eps`.
    AlphaToMinusOne,
    /// `alpha = 1 - eps`, `beta = 1 - 2 eps`.
    BothToOne,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitSpec {
    pub kind: LimitKind,
    pub eps0: f64,
    pub levels: usize,
}

impl LimitSpec {
    pub fn new(kind: LimitKind) -> Self {
        Self {
            kind,
            eps0: 1e-2,
            levels: 6,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.eps0 > 0.0 && self.eps0 <= 1e-2) {
            return Err(Error::InvalidArgument(format!(
                "eps0 must lie in (0, 1e-2], got {}",
                self.eps0
            )));
        }
        if !(3..=8).contains(&self.levels) {
            return Err(Error::InvalidArgument(format!(
                "levels must lie in 3..=8, got {}",
                self.levels
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitValue<T> {
    pub value: Complex<T>,
    pub flags: Warnings,
    /// Modulus of the last change between successive extrapolants.
    pub estimate: T,
    /// Number of perturbed evaluations consumed.
    pub levels_used: usize,
    /// Largest ratio of successive extrapolant changes that was checked.
    pub worst_ratio: f64,
}

impl<T> LimitValue<T> {
    pub fn flagged(&self) -> Flagged<Complex<T>>
    where
        T: Copy,
    {
        Flagged::new(self.value, self.flags)
    }
}

/// Evaluates the closed form at `eps_j = eps0 2^{-j}` away from the
/// singular point along the direction named by `limit.kind`, and
/// extrapolates to `eps = 0` with a Richardson table for an error series in
/// integer powers of `eps`.
///
/// Stops once successive diagonal extrapolants agree to `sqrt(eps_machine)`
/// relative. Fails with [`Error::LimitNoConvergence`] if, before that, a
/// change is not at most half the previous one.
pub fn limit_eval<T: Real>(params: SeriesParams<T>, limit: LimitSpec) -> Result<LimitValue<T>> {
    params.validate("limit_eval")?;
    limit.validate()?;
    let one = Complex::<T>::one();
    let on_set = match limit.kind {
        LimitKind::AlphaToBeta => near(params.alpha, params.beta),
        LimitKind::AlphaToOne => near(params.alpha, one),
        LimitKind::AlphaToMinusOne => near(params.alpha, -one),
        LimitKind::BothToOne => near(params.alpha, one) && near(params.beta, one),
    };
    if !on_set {
        return Err(Error::InvalidArgument(format!(
            "limit_eval: parameters are not on the {:?} singular set",
            limit.kind
        )));
    }

    let perturb = |eps: T| -> SeriesParams<T> {
        let mut p = params;
        match limit.kind {
            LimitKind::AlphaToBeta => {
                p.alpha = params.beta;
                p.beta = if params.beta.is_zero() {
                    Complex::new(eps, T::zero())
                } else {
                    params.beta * (T::one() + eps)
                };
            }
            LimitKind::AlphaToOne => p.alpha = Complex::new(T::one() - eps, T::zero()),
            LimitKind::AlphaToMinusOne => p.alpha = Complex::new(eps - T::one(), T::zero()),
            LimitKind::BothToOne => {
                p.alpha = Complex::new(T::one() - eps, T::zero());
                p.beta = Complex::new(T::one() - eps - eps, T::zero());
            }
        }
        p
    };

    let floor_rel = T::epsilon().sqrt();
    let mut flags = Warnings::empty();
    let mut rows: Vec<Vec<Complex<T>>> = Vec::with_capacity(limit.levels);
    let mut prev_delta: Option<T> = None;
    let mut worst = 0.0f64;
    let mut eps = T::lit(limit.eps0);
    for j in 0..limit.levels {
        let f = closed_form_unchecked(perturb(eps))?.record(&mut flags);
        let mut row = Vec::with_capacity(j + 1);
        row.push(f);
        let mut factor = T::one();
        for i in 1..=j {
            factor *= T::lit(2.0);
            let left = row[i - 1];
            let up = rows[j - 1][i - 1];
            row.push(left + (left - up) / (factor - T::one()));
        }
        rows.push(row);
        eps /= T::lit(2.0);
        if j == 0 {
            continue;
        }
        let diag = rows[j][j];
        let delta = (diag - rows[j - 1][j - 1]).norm();
        if delta <= floor_rel * diag.norm() {
            return Ok(LimitValue {
                value: diag,
                flags,
                estimate: delta,
                levels_used: j + 1,
                worst_ratio: worst,
            });
        }
        if let Some(prev) = prev_delta {
            let ratio = (delta / prev).as_f64();
            worst = worst.max(ratio);
            if ratio > 0.5 {
                return Err(Error::LimitNoConvergence { ratio });
            }
        }
        prev_delta = Some(delta);
    }
    let last = limit.levels - 1;
    Ok(LimitValue {
        value: rows[last][last],
        flags,
        estimate: prev_delta.unwrap_or(T::infinity()),
        levels_used: limit.levels,
        worst_ratio: worst,
    })
}
