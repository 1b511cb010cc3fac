//! The twelve contour-integral addends whose sum is the shell series.
//!
//! Term `j` contributes
//! `sign * i * P * e^{z r} Gamma(m, z r) r^{-m} Gamma(k) / (4 sqrt(1-x^2) (alpha-beta) Gamma(m) z^k)`
//! where `m = k + 1 + shift`. The sign is the product of the side
//! (`alpha`: +1, `beta`: -1), the root sign, and -1 for the `(alpha + beta)`
//! prefactor.

use num_complex::Complex;
use num_traits::One;

use super::{check_regular, finish, scaled_gamma};
use crate::complexfn::cplx::{ln, pow, sqrt};
use crate::complexfn::log_gamma;
use crate::error::Result;
use crate::flags::{Flagged, Warnings};
use crate::series::SeriesParams;
use crate::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Alpha,
    Beta,
}

/// Sign in `r = x +/- i sqrt(1 - x^2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootSign {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PrefactorKind {
    /// Order `k + 2`, prefactor 1.
    Unit,
    /// Order `k + 1`, prefactor `alpha + beta`.
    AlphaPlusBeta,
    /// Order `k`, prefactor `alpha beta`.
    AlphaBetaProduct,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ContourTermSpec {
    pub index: u8,
    pub root_sign: RootSign,
    pub variable: Side,
    /// Gamma order relative to `k + 1`.
    pub order_shift: i8,
    pub prefactor_kind: PrefactorKind,
}

const fn spec(
    index: u8,
    variable: Side,
    root_sign: RootSign,
    prefactor_kind: PrefactorKind,
) -> ContourTermSpec {
    let order_shift = match prefactor_kind {
        PrefactorKind::Unit => 1,
        PrefactorKind::AlphaPlusBeta => 0,
        PrefactorKind::AlphaBetaProduct => -1,
    };
    ContourTermSpec {
        index,
        root_sign,
        variable,
        order_shift,
        prefactor_kind,
    }
}

use PrefactorKind::{AlphaBetaProduct as Prod, AlphaPlusBeta as Sum, Unit};
use RootSign::{Minus, Plus};
use Side::{Alpha, Beta};

pub const CONTOUR_TERMS: [ContourTermSpec; 12] = [
    spec(1, Alpha, Plus, Unit),
    spec(2, Alpha, Plus, Sum),
    spec(3, Alpha, Minus, Unit),
    spec(4, Alpha, Minus, Sum),
    spec(5, Alpha, Plus, Prod),
    spec(6, Alpha, Minus, Prod),
    spec(7, Beta, Plus, Unit),
    spec(8, Beta, Plus, Sum),
    spec(9, Beta, Plus, Prod),
    spec(10, Beta, Minus, Unit),
    spec(11, Beta, Minus, Sum),
    spec(12, Beta, Minus, Prod),
];

impl ContourTermSpec {
    pub fn sign(&self) -> i8 {
        let side = match self.variable {
            Side::Alpha => 1,
            Side::Beta => -1,
        };
        let root = match self.root_sign {
            RootSign::Plus => 1,
            RootSign::Minus => -1,
        };
        let kind = match self.prefactor_kind {
            PrefactorKind::AlphaPlusBeta => -1,
            _ => 1,
        };
        side * root * kind
    }
}

/// Value of one contour term.
pub fn contour_term<T: Real>(
    spec: ContourTermSpec,
    params: SeriesParams<T>,
) -> Result<Flagged<Complex<T>>> {
    check_regular(&params, "contour_term")?;
    let mut flags = Warnings::empty();
    let v = term_value(spec, &params, &mut flags)?;
    Ok(finish(v, flags))
}

/// Sum of the twelve contour terms in index order.
pub fn contour_sum<T: Real>(params: SeriesParams<T>) -> Result<Flagged<Complex<T>>> {
    check_regular(&params, "contour_sum")?;
    let mut flags = Warnings::empty();
    let mut acc = Complex::new(T::zero(), T::zero());
    for spec in CONTOUR_TERMS {
        acc += term_value(spec, &params, &mut flags)?;
    }
    Ok(finish(acc, flags))
}

fn term_value<T: Real>(
    spec: ContourTermSpec,
    p: &SeriesParams<T>,
    flags: &mut Warnings,
) -> Result<Complex<T>> {
    let z = p.a_pi();
    let x = match spec.variable {
        Side::Alpha => p.alpha,
        Side::Beta => p.beta,
    };
    let sx = sqrt(Complex::<T>::one() - x * x);
    let i = Complex::<T>::i();
    let r = match spec.root_sign {
        RootSign::Plus => x + i * sx,
        RootSign::Minus => x - i * sx,
    };
    let m = p.k + T::one() + T::lit(f64::from(spec.order_shift));
    let prefactor = match spec.prefactor_kind {
        PrefactorKind::Unit => Complex::one(),
        PrefactorKind::AlphaPlusBeta => p.alpha + p.beta,
        PrefactorKind::AlphaBetaProduct => p.alpha * p.beta,
    };
    let g = scaled_gamma(m, z * r, flags)?;
    let norm = (log_gamma(p.k)? - log_gamma(m)? - p.k * ln(z)).exp();
    let sign = T::lit(f64::from(spec.sign()));
    let denom = sx * (p.alpha - p.beta) * T::lit(4.0);
    Ok(i * prefactor * g * pow(r, -m) * norm * sign / denom)
}
