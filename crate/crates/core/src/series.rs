//! Direct summation of `sum_{n,p >= 0} T_n(alpha) T_p(beta) / ((a pi)^{n+p} (k)_{1-n-p})`
//! grouped into shells `q = n + p`.
//!
//! For a non-negative integer `k` only shells `q <= k` are nonzero and the sum
//! is finite. Otherwise the shell weights grow like `(q-1)!` and the series
//! is asymptotic in `1 / (a pi)`: it is cut at its smallest terms (optimal
//! truncation) and the size of the terms there is reported as the error.

use num_complex::Complex;
use num_traits::Zero;

use crate::chebyshev::{growth_rate, scaled_cheb_table, shell_from_tables};
use crate::complexfn::cplx::{ensure_finite, near_integer};
use crate::error::{Error, Result};
use crate::flags::Warnings;
use crate::Real;

const SNAP_TOL: f64 = 1e-12;

/// Parameters of the double sum. The expansion variable is `a pi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesParams<T> {
    pub a: Complex<T>,
    pub k: Complex<T>,
    pub alpha: Complex<T>,
    pub beta: Complex<T>,
}

impl<T: Real> SeriesParams<T> {
    pub fn new(a: Complex<T>, k: Complex<T>, alpha: Complex<T>, beta: Complex<T>) -> Self {
        Self { a, k, alpha, beta }
    }

    /// Builds the parameters from `z = a pi` directly.
    pub fn with_a_pi(z: Complex<T>, k: Complex<T>, alpha: Complex<T>, beta: Complex<T>) -> Self {
        Self {
            a: z / T::PI(),
            k,
            alpha,
            beta,
        }
    }

    pub fn a_pi(&self) -> Complex<T> {
        self.a * T::PI()
    }

    /// Same parameters with `alpha` and `beta` exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            alpha: self.beta,
            beta: self.alpha,
            ..*self
        }
    }

    /// Same parameters with `alpha` and `beta` negated.
    pub fn negated(&self) -> Self {
        Self {
            alpha: -self.alpha,
            beta: -self.beta,
            ..*self
        }
    }

    pub(crate) fn validate(&self, what: &'static str) -> Result<()> {
        ensure_finite(self.a, what)?;
        ensure_finite(self.k, what)?;
        ensure_finite(self.alpha, what)?;
        ensure_finite(self.beta, what)?;
        if self.a.is_zero() {
            return Err(Error::InvalidArgument(format!(
                "{what}: a pi must be nonzero"
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TruncationMode {
    /// Finite sum when `k` is a non-negative integer, otherwise the same as
    /// [`TruncationMode::Fixed`].
    ExactIfTerminating,
    /// Sum until the term envelope drops below `rel_tol` or `max_shell`
    /// shells have been added.
    Fixed,
    /// Finite sum for terminating `k`, optimal truncation otherwise.
    Optimal,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationPolicy {
    pub mode: TruncationMode,
    pub max_shell: usize,
    pub rel_tol: f64,
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        Self {
            mode: TruncationMode::Optimal,
            max_shell: 2000,
            rel_tol: 1e-15,
        }
    }
}

impl TruncationPolicy {
    pub fn new(mode: TruncationMode, max_shell: usize, rel_tol: f64) -> Result<Self> {
        let p = Self {
            mode,
            max_shell,
            rel_tol,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn optimal() -> Self {
        Self::default()
    }

    pub fn fixed(max_shell: usize) -> Self {
        Self {
            mode: TruncationMode::Fixed,
            max_shell,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_shell < 4 {
            return Err(Error::InvalidArgument(format!(
                "max_shell must be at least 4, got {}",
                self.max_shell
            )));
        }
        if !(self.rel_tol > 1e-16 && self.rel_tol < 1e-1) {
            return Err(Error::InvalidArgument(format!(
                "rel_tol must lie in (1e-16, 1e-1), got {}",
                self.rel_tol
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Termination {
    TerminatedExactly,
    ToleranceMet,
    OptimalTruncation,
    BudgetExhausted,
}

impl Termination {
    pub fn label(self) -> &'static str {
        match self {
            Self::TerminatedExactly => "terminated-exactly",
            Self::ToleranceMet => "tolerance-met",
            Self::OptimalTruncation => "optimal-truncation",
            Self::BudgetExhausted => "budget-exhausted",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult<T> {
    pub value: Complex<T>,
    /// Zero for finite sums. Otherwise the larger of the last kept and
    /// first dropped terms, plus the accumulated rounding bound.
    pub error_estimate: T,
    pub shells_used: usize,
    pub termination: Termination,
    pub warnings: Warnings,
}

/// `Some(Q)` when `k` is within `1e-12` of the non-negative integer `Q`:
/// every shell `q > Q` then has weight zero.
pub fn series_terminates<T: Real>(k: Complex<T>) -> Option<usize> {
    near_integer(k, T::lit(SNAP_TOL))
        .filter(|&n| n >= 0)
        .map(|n| n as usize)
}

/// The shell series `sum_q C_q(alpha, beta) (a pi)^{-q} / (k)_{1-q}`.
pub fn series_sum<T: Real>(
    params: SeriesParams<T>,
    policy: TruncationPolicy,
) -> Result<SeriesResult<T>> {
    sum_shells(params, policy, |_| Some(T::one()))
}

/// The series with weights `(-1 + (-1)^{n+p})`: odd shells times `-2`, even
/// shells dropped. Equals `series_sum(-alpha, -beta) - series_sum(alpha, beta)`.
pub fn difference_series<T: Real>(
    params: SeriesParams<T>,
    policy: TruncationPolicy,
) -> Result<SeriesResult<T>> {
    let minus_two = -T::lit(2.0);
    sum_shells(params, policy, |q| (q % 2 == 1).then_some(minus_two))
}

/// Running state of the shell weights. Tracks
/// `v_q = lambda^q / ((a pi)^q (k)_{1-q})` so that `C_q v_q` can be formed
/// from the rescaled coefficients `C_q / lambda^q`, whose modulus is at
/// most `q + 1`.
struct Weights<T: Real> {
    k: Complex<T>,
    step: Complex<T>,
    v: Complex<T>,
    q: usize,
}

impl<T: Real> Weights<T> {
    fn new(k: Complex<T>, z: Complex<T>, lambda: T) -> Self {
        Self {
            k,
            step: z.inv() * lambda,
            v: k.inv(),
            q: 0,
        }
    }

    fn advance(&mut self) {
        self.v = if self.q == 0 {
            self.step
        } else {
            self.v * (self.k - T::from_count(self.q)) * self.step
        };
        self.q += 1;
    }
}

fn sum_shells<T: Real>(
    params: SeriesParams<T>,
    policy: TruncationPolicy,
    multiplier: impl Fn(usize) -> Option<T>,
) -> Result<SeriesResult<T>> {
    params.validate("series")?;
    policy.validate()?;
    let z = params.a_pi();
    let terminating = series_terminates(params.k);
    let k = match terminating {
        Some(0) => {
            return Err(Error::Pole {
                what: "series weight 1/k",
                re: 0.0,
                im: 0.0,
            });
        }
        Some(n) => Complex::new(T::from_count(n), T::zero()),
        None => params.k,
    };

    let finite = match (policy.mode, terminating) {
        (TruncationMode::Fixed, _) => None,
        (_, Some(n)) if n < policy.max_shell => Some(n),
        _ => None,
    };
    let optimal = policy.mode == TruncationMode::Optimal && terminating.is_none();

    // Finite sums are formed without rescaling so that low shells come out
    // as plain products of the inputs.
    let lambda = if finite.is_some() {
        T::one()
    } else {
        growth_rate(params.alpha).max(growth_rate(params.beta))
    };
    let len = finite.map_or(policy.max_shell, |n| n + 1);
    let ta = scaled_cheb_table(params.alpha, lambda, len);
    let tb = scaled_cheb_table(params.beta, lambda, len);

    let mut weights = Weights::new(k, z, lambda);
    let mut warnings = Warnings::empty();
    let mut sum = Complex::<T>::zero();
    let mut abs_sum = T::zero();
    let mut last_term = T::zero();
    let mut prev_env = T::infinity();
    let rel_tol = T::lit(policy.rel_tol);
    let eps = T::epsilon();

    let mut outcome = None;
    for q in 0..len {
        if q > 0 {
            weights.advance();
        }
        let envelope = T::from_count(q + 1) * weights.v.norm();
        let term = match multiplier(q) {
            Some(m) => shell_from_tables(q, &ta, &tb) * weights.v * m,
            None => Complex::zero(),
        };

        if finite.is_none()
            && optimal
            && q > 0
            && T::from_count(q) >= params.k.re
            && envelope > prev_env
        {
            let err = last_term.max(term.norm()) + eps * abs_sum * T::lit(4.0);
            outcome = Some((Termination::OptimalTruncation, err, q));
            break;
        }

        sum += term;
        abs_sum += term.norm();
        last_term = term.norm();
        if !(sum.re.is_finite() && sum.im.is_finite()) {
            warnings |= Warnings::OVERFLOW_SATURATION;
            outcome = Some((Termination::BudgetExhausted, T::infinity(), q + 1));
            break;
        }

        if finite.is_none()
            && q > 0
            && envelope <= rel_tol * sum.norm()
            && envelope <= prev_env * T::lit(0.5)
        {
            outcome = Some((Termination::ToleranceMet, envelope + eps * abs_sum, q + 1));
            break;
        }
        prev_env = envelope;
    }

    let (termination, error_estimate, shells_used) = match (outcome, finite) {
        (Some(o), _) => o,
        (None, Some(n)) => (Termination::TerminatedExactly, T::zero(), n + 1),
        (None, None) => (Termination::BudgetExhausted, last_term + eps * abs_sum, len),
    };

    if terminating.is_none() {
        let rho = lambda;
        let guard = (rho + params.k.re.abs()).max(rho * T::lit(1.05));
        if z.norm() <= guard || (termination == Termination::OptimalTruncation && shells_used < 3) {
            warnings |= Warnings::NOT_IN_ASYMPTOTIC_REGIME;
        }
    }

    Ok(SeriesResult {
        value: sum,
        error_estimate,
        shells_used,
        termination,
        warnings,
    })
}
