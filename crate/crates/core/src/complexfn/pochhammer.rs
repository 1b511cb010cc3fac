//! Reciprocal Pochhammer weights of the shell series.

use num_complex::Complex;
use num_traits::{One, Zero};

use super::cplx::ensure_finite;
use crate::error::{Error, Result};
use crate::Real;

/// `1 / (k)_{1-q} = Gamma(k) / Gamma(k + 1 - q)`.
///
/// `1/k` at `q = 0`, otherwise the finite product `prod_{j=1}^{q-1} (k - j)`.
/// The product contains an exact zero factor when `k` is an integer in
/// `1..q`, which is what terminates the series.
pub fn pochhammer_recip<T: Real>(k: Complex<T>, q: usize) -> Result<Complex<T>> {
    ensure_finite(k, "pochhammer_recip")?;
    if q == 0 {
        if k.is_zero() {
            return Err(Error::Pole {
                what: "pochhammer_recip(k, 0)",
                re: 0.0,
                im: 0.0,
            });
        }
        return Ok(k.inv());
    }
    let mut p = Complex::<T>::one();
    for j in 1..q {
        p *= k - T::from_count(j);
    }
    Ok(p)
}
