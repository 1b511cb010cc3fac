//! Chebyshev polynomials of the first kind at complex arguments and the
//! shell coefficients `C_q = sum_{n=0}^{q} T_n(alpha) T_{q-n}(beta)`.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::complexfn::cplx::sqrt;
use crate::Real;

/// One shell of the regrouped double sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShellCoefficient<T> {
    pub q: usize,
    pub value: Complex<T>,
}

/// `T_n(x)` by the three-term recurrence. Also used for `|x| > 1`, where
/// it follows the dominant solution.
pub fn cheb_t<T: Real>(n: usize, x: Complex<T>) -> Complex<T> {
    let mut prev = Complex::<T>::one();
    if n == 0 {
        return prev;
    }
    let mut cur = x;
    let two_x = x + x;
    for _ in 1..n {
        let next = two_x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `[T_0(x), ..., T_{len-1}(x)]`.
pub fn cheb_table<T: Real>(x: Complex<T>, len: usize) -> Vec<Complex<T>> {
    scaled_cheb_table(x, T::one(), len)
}

/// `[T_n(x) / lambda^n]` for `n < len`, by the rescaled recurrence
/// `U_{n+1} = (2x / lambda) U_n - U_{n-1} / lambda^2`.
pub fn scaled_cheb_table<T: Real>(x: Complex<T>, lambda: T, len: usize) -> Vec<Complex<T>> {
    let mut out = Vec::with_capacity(len);
    if len == 0 {
        return out;
    }
    out.push(Complex::one());
    if len == 1 {
        return out;
    }
    let inv = lambda.recip();
    out.push(x * inv);
    let two_x = (x + x) * inv;
    let inv2 = inv * inv;
    for n in 2..len {
        let next = two_x * out[n - 1] - out[n - 2] * inv2;
        out.push(next);
    }
    out
}

/// `rho(x) = max |x +/- sqrt(x^2 - 1)|`, the geometric growth rate of
/// `T_n(x)`. Equal to 1 on `[-1, 1]`.
pub fn growth_rate<T: Real>(x: Complex<T>) -> T {
    let root = sqrt(x * x - T::one());
    (x + root).norm().max((x - root).norm())
}

/// `C_q(alpha, beta)`.
pub fn shell_coeff<T: Real>(q: usize, alpha: Complex<T>, beta: Complex<T>) -> ShellCoefficient<T> {
    let a = cheb_table(alpha, q + 1);
    let b = cheb_table(beta, q + 1);
    ShellCoefficient {
        q,
        value: shell_from_tables(q, &a, &b),
    }
}

/// `sum_{n=0}^{q} a[n] b[q-n]`, with the terms `n` and `q - n` added in
/// pairs so the result is bit-identical under exchanging `a` and `b`.
pub fn shell_from_tables<T: Real>(q: usize, a: &[Complex<T>], b: &[Complex<T>]) -> Complex<T> {
    let mut acc = Complex::<T>::zero();
    let mut n = 0;
    while 2 * n < q {
        acc += a[n] * b[q - n] + a[q - n] * b[n];
        n += 1;
    }
    if 2 * n == q {
        acc += a[n] * b[n];
    }
    acc
}
