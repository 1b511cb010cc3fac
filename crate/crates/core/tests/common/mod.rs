#![allow(dead_code)]

pub mod quad;

use chebgamma::Complex;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn cx(re: f64, im: f64) -> Complex64 {
    Complex::new(re, im)
}

pub fn re(x: f64) -> Complex64 {
    Complex::new(x, 0.0)
}

pub fn rel_err(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1e-300)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform point in the disk of radius `r`.
pub fn disk(rng: &mut impl Rng, r: f64) -> Complex64 {
    let rho = r * rng.gen::<f64>().sqrt();
    let th = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
    Complex64::from_polar(rho, th)
}

/// Pair of points in the disk of radius `r` at least `gap` apart.
pub fn separated_pair(rng: &mut impl Rng, r: f64, gap: f64, real: bool) -> (Complex64, Complex64) {
    loop {
        let (a, b) = if real {
            (re(rng.gen_range(-r..r)), re(rng.gen_range(-r..r)))
        } else {
            (disk(rng, r), disk(rng, r))
        };
        if (a - b).norm() >= gap {
            return (a, b);
        }
    }
}

/// `T_n(x) = ((x + w)^n + (x - w)^n) / 2`, `w = sqrt(x^2 - 1)`: explicit
/// formula, independent of the three-term recurrence.
pub fn cheb_explicit(n: usize, x: Complex64) -> Complex64 {
    let w = (x * x - 1.0).sqrt();
    ((x + w).powi(n as i32) + (x - w).powi(n as i32)) * 0.5
}

/// Finite double sum over all `(n, p)` with `n + p <= k` for a positive
/// integer `k`, with `1 / (k)_{1-q} = Gamma(k) / Gamma(k + 1 - q)` as a
/// ratio of factorials.
pub fn finite_double_sum(
    z: Complex64,
    k: usize,
    alpha: Complex64,
    beta: Complex64,
    weight: impl Fn(usize, usize) -> f64,
) -> Complex64 {
    let fact = |n: usize| (1..=n).map(|j| j as f64).product::<f64>();
    let mut acc = Complex64::new(0.0, 0.0);
    for n in 0..=k {
        for p in 0..=(k - n) {
            let q = n + p;
            // Gamma(k) / Gamma(k + 1 - q) = (k-1)! / (k-q)!
            let w = fact(k - 1) / fact(k - q);
            let term = cheb_explicit(n, alpha) * cheb_explicit(p, beta) * w * weight(n, p)
                / z.powi(q as i32);
            acc += term;
        }
    }
    acc
}
