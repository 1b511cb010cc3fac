//! Adaptive Gauss-Kronrod (7/15) quadrature for complex-valued integrands
//! of a real variable. Used only as an independent oracle.

use num_complex::Complex64;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_728_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn gk15(f: &dyn Fn(f64) -> Complex64, a: f64, b: f64) -> (Complex64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let x = h * XGK[j];
        let s = f(c - x) + f(c + x);
        kron += s * WGK[j];
        if j % 2 == 1 {
            gauss += s * WG[j / 2];
        }
    }
    (kron * h, ((kron - gauss) * h).norm())
}

fn adapt(f: &dyn Fn(f64) -> Complex64, a: f64, b: f64, abs_tol: f64, depth: u32) -> Complex64 {
    let (v, err) = gk15(f, a, b);
    // below a few ulps of the panel value the estimate is pure roundoff
    if err <= abs_tol || err <= 50.0 * f64::EPSILON * v.norm() || depth == 0 {
        return v;
    }
    let m = 0.5 * (a + b);
    adapt(f, a, m, 0.5 * abs_tol, depth - 1) + adapt(f, m, b, 0.5 * abs_tol, depth - 1)
}

/// Integral over `[a, b]` to roughly `rel_tol` relative to `scale`.
pub fn integrate(
    f: &dyn Fn(f64) -> Complex64,
    a: f64,
    b: f64,
    rel_tol: f64,
    scale: f64,
) -> Complex64 {
    adapt(f, a, b, rel_tol * scale, 24)
}

/// Integral over `[0, inf)` of an integrand that decays at least like
/// `e^{-u}`: dyadic panels up to `u = 2048`.
pub fn integrate_half_line(f: &dyn Fn(f64) -> Complex64, rel_tol: f64) -> Complex64 {
    let mut edges = vec![0.0, 0.125, 0.25, 0.5];
    let mut x = 1.0;
    while x <= 2048.0 {
        edges.push(x);
        x *= 2.0;
    }
    // crude magnitude estimate for the absolute tolerance
    let rough: Complex64 = edges.windows(2).map(|w| gk15(f, w[0], w[1]).0).sum();
    let scale = rough.norm().max(1e-300);
    edges
        .windows(2)
        .map(|w| integrate(f, w[0], w[1], rel_tol / 16.0, scale))
        .sum()
}

/// `Gamma(s, z)` for `Re z > 0` from `int_0^inf (z + u)^{s-1} e^{-z-u} du`.
/// The path stays in the right half plane, so the principal power is
/// continuous along it.
pub fn upper_gamma_quad(s: Complex64, z: Complex64) -> Complex64 {
    assert!(z.re > 0.0);
    let ez = (-z).exp();
    let f = move |u: f64| {
        let t = z + u;
        ((s - 1.0) * t.ln()).exp() * (-u).exp()
    };
    integrate_half_line(&f, 1e-13) * ez
}

/// `gamma(s, z)` for real `s > 0` from `z^s int_0^1 x^{s-1} e^{-z x} dx`
/// with `x = y^{2/s}` to remove the endpoint singularity.
pub fn lower_gamma_quad(s: f64, z: Complex64) -> Complex64 {
    let m = 2.0 / s;
    // x = y^m, dx = m y^{m-1} dy, x^{s-1} dx = m y^{m s - 1} dy = m y dy
    let f = move |y: f64| Complex64::new(m * y, 0.0) * (-z * y.powf(m)).exp();
    let scale = 1.0;
    (s * z.ln()).exp() * integrate(&f, 0.0, 1.0, 1e-14, scale)
}
