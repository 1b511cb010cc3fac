use chebgamma::ComplexScalar;

/// Below this modulus of the reference value the comparison falls back to
/// the absolute error.
pub const NEAR_ZERO: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Comparison {
    pub abs_err: f64,
    pub rel_err: f64,
    pub pass: bool,
}

pub fn compare(lhs: ComplexScalar, rhs: ComplexScalar, tol: f64) -> Comparison {
    assert!(tol > 0.0, "tolerance must be positive");
    let abs_err = (lhs - rhs).norm();
    let rel_err = abs_err / lhs.norm().max(rhs.norm()).max(1e-300);
    let pass = if rhs.norm() < NEAR_ZERO {
        abs_err <= tol
    } else {
        rel_err <= tol
    };
    Comparison {
        abs_err,
        rel_err,
        pass,
    }
}
