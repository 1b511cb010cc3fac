//! Complex literals of the form `1.5`, `-2i`, `1.5-0.25i`, `1e-3+2e-2i`.

use chebgamma::ComplexScalar;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid complex literal `{token}`: {reason}")]
pub struct LiteralError {
    pub token: String,
    pub reason: &'static str,
}

fn fail(token: &str, reason: &'static str) -> LiteralError {
    LiteralError {
        token: token.to_string(),
        reason,
    }
}

fn component(text: &str, token: &str) -> Result<f64, LiteralError> {
    let v: f64 = text.parse().map_err(|_| fail(token, "malformed number"))?;
    if !v.is_finite() {
        return Err(fail(token, "components must be finite"));
    }
    Ok(v)
}

/// Coefficient of `i`: a bare sign stands for one.
fn imaginary(text: &str, token: &str) -> Result<f64, LiteralError> {
    match text {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => component(text, token),
    }
}

pub fn parse_complex(token: &str) -> Result<ComplexScalar, LiteralError> {
    if token.is_empty() {
        return Err(fail(token, "empty"));
    }
    if token.chars().any(char::is_whitespace) {
        return Err(fail(token, "spaces are not allowed"));
    }
    let Some(body) = token.strip_suffix('i') else {
        return Ok(ComplexScalar::new(component(token, token)?, 0.0));
    };
    // split at the last sign that is not the sign of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&j| matches!(bytes[j], b'+' | b'-') && !matches!(bytes[j - 1], b'e' | b'E'));
    match split {
        Some(j) => Ok(ComplexScalar::new(
            component(&body[..j], token)?,
            imaginary(&body[j..], token)?,
        )),
        None => Ok(ComplexScalar::new(0.0, imaginary(body, token)?)),
    }
}

/// Inverse of [`parse_complex`] with 17 significant digits per component.
pub fn format_complex(z: ComplexScalar) -> String {
    if z.im == 0.0 && z.im.is_sign_positive() {
        return format!("{:.16e}", z.re);
    }
    format!("{:.16e}{:+.16e}i", z.re, z.im)
}
