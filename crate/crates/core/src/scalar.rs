use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{FromPrimitive, Num, Signed};

/// Exact field element used throughout the crate.
///
/// Any exact ordered field that can be built from machine integers works; the
/// crate root fixes [`num_rational::BigRational`] as the concrete choice.
pub trait Scalar: Clone + Debug + Display + Eq + Hash + Num + Signed + FromPrimitive + Send + Sync + 'static {
    fn from_int(value: i64) -> Self {
        Self::from_i64(value).expect("every field contains the integers")
    }

    fn from_ratio(numerator: i64, denominator: i64) -> Self {
        Self::from_int(numerator) / Self::from_int(denominator)
    }
}

impl<T> Scalar for T where T: Clone + Debug + Display + Eq + Hash + Num + Signed + FromPrimitive + Send + Sync + 'static {}

/// Parses an exact rational literal: an integer (`-3`) or a quotient (`5/7`).
///
/// Decimal literals are rejected so that every accepted input is exact.
pub fn parse_scalar<T: Scalar>(text: &str) -> Result<T, ScalarParseError> {
    let trimmed = text.trim();
    if trimmed.contains(['.', 'e', 'E']) {
        return Err(ScalarParseError::Decimal(trimmed.to_string()));
    }
    let (num, den) = match trimmed.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (trimmed, "1"),
    };
    let parse = |s: &str| -> Result<T, ScalarParseError> {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ScalarParseError::Malformed(trimmed.to_string()));
        }
        let ten = T::from_int(10);
        let magnitude = digits.bytes().fold(T::zero(), |acc, b| acc * ten.clone() + T::from_int(i64::from(b - b'0')));
        Ok(if s.starts_with('-') { -magnitude } else { magnitude })
    };
    let n = parse(num)?;
    let d = parse(den)?;
    if d.is_zero() {
        return Err(ScalarParseError::ZeroDenominator(trimmed.to_string()));
    }
    Ok(n / d)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarParseError {
    #[error("decimal literal `{0}` is not exact; write it as a fraction")]
    Decimal(String),
    #[error("`{0}` is not an integer or fraction")]
    Malformed(String),
    #[error("`{0}` has a zero denominator")]
    ZeroDenominator(String),
}
