//! The JSON configuration format: `{"n": 4, "m": 5, "points": [[1, 0, 0, 0], ...]}`.

use std::fs;
use std::io::Read;

use fivepoint::{parse_scalar, Config, Rational};
use serde_json::Value;

use crate::error::CliError;

/// Reads a configuration from a path, or from standard input when the path is `-`.
pub fn read_config(path: &str) -> Result<Config, CliError> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| CliError::Io(format!("standard input: {e}")))?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?
    };
    parse_config(&text)
}

/// Parses the JSON text of a configuration with exact entries.
pub fn parse_config(text: &str) -> Result<Config, CliError> {
    let value: Value = serde_json::from_str(text).map_err(|e| CliError::MalformedJson(e.to_string()))?;
    let field = |name: &str| value.get(name).ok_or_else(|| CliError::MalformedJson(format!("missing field `{name}`")));
    let size = |name: &str| -> Result<usize, CliError> {
        field(name)?
            .as_u64()
            .and_then(|x| usize::try_from(x).ok())
            .ok_or_else(|| CliError::MalformedJson(format!("`{name}` must be a natural number")))
    };
    let (n, m) = (size("n")?, size("m")?);
    let points =
        field("points")?.as_array().ok_or_else(|| CliError::MalformedJson("`points` must be an array".into()))?;
    if points.len() != m {
        return Err(CliError::Domain(fivepoint::Error::ShapeMismatch {
            expected: format!("{m} points"),
            found: format!("{} points", points.len()),
        }));
    }
    let columns = points
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let entries =
                p.as_array().ok_or_else(|| CliError::MalformedJson(format!("point {} must be an array", i + 1)))?;
            if entries.len() != n {
                return Err(CliError::Domain(fivepoint::Error::ShapeMismatch {
                    expected: format!("{n} coordinates"),
                    found: format!("{} coordinates in point {}", entries.len(), i + 1),
                }));
            }
            entries.iter().map(entry).collect::<Result<Vec<Rational>, CliError>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Config::new(n, columns)?)
}

fn entry(value: &Value) -> Result<Rational, CliError> {
    match value {
        Value::Number(x) if x.is_i64() || x.is_u64() => Ok(parse_scalar(&x.to_string())?),
        Value::Number(x) => Err(CliError::Scalar(fivepoint::scalar::ScalarParseError::Decimal(x.to_string()))),
        Value::String(s) => Ok(parse_scalar(s)?),
        other => Err(CliError::MalformedJson(format!("`{other}` is not a number or a rational string"))),
    }
}
