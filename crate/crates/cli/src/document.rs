//! The JSON report written by every command, and the decimal encoding of
//! enclosure endpoints.

use std::str::FromStr;

use rug::float::Round;
use rug::{Float, Integer, Rational};
use serde::Serialize;
use serde_json::{json, Value};

use shiftdiff::interval::Enclosure;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub schema: u32,
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub parameters: Value,
    /// Working precision in bits.
    pub precision: u32,
    /// Significant decimal digits used for endpoints.
    pub digits: usize,
    pub pass: bool,
    pub result: Value,
    pub elapsed_ms: f64,
}

impl ReportDocument {
    pub fn new(command: &str, parameters: Value, precision: u32, pass: bool, result: Value, elapsed_ms: f64) -> Self {
        ReportDocument {
            schema: SCHEMA_VERSION,
            tool: "shiftdiff",
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            parameters,
            precision,
            digits: decimal_digits(precision),
            pass,
            result,
            elapsed_ms,
        }
    }
}

/// `⌈P · log10 2⌉`.
pub fn decimal_digits(prec: u32) -> usize {
    (f64::from(prec) * std::f64::consts::LOG10_2).ceil() as usize
}

/// `x` with `digits` significant decimal digits, rounded in direction
/// `round`.
pub fn decimal(x: &Float, digits: usize, round: Round) -> String {
    x.to_string_radix_round(10, Some(digits), round)
}

/// Enclosure as `{lo, hi}` with endpoints rounded outward, plus the
/// containment flag for `exact` when one is given.
pub fn interval_json(enc: &Enclosure, exact: Option<&Rational>) -> Value {
    let digits = decimal_digits(enc.prec());
    let mut v = json!({
        "lo": decimal(enc.lo(), digits, Round::Down),
        "hi": decimal(enc.hi(), digits, Round::Up),
    });
    if let Some(q) = exact {
        v["contained"] = json!(enc.contains_rational(q));
    }
    v
}

pub fn rational_string(q: &Rational) -> String {
    if *q.denom() == 1 {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDecimalError(pub String);

impl std::fmt::Display for ParseDecimalError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "not a decimal number: '{}'", self.0)
    }
}

impl std::error::Error for ParseDecimalError {}

/// Exact value of a decimal string such as `-7.4074e-2` or `135`.
pub fn parse_decimal(s: &str) -> Result<Rational, ParseDecimalError> {
    let err = || ParseDecimalError(s.to_string());
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| err())?),
        None => (s, 0),
    };
    let (neg, body) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    let digits = format!("{int_part}{frac_part}");
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err());
    }
    let mut value = Rational::from(Integer::from_str(&digits).map_err(|_| err())?);
    let shift = exp - frac_part.len() as i32;
    let ten = Integer::from(Integer::u_pow_u(10, shift.unsigned_abs()));
    if shift >= 0 {
        value *= ten;
    } else {
        value /= ten;
    }
    if neg {
        value = -value;
    }
    Ok(value)
}

/// `lo <= q <= hi` read back from an interval object produced by
/// [`interval_json`].
pub fn recheck_containment(interval: &Value, exact: &str) -> Result<bool, ParseDecimalError> {
    let field = |k: &str| interval[k].as_str().map(str::to_owned).ok_or_else(|| ParseDecimalError(k.to_string()));
    let lo = parse_decimal(&field("lo")?)?;
    let hi = parse_decimal(&field("hi")?)?;
    let q = Rational::from_str(exact).map_err(|_| ParseDecimalError(exact.to_string()))?;
    Ok(lo <= q && q <= hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_decimals() {
        assert_eq!(parse_decimal("135").unwrap(), 135);
        assert_eq!(parse_decimal("-1.25").unwrap(), Rational::from((-5, 4)));
        assert_eq!(parse_decimal("7.5e-2").unwrap(), Rational::from((3, 40)));
        assert_eq!(parse_decimal("1.0e3").unwrap(), 1000);
        assert!(parse_decimal("1.2.3").is_err());
        assert!(parse_decimal("abc").is_err());
        assert!(parse_decimal("").is_err());
    }

    #[test]
    fn endpoints_round_outward() {
        let third = Enclosure::from_rational(128, &Rational::from((1, 3)));
        let v = interval_json(&third, Some(&Rational::from((1, 3))));
        assert_eq!(v["contained"], json!(true));
        assert!(recheck_containment(&v, "1/3").unwrap());
        let lo = parse_decimal(v["lo"].as_str().unwrap()).unwrap();
        let hi = parse_decimal(v["hi"].as_str().unwrap()).unwrap();
        assert!(lo < Rational::from((1, 3)) && hi > Rational::from((1, 3)));
        assert_eq!(decimal_digits(128), 39);
    }

    #[test]
    fn rationals_print_losslessly() {
        assert_eq!(rational_string(&Rational::from((10, 135))), "2/27");
        assert_eq!(rational_string(&Rational::from(7)), "7");
    }
}
