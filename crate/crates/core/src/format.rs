//! Fixed-width scientific formatting ("1.75425E+30") used by the table
//! reproductions and the CSV output, and its inverse.

use crate::error::{Error, Result};
use crate::numerics::logmag::LogMagnitude;
use std::f64::consts::LN_10;

fn render(sign: i8, mut mant: f64, mut e: i64) -> String {
    // nudge into [1, 10) before rounding
    while mant >= 10.0 {
        mant /= 10.0;
        e += 1;
    }
    while mant < 1.0 && mant > 0.0 {
        mant *= 10.0;
        e -= 1;
    }
    let mut body = format!("{mant:.5}");
    if body.starts_with("10") {
        // rounding carried over a decade
        body = "1.00000".into();
        e += 1;
    }
    let neg = if sign < 0 { "-" } else { "" };
    format!("{neg}{body}E{e:+03}")
}

/// Six significant digits, E-notation, always-signed two-digit exponent.
pub fn sci6(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        if v.is_nan() {
            return "NAN".into();
        }
        if v.is_infinite() {
            return if v > 0.0 { "INF".into() } else { "-INF".into() };
        }
        return "0.00000E+00".into();
    }
    let sign = if v < 0.0 { -1 } else { 1 };
    let a = v.abs();
    let e = a.log10().floor() as i64;
    render(sign, a / 10f64.powi(e as i32), e)
}

/// Same rendering for magnitudes far outside f64 range.
pub fn sci6_log(v: &LogMagnitude) -> String {
    if v.sign == 0 {
        return "0.00000E+00".into();
    }
    let exp10 = v.ln_abs / LN_10;
    let e = exp10.floor() as i64;
    render(v.sign, 10f64.powf(exp10 - e as f64), e)
}

/// Parses E-notation of any exponent size into a log magnitude.
pub fn parse_sci(s: &str) -> Result<LogMagnitude> {
    let s = s.trim();
    let (m, e) = s
        .split_once(['E', 'e'])
        .ok_or_else(|| Error::Parse(format!("no exponent marker in '{s}'")))?;
    let mant: f64 = m
        .parse()
        .map_err(|_| Error::Parse(format!("bad mantissa in '{s}'")))?;
    let exp: i64 = e
        .parse()
        .map_err(|_| Error::Parse(format!("bad exponent in '{s}'")))?;
    if mant == 0.0 {
        return Ok(LogMagnitude::ZERO);
    }
    Ok(LogMagnitude {
        sign: if mant < 0.0 { -1 } else { 1 },
        ln_abs: mant.abs().ln() + exp as f64 * LN_10,
    })
}
