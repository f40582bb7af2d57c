//! The residue kappa_K of zeta_K at s = 1 for quadratic fields, both in
//! closed form (finite character sums) and empirically from ideal counts.

use crate::constants::kappa_upper;
use crate::counting::kronecker::{is_fundamental, kronecker_symbol};
use crate::counting::sieve::TauTable;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Finite character sum for L(1, chi_D); exact up to rounding.
    CharacterSum,
    /// I_K(X)/X from a sieved table.
    Empirical,
}

#[derive(Debug, Clone, Copy)]
pub struct Residue {
    pub value: f64,
    pub est_error: f64,
    pub method: Method,
}

/// kappa_K = L(1, chi_D) for the quadratic field of fundamental
/// discriminant D:
///   D < 0:  -pi |D|^{-3/2} sum_a chi(a) a
///   D > 0:  -D^{-1/2} sum_a chi(a) ln sin(pi a / D)
pub fn kappa_quadratic(d: i64) -> Result<Residue> {
    if !is_fundamental(d) {
        return Err(Error::NotFundamental(d));
    }
    let ad = d.unsigned_abs();
    if d < 0 {
        let mut s: i64 = 0;
        for a in 1..ad {
            s += kronecker_symbol(d, a) as i64 * a as i64;
        }
        let value = -PI * (ad as f64).powf(-1.5) * s as f64;
        Ok(Residue {
            value,
            est_error: 1e-14 * value.abs(),
            method: Method::CharacterSum,
        })
    } else {
        // chi(D - a) = chi(a) for D > 0, so fold the sum in half
        let mut s = 0.0f64;
        let mut comp = 0.0f64; // Kahan carry
        for a in 1..ad.div_ceil(2) {
            let c = kronecker_symbol(d, a);
            if c == 0 {
                continue;
            }
            let term = 2.0 * c as f64 * (PI * a as f64 / ad as f64).sin().ln();
            let y = term - comp;
            let t = s + y;
            comp = (t - s) - y;
            s = t;
        }
        let value = -s / (ad as f64).sqrt();
        Ok(Residue {
            value,
            est_error: 1e-12 * value.abs().max(1.0),
            method: Method::CharacterSum,
        })
    }
}

const EMPIRICAL_MIN_X: u64 = 10_000;

/// I_K(X)/X. The attached error estimate is the proved remainder bound
/// divided by X, so `value - est_error <= kappa <= value + est_error`
/// holds unconditionally (it is loose for small X).
pub fn kappa_empirical(field: &FieldSpec, table: &TauTable) -> Result<Residue> {
    let x = table.x;
    if x < EMPIRICAL_MIN_X {
        return Err(Error::TableTooSmall {
            need: EMPIRICAL_MIN_X,
            have: x,
        });
    }
    let value = table.prefix[x as usize] as f64 / x as f64;
    let est_error = if field.degree >= 2 {
        let bound = crate::constants::thm_bound(field, x as f64, crate::constants::WhichBound::Improved)?;
        bound.to_f64() / x as f64
    } else {
        1.0 / x as f64
    };
    Ok(Residue {
        value,
        est_error,
        method: Method::Empirical,
    })
}

/// kappa against its unconditional upper bound; returns (kappa, bound).
pub fn kappa_vs_upper(field: &FieldSpec) -> Result<(Residue, f64)> {
    let d = field
        .fundamental_disc
        .ok_or_else(|| Error::InvariantViolation("kappa in closed form needs a quadratic field".into()))?;
    let kappa = kappa_quadratic(d)?;
    let bound = kappa_upper(field.degree, field.ln_abs_disc())?;
    Ok((kappa, bound))
}
