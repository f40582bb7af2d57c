//! The named explicit constants and headline bounds, as functions of degree
//! (and where needed, discriminant and parameters). Everything is evaluated
//! in log space; the largest table entries exceed 1E+252.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::numerics::logmag::LogMagnitude;
use crate::numerics::special::{zeta_145, zeta_one_plus};
use num_complex::Complex64;
use std::collections::HashMap;
use std::f64::consts::{E, LN_2, PI};
use std::sync::Mutex;

/// Admissible lower bounds for |disc| by degree. For degree > 7 the value
/// 184607 is the unconditional choice.
pub fn delta0(n0: u32) -> u64 {
    match n0 {
        0 | 1 => 1,
        2 => 3,
        3 => 23,
        4 => 117,
        5 => 1609,
        6 => 9747,
        _ => 184_607,
    }
}

fn ln_delta0_max() -> f64 {
    (184_607f64).ln()
}

fn require_degree(n: u32) -> Result<()> {
    if n < 2 {
        Err(Error::DegreeTooSmall(n))
    } else {
        Ok(())
    }
}

/// ln n! by direct summation (exact enough for the degrees in play).
pub fn ln_factorial(n: u32) -> f64 {
    (2..=n as u64).map(|k| (k as f64).ln()).sum()
}

/// ln C(n, k).
pub fn ln_binomial(n: u32, k: u32) -> f64 {
    ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k)
}

/// Lambda_S = e^{28.2 n + 5} (n+1)^{5(n+1)/2}.
pub fn lambda_sunley(n: u32) -> Result<LogMagnitude> {
    require_degree(n)?;
    let nf = n as f64;
    Ok(LogMagnitude::from_ln(
        28.2 * nf + 5.0 + 2.5 * (nf + 1.0) * (nf + 1.0).ln(),
    ))
}

/// Lambda_K = 0.17 (6n-2)/(n-1) 2.26^n e^{4n + 26/n} n^{n+1/2}
///            (44.39 (82/1000)^n n! + 13/(n-1)).
pub fn lambda_k(n: u32) -> Result<LogMagnitude> {
    require_degree(n)?;
    let nf = n as f64;
    let head = 0.17f64.ln()
        + ((6.0 * nf - 2.0) / (nf - 1.0)).ln()
        + nf * 2.26f64.ln()
        + 4.0 * nf
        + 26.0 / nf
        + (nf + 0.5) * nf.ln();
    let t1 = LogMagnitude::from_ln(44.39f64.ln() + nf * 0.082f64.ln() + ln_factorial(n));
    let t2 = LogMagnitude::from_ln(13f64.ln() - (nf - 1.0).ln());
    Ok(LogMagnitude::from_ln(head).mul(&t1.add(&t2)))
}

/// a_7 = 2^{4n+2} 5^n n!.
pub fn a7(n: u32) -> Result<LogMagnitude> {
    require_degree(n)?;
    let nf = n as f64;
    Ok(LogMagnitude::from_ln(
        (4.0 * nf + 2.0) * LN_2 + nf * 5f64.ln() + ln_factorial(n),
    ))
}

/// Q_1 = 5 * 2^{n-0.45} zeta(1.45)^n / ((log 184607)^{n-1} (2 pi)^{0.95 n}) n!
///       + 13/(n-1).
pub fn q1_logmag(n: u32) -> Result<LogMagnitude> {
    require_degree(n)?;
    let nf = n as f64;
    let t1 = LogMagnitude::from_ln(
        5f64.ln() + (nf - 0.45) * LN_2 + nf * zeta_145().ln()
            - (nf - 1.0) * ln_delta0_max().ln()
            - 0.95 * nf * (2.0 * PI).ln()
            + ln_factorial(n),
    );
    let t2 = LogMagnitude::from_ln(13f64.ln() - (nf - 1.0).ln());
    Ok(t1.add(&t2))
}

pub fn q1(n: u32) -> Result<f64> {
    Ok(q1_logmag(n)?.to_f64())
}

/// v1(eta, N0) = 9.98134 zeta(1+eta)^n 2^{n-eta} n!
///               / (Delta0^{1/2} (log Delta0)^{n-1} (2 pi)^{n(1/2+eta)}).
pub fn v1(eta: f64, n0: u32, n: u32) -> Result<f64> {
    require_degree(n)?;
    if !(0.01..=0.45).contains(&eta) {
        return Err(Error::BadEta(eta));
    }
    let nf = n as f64;
    let d0 = delta0(n0) as f64;
    let ln_v = 9.98134f64.ln() + nf * zeta_one_plus(eta).ln() + (nf - eta) * LN_2
        + ln_factorial(n)
        - 0.5 * d0.ln()
        - (nf - 1.0) * d0.ln().ln()
        - nf * (0.5 + eta) * (2.0 * PI).ln();
    Ok(ln_v.exp())
}

/// v2 = 4/(n+1) (e/(n-1))^{n-1}.
pub fn v2(n: u32) -> Result<f64> {
    require_degree(n)?;
    let nf = n as f64;
    Ok((4f64.ln() - (nf + 1.0).ln() + (nf - 1.0) * (1.0 - (nf - 1.0).ln())).exp())
}

/// v3 = 2 pi^{-n/2} / sqrt(Delta0) (e/(n-1))^{n-1}.
pub fn v3(n: u32, n0: u32) -> Result<f64> {
    require_degree(n)?;
    let nf = n as f64;
    let d0 = delta0(n0) as f64;
    Ok((LN_2 - 0.5 * nf * PI.ln() - 0.5 * d0.ln() + (nf - 1.0) * (1.0 - (nf - 1.0).ln())).exp())
}

/// Q_2 = 2^{3/2} pi^{-n/2 - 3/2} e^{4n - 1/2} sqrt(3n).
pub fn q2(n: u32) -> Result<LogMagnitude> {
    require_degree(n)?;
    let nf = n as f64;
    Ok(LogMagnitude::from_ln(
        1.5 * LN_2 - (0.5 * nf + 1.5) * PI.ln() + 4.0 * nf - 0.5 + 0.5 * (3.0 * nf).ln(),
    ))
}

/// Q_3 = 2^{n+3/2} pi^{n/2 - 3/2} e^{n(1 + 4n/(n-1)) - 1/2} sqrt(3n).
pub fn q3(n: u32) -> Result<LogMagnitude> {
    require_degree(n)?;
    let nf = n as f64;
    Ok(LogMagnitude::from_ln(
        (nf + 1.5) * LN_2 + (0.5 * nf - 1.5) * PI.ln()
            + nf * (1.0 + 4.0 * nf / (nf - 1.0))
            - 0.5
            + 0.5 * (3.0 * nf).ln(),
    ))
}

/// a_12 = e^{7n/2} pi^{-(n+1)/2} 2^{1/2 - n} n^{n + 3/2}.
pub fn a12(n: u32) -> Result<LogMagnitude> {
    require_degree(n)?;
    let nf = n as f64;
    Ok(LogMagnitude::from_ln(
        3.5 * nf - 0.5 * (nf + 1.0) * PI.ln() + (0.5 - nf) * LN_2 + (nf + 1.5) * nf.ln(),
    ))
}

/// a_13 = e^{5n + 1/2} 2^4 pi^{(n-1)/2} n^{n+2}.
pub fn a13(n: u32) -> Result<LogMagnitude> {
    require_degree(n)?;
    let nf = n as f64;
    Ok(LogMagnitude::from_ln(
        5.0 * nf + 0.5 + 4.0 * LN_2 + 0.5 * (nf - 1.0) * PI.ln() + (nf + 2.0) * nf.ln(),
    ))
}

/// Q_4 = Q_2 (4n)^n.
pub fn q4(n: u32) -> Result<LogMagnitude> {
    let nf = n as f64;
    Ok(q2(n)?.mul(&LogMagnitude::from_ln(nf * (4.0 * nf).ln())))
}

/// Q_5 = Q_3 (n+1)^{1/2 - 1/(2n)}.
pub fn q5(n: u32) -> Result<LogMagnitude> {
    let nf = n as f64;
    Ok(q3(n)?.mul(&LogMagnitude::from_ln(
        (0.5 - 0.5 / nf) * (nf + 1.0).ln(),
    )))
}

/// Q_6 = pi^{-1} (6n-2)/(n-1) e^{25/n} Q_1 Q_4.
pub fn q6(n: u32) -> Result<LogMagnitude> {
    require_degree(n)?;
    let nf = n as f64;
    let head = LogMagnitude::from_ln(
        -PI.ln() + ((6.0 * nf - 2.0) / (nf - 1.0)).ln() + 25.0 / nf,
    );
    Ok(head.mul(&q1_logmag(n)?).mul(&q4(n)?))
}

/// The Louboutin factor alpha = (e/(2(n-1)))^{n-1}, so that
/// kappa <= alpha (log|disc|)^{n-1}.
pub fn louboutin_alpha(n: u32) -> Result<f64> {
    require_degree(n)?;
    let nf = n as f64;
    Ok(((nf - 1.0) * (1.0 - (2.0 * (nf - 1.0)).ln())).exp())
}

/// Q_7 with explicit |disc| and x, where z = |disc|^{1/(n+1)} x^{(n-1)/(n+1)}:
/// Q_7 = n alpha / 2 + alpha |disc|^{1/2} pi^{-n/2} / z + Q_6.
pub fn q7_explicit(n: u32, abs_disc: f64, x: f64) -> Result<LogMagnitude> {
    require_degree(n)?;
    let nf = n as f64;
    let alpha = louboutin_alpha(n)?;
    let ln_z = abs_disc.ln() / (nf + 1.0) + (nf - 1.0) / (nf + 1.0) * x.ln();
    let t1 = LogMagnitude::from_f64(nf * alpha / 2.0);
    let t2 = LogMagnitude::from_ln(
        alpha.ln() + 0.5 * abs_disc.ln() - 0.5 * nf * PI.ln() - ln_z,
    );
    Ok(t1.add(&t2).add(&q6(n)?))
}

/// Q_7 with the worst case |disc|^{1/2}/z <= (2n)^{-(n-1)/(n+1)}, valid for
/// x >= 2 n |disc|^{1/2}.
pub fn q7_upper(n: u32) -> Result<LogMagnitude> {
    require_degree(n)?;
    let nf = n as f64;
    let alpha = louboutin_alpha(n)?;
    let t1 = LogMagnitude::from_f64(nf * alpha / 2.0);
    let t2 = LogMagnitude::from_ln(
        alpha.ln() - 0.5 * nf * PI.ln() - (nf - 1.0) / (nf + 1.0) * (2.0 * nf).ln(),
    );
    Ok(t1.add(&t2).add(&q6(n)?))
}

/// Q_8 = Q_7 + alpha n.
pub fn q8_upper(n: u32) -> Result<LogMagnitude> {
    let nf = n as f64;
    let alpha = louboutin_alpha(n)?;
    Ok(q7_upper(n)?.add(&LogMagnitude::from_f64(alpha * nf)))
}

/// kappa <= (e log|disc| / (2(n-1)))^{n-1}.
pub fn kappa_upper(n: u32, log_abs_disc: f64) -> Result<f64> {
    require_degree(n)?;
    assert!(log_abs_disc > 0.0, "log|disc| must be positive");
    let nf = n as f64;
    Ok((E * log_abs_disc / (2.0 * (nf - 1.0))).powf(nf - 1.0))
}

/// |zeta_K(0)| <= A_K kappa, with kappa replaced by its upper bound.
pub fn zeta0_upper(field: &FieldSpec) -> Result<f64> {
    Ok(field.a_k() * kappa_upper(field.degree, field.ln_abs_disc())?)
}

/// RHS of the convexity bound
/// 3 |(1+s)/(1-s)| (|disc| (|1+s|/2pi)^n)^{(1+eta-sigma)/2} zeta(1+eta)^n.
pub fn rademacher_rhs(sigma: f64, t: f64, eta: f64, field: &FieldSpec) -> Result<f64> {
    if !(0.0 < eta && eta <= 0.5) || !(-eta <= sigma && sigma <= 1.0 + eta) {
        return Err(Error::Domain(format!(
            "need 0 < eta <= 1/2 and -eta <= sigma <= 1+eta (got eta={eta}, sigma={sigma})"
        )));
    }
    let s = Complex64::new(sigma, t);
    let one = Complex64::new(1.0, 0.0);
    if s == one {
        return Err(Error::Pole("s = 1 is the pole of zeta_K".into()));
    }
    let nf = field.degree as f64;
    let factor = 3.0 * ((one + s).norm() / (one - s).norm());
    let middle_ln = (field.abs_disc() as f64).ln() + nf * ((one + s).norm() / (2.0 * PI)).ln();
    let middle = ((1.0 + eta - sigma) / 2.0 * middle_ln).exp();
    Ok(factor * middle * zeta_one_plus(eta).powi(field.degree as i32))
}

/// Which theorem RHS to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WhichBound {
    Sunley,
    Improved,
}

/// Lambda |disc|^{1/(n+1)} (log|disc|)^p x^{1 - 2/(n+1)} with p = n for the
/// original bound and p = n-1 for the improved one.
pub fn thm_bound(field: &FieldSpec, x: f64, which: WhichBound) -> Result<LogMagnitude> {
    let n = field.degree;
    require_degree(n)?;
    assert!(x >= 0.0);
    if x == 0.0 {
        return Ok(LogMagnitude::ZERO);
    }
    let nf = n as f64;
    let (lambda, log_pow) = match which {
        WhichBound::Sunley => (lambda_sunley(n)?, nf),
        WhichBound::Improved => (lambda_k(n)?, nf - 1.0),
    };
    Ok(lambda.mul(&LogMagnitude::from_ln(
        field.ln_abs_disc() / (nf + 1.0)
            + log_pow * field.ln_abs_disc().ln()
            + (1.0 - 2.0 / (nf + 1.0)) * x.ln(),
    )))
}

/// The piecewise coefficient b_K(x).
pub fn b_k(field: &FieldSpec, x: f64) -> Result<f64> {
    let n = field.degree;
    require_degree(n)?;
    if x < 2.0 {
        Ok(1.0)
    } else if x <= field.abs_disc() as f64 {
        Ok(n as f64 * ln_binomial(n - 1, (n - 1) / 2).exp())
    } else {
        q1(n)
    }
}

/// |I_K(x)| <= b_K(x) (log|disc|)^{n-1} x.
pub fn ik_upper(field: &FieldSpec, x: f64) -> Result<f64> {
    assert!(x >= 0.0);
    let nf = field.degree as f64;
    Ok(b_k(field, x)? * field.ln_abs_disc().powf(nf - 1.0) * x)
}

/// Which partial-sum bound to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartialSumCase {
    /// sum_{m <= x} tau_m / m^theta for 0 < theta < 1.
    Below1,
    /// sum_{m > x} tau_m / m^theta for theta > 1.
    Above1,
    /// sum_{m <= x} tau_m / m for x >= 2.
    Log,
}

/// RHS of the three partial-sum bounds (a_7 replaced by Q_1 via b_K).
pub fn partial_sum_bound(
    field: &FieldSpec,
    theta: f64,
    x: f64,
    which: PartialSumCase,
) -> Result<f64> {
    let nf = field.degree as f64;
    let logs = field.ln_abs_disc().powf(nf - 1.0);
    let b = b_k(field, x)?;
    match which {
        PartialSumCase::Below1 => {
            if !(0.0 < theta && theta < 1.0) || x < 1.0 {
                return Err(Error::Domain(format!(
                    "below1 needs 0 < theta < 1 and x >= 1 (theta={theta}, x={x})"
                )));
            }
            Ok(2.0 * b * (1.0 / (1.0 - theta) + 1.0) * logs * x.powf(1.0 - theta))
        }
        PartialSumCase::Above1 => {
            if theta <= 1.0 || x < 1.0 {
                return Err(Error::Domain(format!(
                    "above1 needs theta > 1 and x >= 1 (theta={theta}, x={x})"
                )));
            }
            Ok(b * theta / (theta - 1.0) * 2f64.powf(theta - 1.0) * logs * x.powf(1.0 - theta))
        }
        PartialSumCase::Log => {
            if x < 2.0 {
                return Err(Error::Domain(format!("log case needs x >= 2 (x={x})")));
            }
            Ok(b * (1.0 + 2.0 / LN_2) * logs * x.ln())
        }
    }
}

/// Every named constant at one degree.
#[derive(Debug, Clone)]
pub struct ConstantRow {
    pub n: u32,
    pub lambda_s: LogMagnitude,
    pub lambda_k: LogMagnitude,
    pub a7: LogMagnitude,
    pub q1: LogMagnitude,
    pub a12: LogMagnitude,
    pub a13: LogMagnitude,
    pub q2: LogMagnitude,
    pub q3: LogMagnitude,
    pub q4: LogMagnitude,
    pub q5: LogMagnitude,
    pub q6: LogMagnitude,
    pub q7_upper: LogMagnitude,
    pub q8_upper: LogMagnitude,
    pub v1: f64,
    pub v2: f64,
    pub v3: f64,
    pub alpha: f64,
}

impl ConstantRow {
    pub fn new(n: u32) -> Result<Self> {
        let n0 = n.min(7);
        Ok(ConstantRow {
            n,
            lambda_s: lambda_sunley(n)?,
            lambda_k: lambda_k(n)?,
            a7: a7(n)?,
            q1: q1_logmag(n)?,
            a12: a12(n)?,
            a13: a13(n)?,
            q2: q2(n)?,
            q3: q3(n)?,
            q4: q4(n)?,
            q5: q5(n)?,
            q6: q6(n)?,
            q7_upper: q7_upper(n)?,
            q8_upper: q8_upper(n)?,
            v1: v1(0.45, n0, n)?,
            v2: v2(n)?,
            v3: v3(n, n0)?,
            alpha: louboutin_alpha(n)?,
        })
    }
}

/// Memoized rows, keyed by degree.
pub fn constant_row(n: u32) -> Result<ConstantRow> {
    static CACHE: Mutex<Option<HashMap<u32, ConstantRow>>> = Mutex::new(None);
    let mut guard = CACHE.lock().unwrap();
    let map = guard.get_or_insert_with(HashMap::new);
    if let Some(row) = map.get(&n) {
        return Ok(row.clone());
    }
    let row = ConstantRow::new(n)?;
    map.insert(n, row.clone());
    Ok(row)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(actual: &LogMagnitude, printed: f64) -> f64 {
        actual.rel_diff(&LogMagnitude::from_f64(printed))
    }

    #[test]
    fn lambda_table_values() {
        assert!(rel(&lambda_sunley(2).unwrap(), 1.75425e30) < 1e-5);
        assert!(rel(&lambda_sunley(5).unwrap(), 1.20023e75) < 1e-5);
        assert!(rel(&lambda_sunley(15).unwrap(), 1.10367e234) < 1e-5);
        assert!(rel(&lambda_k(2).unwrap(), 8.80778e11) < 1e-5);
        assert!(rel(&lambda_k(3).unwrap(), 4.61131e12) < 1e-5);
        assert!(rel(&lambda_k(15).unwrap(), 2.23608e50) < 1e-5);
    }

    #[test]
    fn q1_a7_table_values() {
        assert!(rel(&a7(2).unwrap(), 5.12000e4) < 1e-5);
        assert!((q1(2).unwrap() / 1.35892e1 - 1.0).abs() < 1e-5);
        assert!((q1(50).unwrap() / 4.79628e11 - 1.0).abs() < 1e-5);
    }

    #[test]
    fn v_table_values() {
        assert!((v1(0.45, 2, 2).unwrap() / 7.49564 - 1.0).abs() < 1e-5);
        assert!((v2(2).unwrap() / 3.62438 - 1.0).abs() < 1e-5);
        assert!((v3(2, 2).unwrap() / 9.99112e-1 - 1.0).abs() < 1e-5);
    }

    #[test]
    fn q2_q3_a12_a13_values() {
        assert!(rel(&q2(2).unwrap(), 7.16068e2) < 1e-5);
        assert!(rel(&q3(2).unwrap(), 6.22672e8) < 1e-5);
        assert!(rel(&a12(2).unwrap(), 7.87765e2) < 1e-5);
        assert!(rel(&a13(2).unwrap(), 1.64781e7) < 1e-5);
    }

    #[test]
    fn q4_q5_follow_q2_q3() {
        assert!(rel(&q4(2).unwrap(), 7.16068e2 * 64.0) < 1e-5);
        assert!(rel(&q5(2).unwrap(), 6.22672e8 * 3f64.powf(0.25)) < 1e-5);
    }

    #[test]
    fn final_chain_small_degrees() {
        for n in 2..=100 {
            let q8 = q8_upper(n).unwrap();
            let q6e = q6(n).unwrap().mul(&LogMagnitude::from_ln(1.0 / n as f64));
            let lk = lambda_k(n).unwrap();
            assert!(q8.le(&q6e), "n={n}: Q8 > Q6 e^(1/n)");
            assert!(q6e.le(&lk), "n={n}: Q6 e^(1/n) > Lambda_K");
            assert!(
                lk.le(&lambda_sunley(n).unwrap()),
                "n={n}: Lambda_K >= Lambda_S"
            );
        }
    }

    #[test]
    fn degree_below_two_rejected() {
        assert!(matches!(lambda_k(1), Err(Error::DegreeTooSmall(1))));
        assert!(matches!(q1(0), Err(Error::DegreeTooSmall(0))));
    }

    #[test]
    fn kappa_upper_cases() {
        assert!((kappa_upper(2, 4f64.ln()).unwrap() - E * 4f64.ln() / 2.0).abs() < 1e-14);
        assert!((kappa_upper(2, 2.0 / E).unwrap() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn rademacher_cases() {
        let (field, _) = crate::field::parse_field(
            r#"{"label":"g","degree":2,"r1":0,"r2":1,"disc":-4,"fundamental_disc":-4}"#,
        )
        .unwrap();
        // sigma = 1 + eta: the middle exponent vanishes
        let eta = 0.45;
        let got = rademacher_rhs(1.0 + eta, 0.0, eta, &field).unwrap();
        let want = 3.0 * (2.0 + eta) / eta * zeta_one_plus(eta).powi(2);
        assert!((got / want - 1.0).abs() < 1e-12);
        assert!(rademacher_rhs(-0.45, 0.0, 0.45, &field).unwrap() > 0.0);
        assert!(matches!(
            rademacher_rhs(1.0, 0.0, 0.45, &field),
            Err(Error::Pole(_))
        ));
        assert!(matches!(
            rademacher_rhs(2.0, 0.0, 0.45, &field),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn thm_bound_cases() {
        let (field, _) = crate::field::parse_field(
            r#"{"label":"g","degree":2,"r1":0,"r2":1,"disc":-4,"fundamental_disc":-4}"#,
        )
        .unwrap();
        let improved = thm_bound(&field, 1e6, WhichBound::Improved).unwrap();
        let expect = 8.80778e11 * 4f64.powf(1.0 / 3.0) * 4f64.ln() * 100.0;
        assert!(improved.rel_diff(&LogMagnitude::from_f64(expect)) < 1e-5);
        let sunley = thm_bound(&field, 1e6, WhichBound::Sunley).unwrap();
        assert!(improved.le(&sunley));
        assert!(thm_bound(&field, 0.0, WhichBound::Improved)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn b_k_cases() {
        let (g, _) = crate::field::parse_field(
            r#"{"label":"g","degree":2,"r1":0,"r2":1,"disc":-4,"fundamental_disc":-4}"#,
        )
        .unwrap();
        assert_eq!(b_k(&g, 1.0).unwrap(), 1.0);
        let (c, _) =
            crate::field::parse_field(r#"{"label":"c","degree":3,"r1":1,"r2":1,"disc":-23}"#)
                .unwrap();
        assert_eq!(b_k(&c, 23.0).unwrap(), 6.0);
        assert!((b_k(&g, 1e6).unwrap() / 1.35892e1 - 1.0).abs() < 1e-5);
    }

    #[test]
    fn partial_sum_domain() {
        let (g, _) = crate::field::parse_field(
            r#"{"label":"g","degree":2,"r1":0,"r2":1,"disc":-4,"fundamental_disc":-4}"#,
        )
        .unwrap();
        assert!(partial_sum_bound(&g, 0.75, 100.0, PartialSumCase::Below1).unwrap() > 0.0);
        assert!(partial_sum_bound(&g, 1.75, 100.0, PartialSumCase::Above1).unwrap() > 0.0);
        assert!(matches!(
            partial_sum_bound(&g, 1.5, 100.0, PartialSumCase::Below1),
            Err(Error::Domain(_))
        ));
        // 1/(1-theta) blow-up as theta -> 1-
        let near = partial_sum_bound(&g, 1.0 - 1e-12, 100.0, PartialSumCase::Below1).unwrap();
        assert!(near > 1e11);
    }

    #[test]
    fn dominance_rows() {
        for n in 2..=75 {
            let n0 = n.min(7);
            let sum = v1(0.45, n0, n).unwrap() + v2(n).unwrap() + v3(n, n0).unwrap();
            assert!(sum <= q1(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn memoized_rows_consistent() {
        let a = constant_row(10).unwrap();
        let b = constant_row(10).unwrap();
        assert_eq!(a.lambda_k, b.lambda_k);
        assert_eq!(a.v1, b.v1);
    }
}
