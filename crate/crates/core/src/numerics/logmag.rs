//! Signed log-space scalars for quantities far beyond f64 range.

use crate::error::{Error, Result};

/// A signed real stored as `sign * exp(ln_abs)`.
///
/// `sign == 0` is exact zero and `ln_abs` is ignored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogMagnitude {
    pub sign: i8,
    pub ln_abs: f64,
}

impl LogMagnitude {
    pub const ZERO: LogMagnitude = LogMagnitude {
        sign: 0,
        ln_abs: f64::NEG_INFINITY,
    };
    pub const ONE: LogMagnitude = LogMagnitude {
        sign: 1,
        ln_abs: 0.0,
    };

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            Self::ZERO
        } else {
            LogMagnitude {
                sign: if x > 0.0 { 1 } else { -1 },
                ln_abs: x.abs().ln(),
            }
        }
    }

    /// Positive value given directly by its natural log.
    pub fn from_ln(ln_abs: f64) -> Self {
        LogMagnitude { sign: 1, ln_abs }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// Converts back to f64; overflows to ±inf, underflows to 0.
    pub fn to_f64(&self) -> f64 {
        if self.sign == 0 {
            0.0
        } else {
            self.sign as f64 * self.ln_abs.exp()
        }
    }

    pub fn abs(&self) -> Self {
        LogMagnitude {
            sign: self.sign.abs(),
            ln_abs: self.ln_abs,
        }
    }

    pub fn neg(&self) -> Self {
        LogMagnitude {
            sign: -self.sign,
            ln_abs: self.ln_abs,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.sign == 0 || other.sign == 0 {
            return Self::ZERO;
        }
        LogMagnitude {
            sign: self.sign * other.sign,
            ln_abs: self.ln_abs + other.ln_abs,
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.sign == 0 {
            return Err(Error::DivideByZero);
        }
        if self.sign == 0 {
            return Ok(Self::ZERO);
        }
        Ok(LogMagnitude {
            sign: self.sign * other.sign,
            ln_abs: self.ln_abs - other.ln_abs,
        })
    }

    /// Raises a non-negative magnitude to a real power.
    pub fn powf(&self, e: f64) -> Self {
        if self.sign == 0 {
            return if e == 0.0 { Self::ONE } else { Self::ZERO };
        }
        debug_assert!(self.sign > 0, "powf of a negative magnitude");
        LogMagnitude {
            sign: 1,
            ln_abs: self.ln_abs * e,
        }
    }

    /// Log-sum-exp addition anchored at the larger magnitude.
    ///
    /// The boolean is true when opposite-sign cancellation lost more than
    /// six decimal digits.
    pub fn add_flagged(&self, other: &Self) -> (Self, bool) {
        if self.sign == 0 {
            return (*other, false);
        }
        if other.sign == 0 {
            return (*self, false);
        }
        let (hi, lo) = if self.ln_abs >= other.ln_abs {
            (self, other)
        } else {
            (other, self)
        };
        let d = lo.ln_abs - hi.ln_abs; // <= 0
        if self.sign == other.sign {
            let ln_abs = hi.ln_abs + d.exp().ln_1p();
            (
                LogMagnitude {
                    sign: hi.sign,
                    ln_abs,
                },
                false,
            )
        } else {
            // |hi| - |lo| in log space: ln(1 - e^d)
            let diff = -d.exp_m1(); // 1 - e^d, in [0,1)
            if diff == 0.0 {
                return (Self::ZERO, true);
            }
            let ln_abs = hi.ln_abs + diff.ln();
            let cancelled = hi.ln_abs - ln_abs > 6.0 * std::f64::consts::LN_10;
            (
                LogMagnitude {
                    sign: hi.sign,
                    ln_abs,
                },
                cancelled,
            )
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_flagged(other).0
    }

    /// |self/other - 1|, computed in log space; infinite if other is zero.
    pub fn rel_diff(&self, other: &Self) -> f64 {
        if other.sign == 0 {
            return if self.sign == 0 { 0.0 } else { f64::INFINITY };
        }
        if self.sign == 0 {
            return 1.0;
        }
        if self.sign != other.sign {
            return f64::INFINITY;
        }
        (self.ln_abs - other.ln_abs).exp_m1().abs()
    }

    /// Ordering on the signed value.
    pub fn cmp_value(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        match (self.sign, other.sign) {
            (a, b) if a < b => Less,
            (a, b) if a > b => Greater,
            (0, 0) => Equal,
            (s, _) => {
                let ord = self
                    .ln_abs
                    .partial_cmp(&other.ln_abs)
                    .unwrap_or(Equal);
                if s > 0 {
                    ord
                } else {
                    ord.reverse()
                }
            }
        }
    }

    pub fn le(&self, other: &Self) -> bool {
        self.cmp_value(other) != std::cmp::Ordering::Greater
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponent_addition() {
        let a = LogMagnitude::from_f64(1e30);
        let b = LogMagnitude::from_f64(1e40);
        let p = a.mul(&b);
        assert!((p.ln_abs - 70.0 * std::f64::consts::LN_10).abs() < 1e-9);
        assert_eq!(p.sign, 1);
    }

    #[test]
    fn mul_by_reciprocal_is_one() {
        // x * (1/x) for x = Lambda_S(15)
        let x = crate::constants::lambda_sunley(15).unwrap();
        let inv = LogMagnitude::ONE.div(&x).unwrap();
        let p = x.mul(&inv);
        assert!(p.ln_abs.abs() < 1e-12);
        assert_eq!(p.sign, 1);
    }

    #[test]
    fn roundtrip_within_ulps() {
        for &r in &[1.0, 0.3183098861837907, 2.5e-9, 7.13e101, 1.0 + 1e-15] {
            let back = LogMagnitude::from_f64(r).to_f64();
            // exp(ln r) amplifies rounding by about |ln r| ulps
            let tol = (r.ln().abs() + 4.0) * f64::EPSILON * r;
            assert!((back - r).abs() <= tol, "{r} -> {back}");
        }
    }

    #[test]
    fn add_matches_direct_for_representable() {
        let cases = [(3.5, 4.25), (1e-8, 2.0), (6.02e23, 1.6e-19), (9.9, 9.9)];
        for (a, b) in cases {
            let s = LogMagnitude::from_f64(a).add(&LogMagnitude::from_f64(b));
            let direct = a + b;
            assert!((s.to_f64() / direct - 1.0).abs() < 1e-12, "{a}+{b}");
        }
    }

    #[test]
    fn opposite_sign_subtraction() {
        let a = LogMagnitude::from_f64(5.0);
        let b = LogMagnitude::from_f64(-3.0);
        let (s, flagged) = a.add_flagged(&b);
        assert!(!flagged);
        assert!((s.to_f64() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn cancellation_is_flagged() {
        let a = LogMagnitude::from_f64(1.0);
        let b = LogMagnitude::from_f64(-(1.0 - 1e-9));
        let (s, flagged) = a.add_flagged(&b);
        assert!(flagged);
        assert!((s.to_f64() - 1e-9).abs() < 1e-15);
    }

    #[test]
    fn div_by_zero_rejected() {
        let a = LogMagnitude::from_f64(1.0);
        assert!(matches!(
            a.div(&LogMagnitude::ZERO),
            Err(Error::DivideByZero)
        ));
    }

    #[test]
    fn zero_identities() {
        let z = LogMagnitude::ZERO;
        let a = LogMagnitude::from_f64(-2.5);
        assert_eq!(z.mul(&a), LogMagnitude::ZERO);
        assert_eq!(z.add(&a), a);
        assert_eq!(a.add(&z), a);
    }
}
