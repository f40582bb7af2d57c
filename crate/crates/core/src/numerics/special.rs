//! erfc, the incomplete gamma function at s = 1/2, and zeta(s) for s > 1.
//!
//! erfc and Gamma(1/2, .) are implemented on independent routes (Taylor
//! series / continued fractions) so the identity Gamma(1/2, z^2) =
//! sqrt(pi) * erfc(z) is a genuine cross-check rather than a tautology.

use std::sync::OnceLock;

const SQRT_PI: f64 = 1.7724538509055160273;

/// Complement of the error function for x >= 0.
///
/// Absolute error <= 1e-14 for x <= 30; underflows to 0 for large x.
pub fn erfc(x: f64) -> f64 {
    assert!(x >= 0.0, "erfc domain is x >= 0");
    if x < 2.0 {
        // erf by Taylor series: 2/sqrt(pi) sum (-1)^n x^(2n+1) / (n! (2n+1))
        let x2 = x * x;
        let mut term = x;
        let mut sum = x;
        let mut n = 1.0f64;
        while term.abs() > 1e-18 * sum.abs().max(1.0) {
            term *= -x2 / n;
            sum += term / (2.0 * n + 1.0);
            n += 1.0;
        }
        1.0 - 2.0 / SQRT_PI * sum
    } else {
        // Continued fraction erfc(x) = e^{-x^2}/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
        // evaluated by the modified Lentz algorithm.
        let tiny = 1e-300;
        let mut f = x;
        let mut c = f;
        let mut d = 0.0f64;
        for i in 1..400 {
            let a = i as f64 / 2.0;
            d = x + a * d;
            if d.abs() < tiny {
                d = tiny;
            }
            c = x + a / c;
            if c.abs() < tiny {
                c = tiny;
            }
            d = 1.0 / d;
            let delta = c * d;
            f *= delta;
            if (delta - 1.0).abs() < 1e-17 {
                break;
            }
        }
        (-x * x).exp() / (SQRT_PI * f)
    }
}

/// Gamma(1/2, z) = int_z^inf y^{-1/2} e^{-y} dy for z >= 0.
pub fn incomplete_gamma_half(z: f64) -> f64 {
    assert!(z >= 0.0, "incomplete_gamma_half domain is z >= 0");
    if z == 0.0 {
        return SQRT_PI;
    }
    if z < 1.5 {
        // Lower series gamma(s,z) = z^s e^{-z} sum z^n / (s (s+1) ... (s+n)),
        // then Gamma = sqrt(pi) - gamma.
        let s = 0.5;
        let mut denom = s;
        let mut term = 1.0 / denom;
        let mut sum = term;
        let mut n = 1.0f64;
        while term > 1e-18 * sum {
            denom = s + n;
            term *= z / denom;
            sum += term;
            n += 1.0;
        }
        SQRT_PI - z.sqrt() * (-z).exp() * sum
    } else {
        // Upper continued fraction:
        // Gamma(s,z) = e^{-z} z^s / (z + 1 - s - 1(1-s)/(z + 3 - s - 2(2-s)/(...)))
        let s = 0.5;
        let tiny = 1e-300;
        let mut b = z + 1.0 - s;
        let mut c = 1.0 / tiny;
        let mut d = 1.0 / b;
        let mut f = d;
        for i in 1..400 {
            let a = -(i as f64) * (i as f64 - s);
            b += 2.0;
            d = a * d + b;
            if d.abs() < tiny {
                d = tiny;
            }
            c = b + a / c;
            if c.abs() < tiny {
                c = tiny;
            }
            d = 1.0 / d;
            let delta = d * c;
            f *= delta;
            if (delta - 1.0).abs() < 1e-17 {
                break;
            }
        }
        (-z).exp() * z.sqrt() * f
    }
}

/// Riemann zeta for real s > 1 by Euler–Maclaurin with n explicit terms.
pub fn zeta_em(s: f64, n: u64) -> f64 {
    assert!(s > 1.0, "zeta_em requires s > 1");
    let nf = n as f64;
    // Kahan-compensated descending sum of k^{-s}.
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    let mut k = n;
    while k >= 1 {
        let y = (k as f64).powf(-s) - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        k -= 1;
    }
    sum + nf.powf(1.0 - s) / (s - 1.0) - 0.5 * nf.powf(-s)
        + s * nf.powf(-s - 1.0) / 12.0
        - s * (s + 1.0) * (s + 2.0) * nf.powf(-s - 3.0) / 720.0
}

/// zeta(1.45), evaluated once (it enters every Q1 evaluation).
pub fn zeta_145() -> f64 {
    static CACHE: OnceLock<f64> = OnceLock::new();
    *CACHE.get_or_init(|| zeta_em(1.45, 1_000_000))
}

/// zeta(1 + eta) for the v1 evaluator; eta in [0.01, 0.45].
pub fn zeta_one_plus(eta: f64) -> f64 {
    zeta_em(1.0 + eta, 10_000)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn erfc_at_zero_and_large() {
        assert_eq!(erfc(0.0), 1.0);
        assert_eq!(erfc(40.0), 0.0); // underflow is the documented limit
    }

    #[test]
    fn erfc_at_two() {
        // independent high-order oracle value
        assert!((erfc(2.0) - 4.6777349810472658e-3).abs() < 1e-14);
    }

    #[test]
    fn erfc_monotone_in_unit_interval() {
        let mut prev = 1.0;
        for i in 1..=300 {
            let v = erfc(i as f64 * 0.01);
            assert!(v < prev && v > 0.0 && v <= 1.0);
            prev = v;
        }
    }

    #[test]
    fn gamma_half_endpoints() {
        assert!((incomplete_gamma_half(0.0) - SQRT_PI).abs() < 1e-15);
        // quadrature oracle of the defining integral at z = 1
        assert!((incomplete_gamma_half(1.0) - 0.2788055852806620).abs() < 1e-13);
    }

    #[test]
    fn gamma_erfc_identity() {
        // Gamma(1/2, z^2) = sqrt(pi) erfc(z) on z in [0, 6]
        for i in 0..=600 {
            let z = i as f64 * 0.01;
            let lhs = incomplete_gamma_half(z * z);
            let rhs = SQRT_PI * erfc(z);
            assert!((lhs - rhs).abs() <= 1e-12, "z={z}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn zeta_values() {
        // zeta(2) = pi^2/6
        assert!((zeta_em(2.0, 10_000) - PI * PI / 6.0).abs() < 1e-12);
        // frozen from a 2e7-term partial sum + integral tail oracle
        assert!((zeta_145() - 2.8311965244511155).abs() < 1e-11);
    }

    #[test]
    #[ignore = "slow independent oracle for zeta(1.45); run with --ignored"]
    fn zeta_145_against_partial_sum_oracle() {
        let n = 20_000_000u64;
        let mut sum = 0.0f64;
        let mut comp = 0.0f64;
        let mut k = n;
        while k >= 1 {
            let y = (k as f64).powf(-1.45) - comp;
            let t = sum + y;
            comp = (t - sum) - y;
            sum = t;
            k -= 1;
        }
        // tail int_n^inf t^{-1.45} dt bracketed between the two Riemann sums
        let tail_lo = ((n + 1) as f64).powf(-0.45) / 0.45;
        let tail_hi = (n as f64).powf(-0.45) / 0.45;
        let v = zeta_145();
        assert!(v >= sum + tail_lo - 1e-10 && v <= sum + tail_hi + 1e-10);
    }
}
