//! Adaptive Gauss–Kronrod quadrature on finite and semi-infinite intervals.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Outcome of a quadrature run.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureResult {
    pub value: f64,
    /// Absolute error estimate (always >= 0).
    pub est_error: f64,
    pub evaluations: usize,
}

// 15-point Kronrod abscissae (positive half) and weights, with the
// embedded 7-point Gauss weights.
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let x = h * XGK[j];
        let fsum = f(c - x) + f(c + x);
        kron += WGK[j] * fsum;
        if j % 2 == 1 {
            gauss += WG[j / 2] * fsum;
        }
    }
    let value = kron * h;
    let err = ((kron - gauss) * h).abs();
    (value, err)
}

fn gk15_complex<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> (Complex64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let x = h * XGK[j];
        let fsum = f(c - x) + f(c + x);
        kron += WGK[j] * fsum;
        if j % 2 == 1 {
            gauss += WG[j / 2] * fsum;
        }
    }
    (kron * h, ((kron - gauss) * h).norm())
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

const EVAL_BUDGET: usize = 4_000_000;

/// Adaptive bisection on [a, b]; splits the worst panel until the summed
/// error estimate drops below `tol` or the budget runs out.
pub fn integrate<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> Result<QuadratureResult> {
    let (value, err) = gk15(f, a, b);
    let mut panels = vec![Panel { a, b, value, err }];
    let mut evals = 15usize;
    let min_width = (b - a).abs() * 1e-14;
    loop {
        let total_err: f64 = panels.iter().map(|p| p.err).sum();
        if total_err <= tol {
            let value = panels.iter().map(|p| p.value).sum();
            return Ok(QuadratureResult {
                value,
                est_error: total_err,
                evaluations: evals,
            });
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.err.partial_cmp(&y.1.err).unwrap())
            .map(|(i, _)| i)
            .unwrap();
        if evals + 30 > EVAL_BUDGET || (panels[worst].b - panels[worst].a).abs() < min_width {
            let value: f64 = panels.iter().map(|p| p.value).sum();
            return Err(Error::NonConvergence {
                value,
                est_error: total_err,
                evaluations: evals,
            });
        }
        let Panel { a, b, .. } = panels.swap_remove(worst);
        let m = 0.5 * (a + b);
        let (v1, e1) = gk15(f, a, m);
        let (v2, e2) = gk15(f, m, b);
        evals += 30;
        panels.push(Panel {
            a,
            b: m,
            value: v1,
            err: e1,
        });
        panels.push(Panel {
            a: m,
            b,
            value: v2,
            err: e2,
        });
    }
}

/// Complex-valued adaptive quadrature over a pre-split panel list; used for
/// oscillatory integrands where the caller bounds the phase change per panel.
fn integrate_complex_panels<F: Fn(f64) -> Complex64>(
    f: &F,
    cuts: &[f64],
    tol: f64,
) -> Result<(Complex64, f64, usize)> {
    let mut panels: Vec<(f64, f64, Complex64, f64)> = Vec::with_capacity(cuts.len());
    let mut evals = 0usize;
    for w in cuts.windows(2) {
        let (v, e) = gk15_complex(f, w[0], w[1]);
        evals += 15;
        panels.push((w[0], w[1], v, e));
    }
    loop {
        let total_err: f64 = panels.iter().map(|p| p.3).sum();
        if total_err <= tol {
            let value = panels.iter().map(|p| p.2).sum();
            return Ok((value, total_err, evals));
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.partial_cmp(&y.1 .3).unwrap())
            .map(|(i, _)| i)
            .unwrap();
        let (a, b, _, _) = panels.swap_remove(worst);
        if evals + 30 > EVAL_BUDGET || (b - a).abs() < 1e-14 {
            let value: Complex64 = panels.iter().map(|p| p.2).sum();
            return Err(Error::NonConvergence {
                value: value.norm(),
                est_error: total_err,
                evaluations: evals,
            });
        }
        let m = 0.5 * (a + b);
        let (v1, e1) = gk15_complex(f, a, m);
        let (v2, e2) = gk15_complex(f, m, b);
        evals += 30;
        panels.push((a, m, v1, e1));
        panels.push((m, b, v2, e2));
    }
}

/// Cutoff for the exponential substitution: [1, inf) maps to u in [0, U_MAX].
const U_MAX: f64 = 400.0;

/// Integrates f over (0, inf): adaptive rule on [0,1], then t = e^u on
/// [1, e^U_MAX]. The truncated tail is the caller's concern (see
/// [`upsilon_integral`], which bounds it analytically).
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(f: &F, tol: f64) -> Result<QuadratureResult> {
    let head = integrate(f, 0.0, 1.0, 0.5 * tol)?;
    let g = |u: f64| {
        let t = u.exp();
        f(t) * t
    };
    // Seed the adaptive pass with dyadic panels; a single panel over
    // [0, U_MAX] would sample only far into the decayed region and
    // silently return zero for fast-decaying integrands.
    let mut cuts = vec![0.0f64];
    let mut c = 1.0f64;
    while c < U_MAX {
        cuts.push(c);
        c *= 2.0;
    }
    cuts.push(U_MAX);
    let mut value = head.value;
    let mut est_error = head.est_error;
    let mut evaluations = head.evaluations;
    let panel_tol = 0.5 * tol / (cuts.len() - 1) as f64;
    for w in cuts.windows(2) {
        let part = integrate(&g, w[0], w[1], panel_tol)?;
        value += part.value;
        est_error += part.est_error;
        evaluations += part.evaluations;
    }
    Ok(QuadratureResult {
        value,
        est_error,
        evaluations,
    })
}

/// The integrand |1-eta+it|^{2 eta} / (|-eta+it| |1+eta-it|).
pub fn upsilon_integrand(eta: f64, t: f64) -> f64 {
    let num = (1.0 - eta).hypot(t).powf(2.0 * eta);
    let den = eta.hypot(t) * (1.0 + eta).hypot(t);
    num / den
}

/// Integral of the kernel above over (0, inf), with the truncation beyond
/// t = e^{U_MAX} bounded by (1+1/T)^{2 eta} T^{2 eta - 1} / (1 - 2 eta)
/// and folded into est_error.
pub fn upsilon_integral(eta: f64) -> Result<QuadratureResult> {
    if !(0.01..=0.45).contains(&eta) {
        return Err(Error::BadEta(eta));
    }
    let f = |t: f64| upsilon_integrand(eta, t);
    let mut r = integrate_semi_infinite(&f, 1e-8)?;
    // For t >= T the integrand is <= (1 + 1/T)^{2 eta} t^{2 eta - 2}.
    let ln_tail = 2.0 * eta / U_MAX.exp() + (2.0 * eta - 1.0) * U_MAX - (1.0 - 2.0 * eta).ln();
    r.est_error += ln_tail.exp();
    Ok(r)
}

/// Modulus of int_0^U u^{-1/2} e^{-u i (log u - mu)} du.
///
/// Substituting u = v^2 removes the endpoint singularity:
/// 2 int_0^{sqrt U} exp(-i v^2 (2 log v - mu)) dv. Panels are chosen so the
/// phase advances by at most ~1 radian each before the adaptive pass.
pub fn satz204_probe(u_limit: f64, mu: f64) -> Result<f64> {
    assert!(u_limit > 0.0, "satz204_probe requires U > 0");
    let vmax = u_limit.sqrt();
    let g = |v: f64| {
        if v == 0.0 {
            return Complex64::new(1.0, 0.0);
        }
        let phase = -v * v * (2.0 * v.ln() - mu);
        Complex64::from_polar(1.0, phase)
    };
    // |phase'(v)| = |2v (2 ln v - mu + 1)|; walk cuts keeping the phase
    // change per panel bounded.
    let mut cuts = vec![0.0f64];
    let mut v = 0.0f64;
    while v < vmax {
        let dphi = (2.0 * v * (2.0 * v.max(1e-12).ln() - mu + 1.0)).abs().max(1.0);
        v = (v + 1.0 / dphi).min(vmax);
        cuts.push(v);
    }
    let (value, _, _) = integrate_complex_panels(&g, &cuts, 1e-8)?;
    Ok(2.0 * value.norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_decay_integrates_to_one() {
        let r = integrate_semi_infinite(&|t: f64| (-t).exp(), 1e-12).unwrap();
        assert!((r.value - 1.0).abs() <= r.est_error.max(1e-12));
    }

    #[test]
    fn gamma_half_identity() {
        // int_0^inf t^{-1/2} e^{-pi t} dt = Gamma(1/2)/sqrt(pi) = 1,
        // evaluated after t = s^2 so the integrand is smooth.
        let f = |s: f64| 2.0 * (-std::f64::consts::PI * s * s).exp();
        let r = integrate_semi_infinite(&f, 1e-9).unwrap();
        assert!((r.value - 1.0).abs() < 1e-8, "value {}", r.value);
    }

    #[test]
    fn upsilon_at_045_below_certificate() {
        let r = upsilon_integral(0.45).unwrap();
        assert!(r.value > 10.0 && r.value <= 10.45243, "value {}", r.value);
        assert!(r.est_error <= 1e-6);
    }

    #[test]
    fn upsilon_smaller_at_001() {
        let lo = upsilon_integral(0.01).unwrap();
        let hi = upsilon_integral(0.45).unwrap();
        assert!(lo.value < hi.value);
    }

    #[test]
    fn upsilon_rejects_bad_eta() {
        assert!(matches!(upsilon_integral(0.5), Err(Error::BadEta(_))));
    }

    #[test]
    fn satz_probe_small() {
        let v = satz204_probe(1.0, 0.0).unwrap();
        assert!(v < 26.0, "probe {v}");
        let tiny = satz204_probe(1e-10, 0.0).unwrap();
        assert!(tiny < 1e-4);
    }
}
