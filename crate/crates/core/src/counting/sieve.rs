//! Multiplicative sieve for tau_m, the number of integral ideals of norm m.

use crate::counting::{kronecker, polyarith};
use crate::error::{Error, Result};
use crate::field::FieldSpec;

#[derive(Debug, Clone, Copy)]
pub struct SieveConfig {
    /// Segment length for the prime enumerator.
    pub segment_len: usize,
    /// Hard cap on X; refuse rather than thrash.
    pub max_x: u64,
}

impl Default for SieveConfig {
    fn default() -> Self {
        SieveConfig {
            segment_len: 1 << 20,
            max_x: 1 << 26,
        }
    }
}

/// Dense table of tau_1..tau_X with prefix sums; prefix[m] = I_K(m).
#[derive(Debug, Clone)]
pub struct TauTable {
    pub label: String,
    pub x: u64,
    pub tau: Vec<u32>,
    pub prefix: Vec<u64>,
}

impl TauTable {
    pub fn build_prefix(label: String, x: u64, tau: Vec<u32>) -> Self {
        let mut prefix = Vec::with_capacity(tau.len());
        let mut acc = 0u64;
        for &t in &tau {
            acc += t as u64;
            prefix.push(acc);
        }
        TauTable {
            label,
            x,
            tau,
            prefix,
        }
    }
}

/// How tau splits at prime powers for a given field.
enum LocalFactors {
    /// Degree 1: every tau is 1.
    Rational,
    /// Quadratic field with fundamental discriminant D: use chi_D.
    Quadratic(i64),
    /// General field with a certified defining polynomial.
    Dedekind { poly: Vec<i64>, disc: i64 },
}

impl LocalFactors {
    fn from_field(field: &FieldSpec) -> Result<Self> {
        if field.degree == 1 {
            return Ok(LocalFactors::Rational);
        }
        if let Some(d) = field.fundamental_disc {
            return Ok(LocalFactors::Quadratic(d));
        }
        if let Some(poly) = &field.poly {
            return Ok(LocalFactors::Dedekind {
                poly: poly.clone(),
                disc: field.disc,
            });
        }
        Err(Error::InvariantViolation(format!(
            "field '{}' has neither fundamental_disc nor poly; cannot split primes",
            field.label
        )))
    }

    /// tau at p^0, p^1, ..., p^kmax.
    fn tau_prime_powers(&self, p: u64, kmax: u32) -> Result<Vec<u32>> {
        match self {
            LocalFactors::Rational => Ok(vec![1; kmax as usize + 1]),
            LocalFactors::Quadratic(d) => (0..=kmax)
                .map(|k| kronecker::tau_prime_power_quadratic(*d, p, k))
                .collect(),
            LocalFactors::Dedekind { poly, disc } => {
                let degs = polyarith::residue_degrees(poly, *disc, p)?;
                // tau_{p^k} counts multisets of prime ideals above p with
                // residue degrees summing to k
                let mut dp = vec![0u32; kmax as usize + 1];
                dp[0] = 1;
                for &f in &degs {
                    let f = f as usize;
                    for j in f..dp.len() {
                        dp[j] += dp[j - f];
                    }
                }
                Ok(dp)
            }
        }
    }
}

/// Calls `visit` on every prime <= x, in order, using a segmented sieve.
fn for_each_prime(x: u64, segment_len: usize, mut visit: impl FnMut(u64) -> Result<()>) -> Result<()> {
    let root = (x as f64).sqrt() as u64 + 1;
    let mut is_comp = vec![false; root as usize + 1];
    let mut base = Vec::new();
    for p in 2..=root {
        if !is_comp[p as usize] {
            base.push(p);
            let mut m = p * p;
            while m <= root {
                is_comp[m as usize] = true;
                m += p;
            }
        }
    }
    for &p in &base {
        if p <= x {
            visit(p)?;
        }
    }
    let mut lo = root + 1;
    let mut seg = vec![false; segment_len];
    while lo <= x {
        let hi = (lo + segment_len as u64 - 1).min(x);
        let len = (hi - lo + 1) as usize;
        seg[..len].fill(false);
        for &p in &base {
            let mut m = lo.div_ceil(p) * p;
            while m <= hi {
                seg[(m - lo) as usize] = true;
                m += p;
            }
        }
        for i in 0..len {
            if !seg[i] {
                visit(lo + i as u64)?;
            }
        }
        lo = hi + 1;
    }
    Ok(())
}

/// Builds the tau table for m <= x by one multiplicative pass per prime
/// power: tau_m = prod over p^k || m of tau_{p^k}.
pub fn tau_sieve(field: &FieldSpec, x: u64, config: &SieveConfig) -> Result<TauTable> {
    if x < 1 {
        return Err(Error::RangeError { x: x as f64, limit: 1 });
    }
    if x > config.max_x {
        return Err(Error::OutOfMemory {
            x,
            budget: config.max_x,
        });
    }
    let provider = LocalFactors::from_field(field)?;
    let xs = x as usize;
    let mut tau = vec![1u32; xs + 1];
    tau[0] = 0;
    for_each_prime(x, config.segment_len, |p| {
        let mut kmax = 0u32;
        let mut pk = 1u64;
        while pk <= x / p {
            pk *= p;
            kmax += 1;
        }
        let tp = provider.tau_prime_powers(p, kmax)?;
        let mut pk = 1u64;
        for k in 1..=kmax {
            pk *= p;
            let f = tp[k as usize];
            // touch only m with v_p(m) = k exactly
            let mut m = pk;
            while m <= x {
                if (m / pk) % p != 0 {
                    tau[m as usize] *= f;
                }
                m += pk;
            }
        }
        Ok(())
    })?;
    Ok(TauTable::build_prefix(field.label.clone(), x, tau))
}

/// I_K(x) = sum of tau_m over m <= x, from a prebuilt table.
pub fn ideal_count(table: &TauTable, x: f64) -> Result<u64> {
    if !(x >= 0.0) || x.floor() as u64 > table.x {
        return Err(Error::RangeError { x, limit: table.x });
    }
    Ok(table.prefix[x.floor() as usize])
}
