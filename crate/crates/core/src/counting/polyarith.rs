//! Polynomial arithmetic over F_p plus the exact integer discriminant,
//! used to split rational primes in a field given by a defining polynomial.
//!
//! Polynomials are coefficient vectors, constant term first, with no
//! trailing zeros. All prime moduli fit in u64; products go through u128.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Poly = Vec<u64>;

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    r
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn trim(f: &mut Poly) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

pub fn deg(f: &Poly) -> Option<usize> {
    if f.is_empty() {
        None
    } else {
        Some(f.len() - 1)
    }
}

/// Reduces an integer polynomial mod p.
pub fn reduce(f: &[i64], p: u64) -> Poly {
    let mut out: Poly = f.iter().map(|&c| c.rem_euclid(p as i64) as u64).collect();
    trim(&mut out);
    out
}

pub fn monic(mut f: Poly, p: u64) -> Poly {
    if let Some(&lc) = f.last() {
        if lc != 1 {
            let inv = invmod(lc, p);
            for c in &mut f {
                *c = mulmod(*c, inv, p);
            }
        }
    }
    f
}

pub fn mul(a: &Poly, b: &Poly, p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    trim(&mut out);
    out
}

/// Remainder of a by b; b must be nonzero.
pub fn rem(a: &Poly, b: &Poly, p: u64) -> Poly {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = a.clone();
    let db = b.len() - 1;
    let lcinv = invmod(*b.last().unwrap(), p);
    while r.len() > db {
        let k = r.len() - 1 - db;
        let q = mulmod(*r.last().unwrap(), lcinv, p);
        if q != 0 {
            for (j, &c) in b.iter().enumerate() {
                let t = mulmod(q, c, p);
                r[k + j] = (r[k + j] + p - t) % p;
            }
        }
        r.pop();
        trim(&mut r);
        if r.len() <= db {
            break;
        }
    }
    trim(&mut r);
    r
}

/// Exact quotient a / b when b divides a.
pub fn div_exact(a: &Poly, b: &Poly, p: u64) -> Poly {
    assert!(!b.is_empty());
    if a.is_empty() {
        return Vec::new();
    }
    let mut r = a.clone();
    let db = b.len() - 1;
    let lcinv = invmod(*b.last().unwrap(), p);
    let mut q = vec![0u64; a.len() - b.len() + 1];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = mulmod(*r.last().unwrap(), lcinv, p);
        q[k] = c;
        for (j, &bc) in b.iter().enumerate() {
            let t = mulmod(c, bc, p);
            r[k + j] = (r[k + j] + p - t) % p;
        }
        trim(&mut r);
    }
    debug_assert!(r.is_empty(), "non-exact polynomial division");
    trim(&mut q);
    q
}

pub fn gcd(a: &Poly, b: &Poly, p: u64) -> Poly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(a, p)
}

pub fn derivative(f: &Poly, p: u64) -> Poly {
    let mut out: Poly = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| mulmod(c, (i as u64) % p, p))
        .collect();
    trim(&mut out);
    out
}

/// f^e mod m in F_p[x]/(m).
fn powmod_poly(f: &Poly, mut e: u64, m: &Poly, p: u64) -> Poly {
    let mut base = rem(f, m, p);
    let mut acc: Poly = vec![1];
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(&mul(&acc, &base, p), m, p);
        }
        base = rem(&mul(&base, &base, p), m, p);
        e >>= 1;
    }
    acc
}

/// p-th root of a polynomial that is a p-th power: keep every p-th
/// coefficient (Frobenius fixes F_p).
fn pth_root(f: &Poly, p: u64) -> Poly {
    let mut out: Poly = f.iter().step_by(p as usize).copied().collect();
    trim(&mut out);
    out
}

/// Product of the distinct irreducible factors of f (the radical).
pub fn radical(f: &Poly, p: u64) -> Poly {
    let f = monic(f.clone(), p);
    if f.len() <= 1 {
        return vec![1];
    }
    let df = derivative(&f, p);
    if df.is_empty() {
        // f = g(x)^p
        return radical(&pth_root(&f, p), p);
    }
    let g = gcd(&f, &df, p);
    if g.len() == 1 {
        return f; // squarefree
    }
    // w carries each factor with multiplicity not divisible by p, once
    let w = div_exact(&f, &g, p);
    // strip w's factors out of g; the rest is a p-th power
    let mut h = g;
    loop {
        let d = gcd(&h, &w, p);
        if d.len() == 1 {
            break;
        }
        h = div_exact(&h, &d, p);
    }
    if h.len() == 1 {
        return w;
    }
    mul(&w, &radical(&pth_root(&h, p), p), p)
}

/// Degrees (with multiplicity over distinct factors) of the irreducible
/// factors of a squarefree monic f, by distinct-degree splitting.
pub fn distinct_degrees(f: &Poly, p: u64) -> Vec<u32> {
    let mut f = monic(f.clone(), p);
    let mut out = Vec::new();
    let x: Poly = vec![0, 1];
    let mut frob = powmod_poly(&x, p, &f, p); // x^{p^d} mod f, d = 1
    let mut d = 1usize;
    while f.len() > 1 && 2 * d <= f.len() - 1 {
        // gcd(x^{p^d} - x, f) collects all factors of degree d
        let mut diff = frob.clone();
        while diff.len() < 2 {
            diff.push(0);
        }
        diff[1] = (diff[1] + p - 1) % p;
        trim(&mut diff);
        let g = gcd(&diff, &f, p);
        if g.len() > 1 {
            let dg = g.len() - 1;
            for _ in 0..dg / d {
                out.push(d as u32);
            }
            f = div_exact(&f, &g, p);
            frob = rem(&frob, &f, p);
        }
        d += 1;
        if f.len() > 1 && 2 * d <= f.len() - 1 {
            frob = powmod_poly(&frob, p, &f, p);
        }
    }
    if f.len() > 1 {
        out.push((f.len() - 1) as u32);
    }
    out.sort_unstable();
    out
}

/// Exact determinant by the Bareiss fraction-free elimination.
fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Resultant of two integer polynomials (constant-first) via the
/// Sylvester matrix.
fn resultant(f: &[i64], g: &[i64]) -> BigInt {
    let n = f.len() - 1;
    let m = g.len() - 1;
    if n == 0 {
        return BigInt::from(f[0]).pow(m as u32);
    }
    if m == 0 {
        return BigInt::from(g[0]).pow(n as u32);
    }
    let size = n + m;
    let mut s = vec![vec![BigInt::zero(); size]; size];
    for row in 0..m {
        for (j, &c) in f.iter().rev().enumerate() {
            s[row][row + j] = BigInt::from(c);
        }
    }
    for row in 0..n {
        for (j, &c) in g.iter().rev().enumerate() {
            s[m + row][row + j] = BigInt::from(c);
        }
    }
    det_bareiss(s)
}

/// Discriminant of a monic integer polynomial.
pub fn discriminant(f: &[i64]) -> BigInt {
    let n = f.len() - 1;
    assert!(n >= 1 && f[n] == 1, "monic polynomial required");
    let df: Vec<i64> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| c * i as i64)
        .collect();
    let res = resultant(f, &df);
    if (n * (n - 1) / 2) % 2 == 1 {
        -res
    } else {
        res
    }
}

fn valuation(mut v: BigInt, p: u64) -> u32 {
    let p = BigInt::from(p);
    let mut k = 0;
    if v.is_zero() {
        return u32::MAX;
    }
    v = v.abs();
    while (&v % &p).is_zero() {
        v /= &p;
        k += 1;
    }
    k
}

/// Residue degrees of the primes above p, read off the factorization of
/// the defining polynomial mod p. Valid only when p does not divide the
/// index, certified by matching p-valuations of the polynomial and field
/// discriminants; otherwise errors rather than guessing.
pub fn residue_degrees(poly: &[i64], field_disc: i64, p: u64) -> Result<Vec<u32>> {
    let dpoly = discriminant(poly);
    let vp_poly = valuation(dpoly, p);
    let vp_field = valuation(BigInt::from(field_disc), p);
    if vp_poly != vp_field {
        return Err(Error::IndexDivisor { p });
    }
    let fbar = reduce(poly, p);
    let rad = radical(&fbar, p);
    Ok(distinct_degrees(&rad, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    const CUBIC: [i64; 4] = [-1, -1, 0, 1]; // x^3 - x - 1

    #[test]
    fn discriminants() {
        assert_eq!(discriminant(&[1, 0, 1]), BigInt::from(-4)); // x^2 + 1
        assert_eq!(discriminant(&CUBIC), BigInt::from(-23));
        assert_eq!(discriminant(&[1, 1, 1]), BigInt::from(-3)); // x^2 + x + 1
        assert_eq!(discriminant(&[-1, -1, 1]), BigInt::from(5)); // x^2 - x - 1
        // x^5 - x - 1: 19 * 151 = 2869
        assert_eq!(discriminant(&[-1, -1, 0, 0, 0, 1]), BigInt::from(2869));
    }

    #[test]
    fn gcd_and_radical() {
        let p = 7;
        // (x+1)^2 (x+2) mod 7
        let f = mul(&mul(&vec![1, 1], &vec![1, 1], p), &vec![2, 1], p);
        let r = radical(&f, p);
        assert_eq!(r, mul(&vec![1, 1], &vec![2, 1], p));
    }

    #[test]
    fn radical_of_pth_power() {
        let p = 3;
        // (x+1)^3 = x^3 + 1 mod 3; derivative vanishes
        let f = vec![1, 0, 0, 1];
        assert_eq!(radical(&f, p), vec![1, 1]);
    }

    #[test]
    fn cubic_splitting_patterns() {
        // x^3 - x - 1 mod p, against factorizations checked by hand
        // p = 5: root at 2, cofactor x^2 + 2x + 3 irreducible (disc 2 is
        // a non-residue mod 5)
        assert_eq!(residue_degrees(&CUBIC, -23, 5).unwrap(), vec![1, 2]);
        // p = 2, 3: no roots, irreducible
        assert_eq!(residue_degrees(&CUBIC, -23, 2).unwrap(), vec![3]);
        assert_eq!(residue_degrees(&CUBIC, -23, 3).unwrap(), vec![3]);
        // p = 23 ramifies: (x - 3)(x - 10)^2
        assert_eq!(residue_degrees(&CUBIC, -23, 23).unwrap(), vec![1, 1]);
        // p = 59: 4 is a root, 64 - 4 - 1 = 59, and the cofactor splits
        assert_eq!(residue_degrees(&CUBIC, -23, 59).unwrap(), vec![1, 1, 1]);
    }

    #[test]
    fn ddf_matches_root_count() {
        // number of degree-1 factors of x^3 - x - 1 mod p equals the
        // number of roots in F_p, for many primes
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 29, 31, 37, 41, 43, 47, 53] {
            let degs = residue_degrees(&CUBIC, -23, p).unwrap();
            let roots = (0..p)
                .filter(|&x| {
                    (mulmod(mulmod(x, x, p), x, p) + 2 * p - x - 1) % p == 0
                })
                .count() as usize;
            let ones = degs.iter().filter(|&&d| d == 1).count();
            assert_eq!(ones, roots, "p = {p}");
            assert_eq!(degs.iter().sum::<u32>() as usize, if p == 23 { 2 } else { 3 });
        }
    }

    #[test]
    fn index_divisor_detected() {
        // x^2 + 3 has disc -12; for the field Q(sqrt(-3)) with disc -3
        // the prime 2 divides the index
        assert!(matches!(
            residue_degrees(&[3, 0, 1], -3, 2),
            Err(Error::IndexDivisor { p: 2 })
        ));
        // but odd primes are certified fine
        assert_eq!(residue_degrees(&[3, 0, 1], -3, 7).unwrap(), vec![1, 1]);
    }

    #[test]
    fn quadratic_agrees_with_kronecker() {
        use crate::counting::kronecker::kronecker_symbol;
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29] {
            let degs = residue_degrees(&[1, 0, 1], -4, p).unwrap();
            let expect = match kronecker_symbol(-4, p) {
                1 => vec![1, 1],
                -1 => vec![2],
                _ => vec![1],
            };
            assert_eq!(degs, expect, "p = {p}");
        }
    }
}
