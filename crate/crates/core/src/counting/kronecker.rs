//! Kronecker symbol and fundamental-discriminant tests.

use crate::error::{Error, Result};

/// Jacobi-style core: (a/n) for odd n >= 1.
fn jacobi_odd(mut a: i64, mut n: i64) -> i32 {
    debug_assert!(n >= 1 && n % 2 == 1);
    a %= n;
    if a < 0 {
        a += n;
    }
    let mut r = 1i32;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let m = n % 8;
            if m == 3 || m == 5 {
                r = -r;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            r = -r;
        }
        a %= n;
    }
    if n == 1 {
        r
    } else {
        0
    }
}

/// Kronecker symbol (a/n) for n >= 1, extended to even n via the
/// (a/2) supplement.
pub fn kronecker_symbol(a: i64, n: u64) -> i32 {
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    let mut n = n as i64;
    let mut r = 1i32;
    // peel factors of two with (a/2) = 0, 1, -1 by a mod 8
    while n % 2 == 0 {
        n /= 2;
        if a % 2 == 0 {
            return 0;
        }
        let m = a.rem_euclid(8);
        if m == 3 || m == 5 {
            r = -r;
        }
    }
    // a < 0 contributes (-1/n) = (-1)^{(n-1)/2}
    let core = if a < 0 {
        let s = if n % 4 == 3 { -1 } else { 1 };
        s * jacobi_odd(-a, n)
    } else {
        jacobi_odd(a, n)
    };
    r * core
}

fn squarefree(mut m: u64) -> bool {
    if m % 4 == 0 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// True when d is a fundamental discriminant: d = 1 mod 4 squarefree, or
/// d = 4m with m = 2 or 3 mod 4 squarefree. d = 1 is excluded.
pub fn is_fundamental(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    let r = d.rem_euclid(4);
    if r == 1 {
        squarefree(d.unsigned_abs())
    } else if r == 0 {
        let m = d / 4;
        let mr = m.rem_euclid(4);
        (mr == 2 || mr == 3) && squarefree(m.unsigned_abs())
    } else {
        false
    }
}

/// The quadratic character chi_D(m) = (D/m); errors unless D is fundamental.
pub fn chi(d: i64, m: u64) -> Result<i32> {
    if !is_fundamental(d) {
        return Err(Error::NotFundamental(d));
    }
    Ok(kronecker_symbol(d, m))
}

/// tau at a prime power for a quadratic field: split -> k+1, inert -> 1 for
/// even k else 0, ramified -> 1. Equals sum_{j<=k} chi_D(p^j).
pub fn tau_prime_power_quadratic(d: i64, p: u64, k: u32) -> Result<u32> {
    match chi(d, p)? {
        1 => Ok(k + 1),
        -1 => Ok(if k % 2 == 0 { 1 } else { 0 }),
        _ => Ok(1),
    }
}
