//! Independent ideal counts for the five smallest imaginary quadratic
//! fields, by brute-force lattice enumeration of principal forms.
//!
//! Each of these fields has class number one, so ideals of norm m
//! correspond to lattice points on the principal binary quadratic form
//! of discriminant D, up to units.

use crate::error::{Error, Result};

/// (b, c, units): principal form x^2 + bxy + cy^2 and unit count.
fn form(d: i64) -> Result<(i64, i64, u32)> {
    Ok(match d {
        -3 => (1, 1, 6),
        -4 => (0, 1, 4),
        -7 => (1, 2, 2),
        -8 => (0, 2, 2),
        -11 => (1, 3, 2),
        _ => return Err(Error::UnsupportedDiscriminant(d)),
    })
}

/// Histogram of tau_m for 1 <= m <= x, counting form representations
/// divided by the number of units.
pub fn lattice_counts(d: i64, x: u64) -> Result<Vec<u32>> {
    let (b, c, w) = form(d)?;
    let mut reps = vec![0u32; x as usize + 1];
    // norm = (x + by/2)^2 + (|d|/4) y^2, so |y| <= sqrt(4x/|d|)
    let ymax = ((4.0 * x as f64 / d.unsigned_abs() as f64).sqrt() as i64) + 2;
    for y in -ymax..=ymax {
        // solve u^2 + buy + cy^2 <= x for u
        let disc_term = d.unsigned_abs() as f64 / 4.0 * (y * y) as f64;
        if disc_term > x as f64 + 1.0 {
            continue;
        }
        let half = (x as f64 - disc_term).max(0.0).sqrt();
        let center = -(b as f64) * y as f64 / 2.0;
        let lo = (center - half).floor() as i64 - 2;
        let hi = (center + half).ceil() as i64 + 2;
        for u in lo..=hi {
            let m = u * u + b * u * y + c * y * y;
            if m >= 1 && (m as u64) <= x {
                reps[m as usize] += 1;
            }
        }
    }
    for r in &mut reps {
        debug_assert!(*r % w == 0, "representation count not divisible by unit count");
        *r /= w;
    }
    reps[0] = 0;
    Ok(reps)
}

/// tau_m for a single m.
pub fn lattice_tau(d: i64, m: u64) -> Result<u32> {
    Ok(lattice_counts(d, m)?[m as usize])
}
