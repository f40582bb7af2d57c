//! Flat binary cache for tau tables, so repeated CLI runs skip the sieve.
//!
//! Layout (little-endian): magic "TAUT", version u32, FNV-1a hash of the
//! field label u64, X u64, then tau_1..tau_X as u32.

use crate::counting::sieve::TauTable;
use crate::error::{Error, Result};
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

const MAGIC: &[u8; 4] = b"TAUT";
const VERSION: u32 = 1;

fn fnv1a(s: &str) -> u64 {
    let mut h = 0xcbf29ce484222325u64;
    for b in s.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

pub fn write_cache(path: &Path, table: &TauTable) -> Result<()> {
    let f = std::fs::File::create(path)?;
    let mut w = BufWriter::new(f);
    w.write_all(MAGIC)?;
    w.write_all(&VERSION.to_le_bytes())?;
    w.write_all(&fnv1a(&table.label).to_le_bytes())?;
    w.write_all(&table.x.to_le_bytes())?;
    for &t in &table.tau[1..] {
        w.write_all(&t.to_le_bytes())?;
    }
    w.flush()?;
    Ok(())
}

/// Loads a cached table; errors if the header does not match the
/// requested field and X.
pub fn read_cache(path: &Path, label: &str, x: u64) -> Result<TauTable> {
    let f = std::fs::File::open(path)?;
    let mut r = BufReader::new(f);
    let mut head = [0u8; 4 + 4 + 8 + 8];
    r.read_exact(&mut head)
        .map_err(|_| Error::CacheMismatch("file too short for header".into()))?;
    if &head[0..4] != MAGIC {
        return Err(Error::CacheMismatch("bad magic".into()));
    }
    let ver = u32::from_le_bytes(head[4..8].try_into().unwrap());
    if ver != VERSION {
        return Err(Error::CacheMismatch(format!(
            "version {ver}, expected {VERSION}"
        )));
    }
    let hash = u64::from_le_bytes(head[8..16].try_into().unwrap());
    if hash != fnv1a(label) {
        return Err(Error::CacheMismatch(format!(
            "cache was built for a different field label than '{label}'"
        )));
    }
    let stored_x = u64::from_le_bytes(head[16..24].try_into().unwrap());
    if stored_x != x {
        return Err(Error::CacheMismatch(format!(
            "cache holds X = {stored_x}, requested {x}"
        )));
    }
    let mut tau = Vec::with_capacity(x as usize + 1);
    tau.push(0u32);
    let mut buf = [0u8; 4];
    for m in 1..=x {
        r.read_exact(&mut buf)
            .map_err(|_| Error::CacheMismatch(format!("truncated at entry {m}")))?;
        tau.push(u32::from_le_bytes(buf));
    }
    Ok(TauTable::build_prefix(label.to_string(), x, tau))
}
