//! Number-field invariants and their validation.

use crate::constants::delta0;
use crate::counting::kronecker::is_fundamental;
use crate::error::{Error, Result};
use serde_json::{json, Value};

/// Invariants of a number field. Immutable once validated.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldSpec {
    pub label: String,
    pub degree: u32,
    pub r1: u32,
    pub r2: u32,
    pub disc: i64,
    /// Monic defining polynomial, constant coefficient first, last entry 1.
    pub poly: Option<Vec<i64>>,
    /// Quadratic fields only; must equal disc.
    pub fundamental_disc: Option<i64>,
    // Opaque metadata: read from field files, never computed.
    pub class_number: Option<i64>,
    pub regulator: Option<f64>,
    pub roots_of_unity: Option<i64>,
}

impl FieldSpec {
    pub fn abs_disc(&self) -> u64 {
        self.disc.unsigned_abs()
    }

    pub fn ln_abs_disc(&self) -> f64 {
        (self.abs_disc() as f64).ln()
    }

    /// A_K = 2^{-r2} pi^{-n/2} |disc|^{1/2}.
    pub fn a_k(&self) -> f64 {
        assert!(self.degree >= 1, "degenerate degree");
        2f64.powi(-(self.r2 as i32))
            * std::f64::consts::PI.powf(-(self.degree as f64) / 2.0)
            * (self.abs_disc() as f64).sqrt()
    }

    /// Validates all structural invariants; returns non-fatal warnings.
    pub fn validate(&self) -> Result<Vec<String>> {
        let mut warnings = Vec::new();
        let n = self.degree;
        if n < 1 {
            return Err(Error::InvariantViolation("degree must be >= 1".into()));
        }
        if n != self.r1 + 2 * self.r2 {
            return Err(Error::InvariantViolation(format!(
                "degree {} != r1 + 2 r2 = {}",
                n,
                self.r1 + 2 * self.r2
            )));
        }
        if self.disc == 0 {
            return Err(Error::InvariantViolation("disc must be nonzero".into()));
        }
        if n == 1 {
            warnings.push(format!(
                "field '{}' has degree 1; constant evaluators reject n < 2",
                self.label
            ));
        }
        if (2..=7).contains(&n) {
            let min = delta0(n);
            if self.abs_disc() < min {
                return Err(Error::DiscTooSmall {
                    degree: n,
                    disc: self.abs_disc(),
                    min,
                });
            }
        } else if n >= 8 && self.abs_disc() < delta0(n) {
            warnings.push(format!(
                "field '{}': |disc| = {} below the unconditional minimum {} for degree >= 8",
                self.label,
                self.abs_disc(),
                delta0(n)
            ));
        }
        if let Some(poly) = &self.poly {
            if poly.len() != n as usize + 1 {
                return Err(Error::InvariantViolation(format!(
                    "poly has degree {}, field has degree {}",
                    poly.len().saturating_sub(1),
                    n
                )));
            }
            if *poly.last().unwrap() != 1 {
                return Err(Error::InvariantViolation(
                    "poly must be monic (last entry 1)".into(),
                ));
            }
        }
        if let Some(d) = self.fundamental_disc {
            if n != 2 {
                return Err(Error::InvariantViolation(
                    "fundamental_disc only applies to quadratic fields".into(),
                ));
            }
            if d != self.disc {
                return Err(Error::InvariantViolation(format!(
                    "fundamental_disc {} != disc {}",
                    d, self.disc
                )));
            }
            if !is_fundamental(d) {
                return Err(Error::NotFundamental(d));
            }
        }
        Ok(warnings)
    }

    pub fn to_json(&self) -> Value {
        let mut obj = json!({
            "label": self.label,
            "degree": self.degree,
            "r1": self.r1,
            "r2": self.r2,
            "disc": self.disc,
        });
        let map = obj.as_object_mut().unwrap();
        if let Some(p) = &self.poly {
            map.insert("poly".into(), json!(p));
        }
        if let Some(d) = self.fundamental_disc {
            map.insert("fundamental_disc".into(), json!(d));
        }
        if let Some(h) = self.class_number {
            map.insert("class_number".into(), json!(h));
        }
        if let Some(r) = self.regulator {
            map.insert("regulator".into(), json!(r));
        }
        if let Some(w) = self.roots_of_unity {
            map.insert("roots_of_unity".into(), json!(w));
        }
        obj
    }
}

const KNOWN_KEYS: &[&str] = &[
    "label",
    "degree",
    "r1",
    "r2",
    "disc",
    "poly",
    "fundamental_disc",
    "class_number",
    "regulator",
    "roots_of_unity",
];

fn get_u32(v: &Value, key: &str) -> Result<u32> {
    v.get(key)
        .and_then(Value::as_u64)
        .and_then(|x| u32::try_from(x).ok())
        .ok_or_else(|| Error::Parse(format!("missing or invalid integer key '{key}'")))
}

/// Parses and validates a field description; rejection is total.
pub fn parse_field(text: &str) -> Result<(FieldSpec, Vec<String>)> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("field document must be a JSON object".into()))?;
    let mut warnings: Vec<String> = obj
        .keys()
        .filter(|k| !KNOWN_KEYS.contains(&k.as_str()))
        .map(|k| format!("ignoring unknown key '{k}'"))
        .collect();
    let spec = FieldSpec {
        label: obj
            .get("label")
            .and_then(Value::as_str)
            .unwrap_or("unnamed")
            .to_string(),
        degree: get_u32(&v, "degree")?,
        r1: get_u32(&v, "r1")?,
        r2: get_u32(&v, "r2")?,
        disc: obj
            .get("disc")
            .and_then(Value::as_i64)
            .ok_or_else(|| Error::Parse("missing or invalid integer key 'disc'".into()))?,
        poly: match obj.get("poly") {
            None => None,
            Some(p) => Some(
                p.as_array()
                    .map(|a| a.iter().map(|x| x.as_i64()).collect::<Option<Vec<_>>>())
                    .flatten()
                    .ok_or_else(|| Error::Parse("'poly' must be an integer array".into()))?,
            ),
        },
        fundamental_disc: obj.get("fundamental_disc").and_then(Value::as_i64),
        class_number: obj.get("class_number").and_then(Value::as_i64),
        regulator: obj.get("regulator").and_then(Value::as_f64),
        roots_of_unity: obj.get("roots_of_unity").and_then(Value::as_i64),
    };
    warnings.extend(spec.validate()?);
    Ok((spec, warnings))
}

/// Loads a field file, printing warnings to stderr.
pub fn load_field(path: &std::path::Path) -> Result<FieldSpec> {
    let text = std::fs::read_to_string(path)?;
    let (spec, warnings) = parse_field(&text)?;
    for w in &warnings {
        eprintln!("warning: {w}");
    }
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gaussian() -> &'static str {
        r#"{"label":"gaussian","degree":2,"r1":0,"r2":1,"disc":-4,"fundamental_disc":-4}"#
    }

    #[test]
    fn gaussian_field_loads() {
        let (f, w) = parse_field(gaussian()).unwrap();
        assert_eq!(f.degree, 2);
        assert_eq!(f.disc, -4);
        assert!(w.is_empty());
    }

    #[test]
    fn smallest_cubic_loads() {
        let (f, _) =
            parse_field(r#"{"label":"c","degree":3,"r1":1,"r2":1,"disc":-23}"#).unwrap();
        assert_eq!(f.abs_disc(), 23);
    }

    #[test]
    fn signature_mismatch_rejected() {
        let r = parse_field(r#"{"label":"x","degree":2,"r1":2,"r2":1,"disc":-4}"#);
        assert!(matches!(r, Err(Error::InvariantViolation(_))));
    }

    #[test]
    fn small_disc_rejected() {
        let r = parse_field(r#"{"label":"x","degree":3,"r1":1,"r2":1,"disc":-11}"#);
        assert!(matches!(r, Err(Error::DiscTooSmall { .. })));
    }

    #[test]
    fn unknown_key_warns() {
        let (_, w) =
            parse_field(r#"{"label":"g","degree":2,"r1":0,"r2":1,"disc":-4,"color":"blue"}"#)
                .unwrap();
        assert_eq!(w.len(), 1);
        assert!(w[0].contains("color"));
    }

    #[test]
    fn a_k_values() {
        let (g, _) = parse_field(gaussian()).unwrap();
        assert!((g.a_k() - 1.0 / std::f64::consts::PI).abs() < 1e-15);
        let (q5, _) =
            parse_field(r#"{"label":"q5","degree":2,"r1":2,"r2":0,"disc":5,"fundamental_disc":5}"#)
                .unwrap();
        assert!((q5.a_k() - 5f64.sqrt() / std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn serialize_roundtrip() {
        let (f, _) = parse_field(gaussian()).unwrap();
        let (g, _) = parse_field(&f.to_json().to_string()).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn degree_one_flagged() {
        let (_, w) = parse_field(r#"{"label":"q","degree":1,"r1":1,"r2":0,"disc":1}"#).unwrap();
        assert!(w.iter().any(|m| m.contains("degree 1")));
    }

    #[test]
    fn non_fundamental_rejected() {
        // 20 = 4 * 5 with 5 = 1 mod 4, so 20 is not fundamental
        let r = parse_field(
            r#"{"label":"x","degree":2,"r1":2,"r2":0,"disc":20,"fundamental_disc":20}"#,
        );
        assert!(matches!(r, Err(Error::NotFundamental(20))));
    }
}
