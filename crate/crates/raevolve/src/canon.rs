//! Canonical JSON serialization and content hashing.
//!
//! All documents the tool persists (`.rad.json` descriptions, changesets,
//! registry and catalog files) use one canonical form: UTF-8, object keys
//! sorted lexicographically, arrays in insertion order, two-space
//! indentation, and a trailing newline. Serializing the same value twice
//! yields identical bytes, which makes content hashes and byte-level
//! fixtures meaningful.

use serde::Serialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CanonError {
    #[error("serialization failed: {0}")]
    Serialize(#[from] serde_json::Error),
    #[error("non-integer number at {path}: canonical documents carry no floating-point fields")]
    FloatingPoint { path: String },
}

/// Serialize a value to canonical JSON text.
///
/// Keys are sorted because `serde_json::Value` objects are backed by a
/// `BTreeMap`; converting through `Value` therefore normalizes field order
/// regardless of struct declaration order.
pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String, CanonError> {
    let value = serde_json::to_value(value)?;
    reject_floats(&value, "$")?;
    let mut text = serde_json::to_string_pretty(&value)?;
    text.push('\n');
    Ok(text)
}

/// Serialize a value to canonical JSON bytes.
pub fn to_canonical_bytes<T: Serialize>(value: &T) -> Result<Vec<u8>, CanonError> {
    Ok(to_canonical_json(value)?.into_bytes())
}

/// SHA-256 of the canonical serialization, as a lowercase hex string.
pub fn canonical_hash_hex<T: Serialize>(value: &T) -> Result<String, CanonError> {
    let bytes = to_canonical_bytes(value)?;
    let digest = Sha256::digest(&bytes);
    Ok(hex::encode(digest))
}

fn reject_floats(value: &serde_json::Value, path: &str) -> Result<(), CanonError> {
    match value {
        serde_json::Value::Number(n) => {
            if !n.is_i64() && !n.is_u64() {
                return Err(CanonError::FloatingPoint { path: path.to_string() });
            }
            Ok(())
        }
        serde_json::Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                reject_floats(item, &format!("{path}[{i}]"))?;
            }
            Ok(())
        }
        serde_json::Value::Object(map) => {
            for (key, item) in map {
                reject_floats(item, &format!("{path}.{key}"))?;
            }
            Ok(())
        }
        _ => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde::Serialize;

    #[derive(Serialize)]
    struct Unsorted {
        zeta: u32,
        alpha: String,
        mid: Vec<u32>,
    }

    #[test]
    fn keys_are_sorted_and_output_is_stable() {
        let v = Unsorted { zeta: 1, alpha: "a".into(), mid: vec![3, 1] };
        let a = to_canonical_json(&v).unwrap();
        let b = to_canonical_json(&v).unwrap();
        assert_eq!(a, b);
        let alpha_pos = a.find("alpha").unwrap();
        let mid_pos = a.find("mid").unwrap();
        let zeta_pos = a.find("zeta").unwrap();
        assert!(alpha_pos < mid_pos && mid_pos < zeta_pos);
        assert!(a.ends_with('\n'));
    }

    #[test]
    fn floats_are_rejected() {
        let err = to_canonical_json(&serde_json::json!({ "x": 1.5 })).unwrap_err();
        assert!(matches!(err, CanonError::FloatingPoint { .. }));
    }

    #[test]
    fn hash_is_stable_and_distinguishes_values() {
        let a = canonical_hash_hex(&serde_json::json!({"k": 1})).unwrap();
        let b = canonical_hash_hex(&serde_json::json!({"k": 1})).unwrap();
        let c = canonical_hash_hex(&serde_json::json!({"k": 2})).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(a.len(), 64);
    }
}
