//! Element-kind registry.
//!
//! The conceptual model behind a reference-architecture description is a
//! fixed set of element kinds: the concepts of ISO/IEC/IEEE 42010 plus the
//! extension concepts covering aspects the standard does not address
//! (variability, instantiation, acquisition, and so on). The registry ships
//! as an editable data file (`kinds.json`) rather than a hard-coded enum so
//! the concept set can be refined without touching code. The file declares
//! its own expected cardinalities and the loader enforces them.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use super::ModelError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KindOrigin {
    Standard42010,
    PaperExtension,
}

/// One entry of the conceptual-model registry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementKind {
    pub name: String,
    pub origin: KindOrigin,
    /// Whether elements of this kind are subject to evolution. The system
    /// of interest and the reference architecture itself are concepts of
    /// the model but not parts of the description, so they are not
    /// evolvable.
    pub evolvable: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct KindsDoc {
    declared_total: usize,
    declared_evolvable: usize,
    kinds: Vec<ElementKind>,
    /// Concepts under consideration but not enabled; kept in the data file
    /// so the discussion travels with it. Ignored by the loader.
    #[serde(default)]
    candidates: Vec<KindCandidate>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct KindCandidate {
    name: String,
    note: String,
}

/// Validated element-kind registry.
#[derive(Debug, Clone)]
pub struct KindRegistry {
    kinds: IndexMap<String, ElementKind>,
}

impl KindRegistry {
    /// Parse and validate a `kinds.json` document.
    pub fn from_json(doc: &str) -> Result<Self, ModelError> {
        let parsed: KindsDoc = serde_json::from_str(doc).map_err(ModelError::from_serde)?;
        let mut kinds = IndexMap::new();
        for kind in parsed.kinds {
            if kind.name.is_empty() {
                return Err(ModelError::InvalidRegistry("kind with empty name".into()));
            }
            if kinds.insert(kind.name.clone(), kind.clone()).is_some() {
                return Err(ModelError::InvalidRegistry(format!(
                    "duplicate kind name `{}`",
                    kind.name
                )));
            }
        }
        let evolvable = kinds.values().filter(|k| k.evolvable).count();
        if kinds.len() != parsed.declared_total {
            return Err(ModelError::InvalidRegistry(format!(
                "registry declares {} kinds but contains {}",
                parsed.declared_total,
                kinds.len()
            )));
        }
        if evolvable != parsed.declared_evolvable {
            return Err(ModelError::InvalidRegistry(format!(
                "registry declares {} evolvable kinds but contains {}",
                parsed.declared_evolvable, evolvable
            )));
        }
        Ok(Self { kinds })
    }

    pub fn get(&self, name: &str) -> Option<&ElementKind> {
        self.kinds.get(name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.kinds.contains_key(name)
    }

    /// Errors with `UnknownKind` when the name is not registered.
    pub fn require(&self, name: &str) -> Result<&ElementKind, ModelError> {
        self.get(name).ok_or_else(|| ModelError::UnknownKind(name.to_string()))
    }

    pub fn len(&self) -> usize {
        self.kinds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kinds.is_empty()
    }

    pub fn evolvable_count(&self) -> usize {
        self.kinds.values().filter(|k| k.evolvable).count()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ElementKind> {
        self.kinds.values()
    }
}
