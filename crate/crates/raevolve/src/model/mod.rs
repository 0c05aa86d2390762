//! Typed in-memory model of a reference-architecture description.
//!
//! A description is a plain value: a named document holding elements of
//! registered kinds, a flat traceability matrix, and ordered general text
//! sections. Elements form an acyclic parent-child graph and are addressed
//! by tool-generated opaque ids, so rules can find them by kind and name
//! while renames leave identity untouched. The version counter advances
//! only when a changeset is applied, never through direct edits.

mod kinds;
mod validate;

pub use kinds::{ElementKind, KindOrigin, KindRegistry};
pub use validate::{Violation, ViolationKind};

use std::collections::BTreeMap;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon;

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("description name must not be empty")]
    EmptyName,
    #[error("unknown element kind `{0}`")]
    UnknownKind(String),
    #[error("parent element `{0}` not found")]
    ParentNotFound(ElementId),
    #[error("element `{0}` not found")]
    ElementNotFound(ElementId),
    #[error("section `{0}` already exists on {1}")]
    SectionExists(String, String),
    #[error("section `{0}` not found on {1}")]
    SectionNotFound(String, String),
    #[error("trace entry references unknown element `{0}`")]
    DanglingRef(String),
    #[error("trace entry source and target are the same (`{0}`)")]
    SelfTrace(String),
    #[error("attaching `{child}` under `{parent}` would create a cycle")]
    WouldCycle { parent: ElementId, child: ElementId },
    #[error("invalid kind registry: {0}")]
    InvalidRegistry(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error(transparent)]
    Canon(#[from] canon::CanonError),
}

impl ModelError {
    pub(crate) fn from_serde(err: serde_json::Error) -> Self {
        ModelError::Parse { line: err.line(), column: err.column(), message: err.to_string() }
    }
}

/// Opaque element identifier, unique within one description.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementId(pub String);

impl ElementId {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Whether a trace reference is shaped like a tool-generated element id
    /// (as opposed to an external artifact name such as `fera:3-11`).
    pub fn looks_like_id(text: &str) -> bool {
        text.strip_prefix("e-")
            .map(|rest| !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()))
            .unwrap_or(false)
    }
}

impl std::fmt::Display for ElementId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for ElementId {
    fn from(s: &str) -> Self {
        Self(s.to_string())
    }
}

/// A named text block, used both for element bodies and for the general
/// sections of the description. Content is opaque prose; the tool records
/// and transforms it but never interprets it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section {
    pub name: String,
    pub content: String,
}

/// One element of the description.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescElement {
    pub id: ElementId,
    pub kind: String,
    pub name: String,
    pub body: Vec<Section>,
    pub children: Vec<ElementId>,
    pub attributes: BTreeMap<String, String>,
}

impl DescElement {
    pub fn section(&self, name: &str) -> Option<&Section> {
        self.body.iter().find(|s| s.name == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum RelationKind {
    Represents,
    DerivedFrom,
    Satisfies,
    Covers,
    Custom(String),
}

impl std::fmt::Display for RelationKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RelationKind::Represents => f.write_str("Represents"),
            RelationKind::DerivedFrom => f.write_str("DerivedFrom"),
            RelationKind::Satisfies => f.write_str("Satisfies"),
            RelationKind::Covers => f.write_str("Covers"),
            RelationKind::Custom(t) => write!(f, "Custom({t})"),
        }
    }
}

/// Reserved changeset id for traceability entries that predate the history,
/// e.g. entries brought in from an existing matrix.
pub const IMPORTED_CHANGESET: &str = "imported";

/// One edge of the traceability matrix. Source and target are element ids
/// or external artifact names; provenance points at the changeset that
/// created the entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub source: String,
    pub target: String,
    pub relation: RelationKind,
    pub note: String,
    pub changeset_id: String,
}

/// Where a section write lands: the description's general sections or the
/// body of one element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SectionTarget {
    General,
    Element(ElementId),
}

impl std::fmt::Display for SectionTarget {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SectionTarget::General => f.write_str("general"),
            SectionTarget::Element(id) => write!(f, "element {id}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WriteMode {
    Create,
    Replace,
    Append,
}

/// What a subtree removal actually took out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemovalReport {
    pub removed_ids: Vec<ElementId>,
    pub removed_traces: Vec<TraceEntry>,
}

/// Serialized shape of a description. Elements persist as an array in
/// insertion order; the in-memory map is rebuilt (and id uniqueness
/// re-checked) on load.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct DescriptionDoc {
    name: String,
    version: u64,
    next_id: u64,
    elements: Vec<DescElement>,
    traceability: Vec<TraceEntry>,
    general_sections: Vec<Section>,
}

/// The evolving document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DescriptionDoc", into = "DescriptionDoc")]
pub struct ArchitectureDescription {
    pub name: String,
    pub version: u64,
    next_id: u64,
    elements: IndexMap<ElementId, DescElement>,
    pub traceability: Vec<TraceEntry>,
    pub general_sections: Vec<Section>,
}

impl TryFrom<DescriptionDoc> for ArchitectureDescription {
    type Error = String;

    fn try_from(doc: DescriptionDoc) -> Result<Self, String> {
        let mut elements = IndexMap::with_capacity(doc.elements.len());
        for element in doc.elements {
            if element.id.as_str().is_empty() {
                return Err("element with empty id".to_string());
            }
            let id = element.id.clone();
            if elements.insert(id.clone(), element).is_some() {
                return Err(format!("duplicate element id `{id}`"));
            }
            if let Some(n) = numeric_suffix(&id) {
                if n >= doc.next_id {
                    return Err(format!(
                        "element id `{id}` is not below the next-id counter {}",
                        doc.next_id
                    ));
                }
            }
        }
        Ok(Self {
            name: doc.name,
            version: doc.version,
            next_id: doc.next_id,
            elements,
            traceability: doc.traceability,
            general_sections: doc.general_sections,
        })
    }
}

impl From<ArchitectureDescription> for DescriptionDoc {
    fn from(desc: ArchitectureDescription) -> Self {
        Self {
            name: desc.name,
            version: desc.version,
            next_id: desc.next_id,
            elements: desc.elements.into_values().collect(),
            traceability: desc.traceability,
            general_sections: desc.general_sections,
        }
    }
}

fn numeric_suffix(id: &ElementId) -> Option<u64> {
    id.as_str().strip_prefix("e-").and_then(|rest| rest.parse().ok())
}

impl ArchitectureDescription {
    /// Create an empty description. Versioning is changeset-driven, so the
    /// fresh document sits at version 0 until a rule execution lands.
    pub fn new(name: &str) -> Result<Self, ModelError> {
        if name.is_empty() {
            return Err(ModelError::EmptyName);
        }
        Ok(Self {
            name: name.to_string(),
            version: 0,
            next_id: 1,
            elements: IndexMap::new(),
            traceability: Vec::new(),
            general_sections: Vec::new(),
        })
    }

    pub fn element(&self, id: &ElementId) -> Option<&DescElement> {
        self.elements.get(id)
    }

    pub fn elements(&self) -> impl Iterator<Item = &DescElement> {
        self.elements.values()
    }

    pub fn element_count(&self) -> usize {
        self.elements.len()
    }

    /// Add an element of a registered kind, optionally attached under a
    /// parent, and return its fresh id.
    pub fn add_element(
        &mut self,
        registry: &KindRegistry,
        kind: &str,
        name: &str,
        parent: Option<&ElementId>,
    ) -> Result<ElementId, ModelError> {
        registry.require(kind)?;
        if let Some(parent_id) = parent {
            if !self.elements.contains_key(parent_id) {
                return Err(ModelError::ParentNotFound(parent_id.clone()));
            }
        }
        let id = ElementId(format!("e-{}", self.next_id));
        self.next_id += 1;
        self.elements.insert(
            id.clone(),
            DescElement {
                id: id.clone(),
                kind: kind.to_string(),
                name: name.to_string(),
                body: Vec::new(),
                children: Vec::new(),
                attributes: BTreeMap::new(),
            },
        );
        if let Some(parent_id) = parent {
            self.elements
                .get_mut(parent_id)
                .expect("parent checked above")
                .children
                .push(id.clone());
        }
        Ok(id)
    }

    /// All elements of `kind`, in insertion order. The optional name filter
    /// is a substring match, so a search for "Variability" finds the
    /// "Variability View".
    pub fn find_elements(
        &self,
        registry: &KindRegistry,
        kind: &str,
        name_filter: Option<&str>,
    ) -> Result<Vec<ElementId>, ModelError> {
        registry.require(kind)?;
        Ok(self
            .elements
            .values()
            .filter(|e| e.kind == kind)
            .filter(|e| name_filter.map(|f| e.name.contains(f)).unwrap_or(true))
            .map(|e| e.id.clone())
            .collect())
    }

    /// Attach an existing element under an existing parent. Rejects edges
    /// that would make the parent-child graph cyclic.
    pub fn attach_child(
        &mut self,
        parent: &ElementId,
        child: &ElementId,
    ) -> Result<(), ModelError> {
        if !self.elements.contains_key(child) {
            return Err(ModelError::ElementNotFound(child.clone()));
        }
        if !self.elements.contains_key(parent) {
            return Err(ModelError::ElementNotFound(parent.clone()));
        }
        if parent == child || self.reachable_from(child, parent) {
            return Err(ModelError::WouldCycle { parent: parent.clone(), child: child.clone() });
        }
        let parent_el = self.elements.get_mut(parent).expect("checked above");
        if !parent_el.children.contains(child) {
            parent_el.children.push(child.clone());
        }
        Ok(())
    }

    fn reachable_from(&self, start: &ElementId, goal: &ElementId) -> bool {
        let mut stack = vec![start.clone()];
        let mut seen = std::collections::BTreeSet::new();
        while let Some(id) = stack.pop() {
            if &id == goal {
                return true;
            }
            if !seen.insert(id.clone()) {
                continue;
            }
            if let Some(el) = self.elements.get(&id) {
                stack.extend(el.children.iter().cloned());
            }
        }
        false
    }

    pub fn set_attribute(
        &mut self,
        id: &ElementId,
        key: &str,
        value: &str,
    ) -> Result<(), ModelError> {
        let el = self
            .elements
            .get_mut(id)
            .ok_or_else(|| ModelError::ElementNotFound(id.clone()))?;
        el.attributes.insert(key.to_string(), value.to_string());
        Ok(())
    }

    /// Remove an element and its entire child subtree. Traceability entries
    /// referencing any removed id are removed too and listed in the report,
    /// and surviving elements' child lists are pruned.
    pub fn remove_element(&mut self, id: &ElementId) -> Result<RemovalReport, ModelError> {
        if !self.elements.contains_key(id) {
            return Err(ModelError::ElementNotFound(id.clone()));
        }
        // Collect the subtree in depth-first order starting at the root.
        let mut to_remove: Vec<ElementId> = Vec::new();
        let mut stack = vec![id.clone()];
        while let Some(current) = stack.pop() {
            if to_remove.contains(&current) {
                continue;
            }
            to_remove.push(current.clone());
            if let Some(el) = self.elements.get(&current) {
                for child in el.children.iter().rev() {
                    stack.push(child.clone());
                }
            }
        }
        for rid in &to_remove {
            self.elements.shift_remove(rid);
        }
        for el in self.elements.values_mut() {
            el.children.retain(|c| !to_remove.contains(c));
        }
        let removed_set: std::collections::BTreeSet<&str> =
            to_remove.iter().map(|i| i.as_str()).collect();
        let mut removed_traces = Vec::new();
        self.traceability.retain(|entry| {
            let gone = removed_set.contains(entry.source.as_str())
                || removed_set.contains(entry.target.as_str());
            if gone {
                removed_traces.push(entry.clone());
            }
            !gone
        });
        Ok(RemovalReport { removed_ids: to_remove, removed_traces })
    }

    /// Create, replace, or append to a named section on an element body or
    /// in the general sections.
    pub fn write_section(
        &mut self,
        target: &SectionTarget,
        name: &str,
        content: &str,
        mode: WriteMode,
    ) -> Result<(), ModelError> {
        let (sections, where_desc) = match target {
            SectionTarget::General => (&mut self.general_sections, "general".to_string()),
            SectionTarget::Element(id) => {
                let el = self
                    .elements
                    .get_mut(id)
                    .ok_or_else(|| ModelError::ElementNotFound(id.clone()))?;
                (&mut el.body, format!("element {id}"))
            }
        };
        let existing = sections.iter_mut().find(|s| s.name == name);
        match (mode, existing) {
            (WriteMode::Create, Some(_)) => {
                Err(ModelError::SectionExists(name.to_string(), where_desc))
            }
            (WriteMode::Create, None) => {
                sections.push(Section { name: name.to_string(), content: content.to_string() });
                Ok(())
            }
            (WriteMode::Replace, Some(section)) => {
                section.content = content.to_string();
                Ok(())
            }
            (WriteMode::Append, Some(section)) => {
                section.content.push_str(content);
                Ok(())
            }
            (WriteMode::Replace, None) | (WriteMode::Append, None) => {
                Err(ModelError::SectionNotFound(name.to_string(), where_desc))
            }
        }
    }

    pub fn general_section(&self, name: &str) -> Option<&Section> {
        self.general_sections.iter().find(|s| s.name == name)
    }

    /// Append a traceability entry after checking that it is not a self
    /// trace and that every element-shaped reference resolves.
    pub fn add_trace(&mut self, entry: TraceEntry) -> Result<(), ModelError> {
        if entry.source == entry.target {
            return Err(ModelError::SelfTrace(entry.source));
        }
        for side in [&entry.source, &entry.target] {
            if ElementId::looks_like_id(side) && !self.elements.contains_key(&ElementId(side.clone()))
            {
                return Err(ModelError::DanglingRef(side.clone()));
            }
        }
        self.traceability.push(entry);
        Ok(())
    }

    /// Canonical serialization of the whole document.
    pub fn to_canonical_json(&self) -> Result<String, ModelError> {
        Ok(canon::to_canonical_json(self)?)
    }

    /// Parse a canonical (or any well-formed) description document.
    pub fn from_json(doc: &str) -> Result<Self, ModelError> {
        serde_json::from_str(doc).map_err(ModelError::from_serde)
    }

    // --- positional primitives used by changeset deltas ---

    pub(crate) fn element_at(&self, index: usize) -> Option<&DescElement> {
        self.elements.get_index(index).map(|(_, e)| e)
    }

    pub(crate) fn insert_element_at(
        &mut self,
        index: usize,
        element: DescElement,
    ) -> Result<(), ModelError> {
        if self.elements.contains_key(&element.id) {
            return Err(ModelError::DanglingRef(format!(
                "cannot insert duplicate element id `{}`",
                element.id
            )));
        }
        let index = index.min(self.elements.len());
        self.elements.shift_insert(index, element.id.clone(), element);
        Ok(())
    }

    pub(crate) fn remove_element_at(&mut self, index: usize) -> Option<DescElement> {
        self.elements.shift_remove_index(index).map(|(_, e)| e)
    }

    pub(crate) fn replace_element(&mut self, element: DescElement) -> Result<(), ModelError> {
        let slot = self
            .elements
            .get_mut(&element.id)
            .ok_or_else(|| ModelError::ElementNotFound(element.id.clone()))?;
        *slot = element;
        Ok(())
    }

    pub(crate) fn set_next_id(&mut self, next_id: u64) {
        self.next_id = next_id;
    }

    pub(crate) fn peek_next_id(&self) -> u64 {
        self.next_id
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed;

    fn registry() -> &'static KindRegistry {
        seed::kind_registry()
    }

    #[test]
    fn new_description_is_empty_at_version_zero() {
        let desc = ArchitectureDescription::new("Cambuci").unwrap();
        assert_eq!(desc.element_count(), 0);
        assert_eq!(desc.version, 0);
        assert!(desc.traceability.is_empty());
    }

    #[test]
    fn empty_name_is_rejected() {
        assert!(matches!(ArchitectureDescription::new(""), Err(ModelError::EmptyName)));
    }

    #[test]
    fn adding_elements_does_not_touch_the_version() {
        let mut desc = ArchitectureDescription::new("Toy-RA").unwrap();
        desc.add_element(registry(), "Viewpoint", "Crosscutting Viewpoint", None).unwrap();
        assert_eq!(desc.element_count(), 1);
        assert_eq!(desc.version, 0);
    }

    #[test]
    fn add_element_checks_kind_and_parent() {
        let mut desc = ArchitectureDescription::new("Toy-RA").unwrap();
        assert!(matches!(
            desc.add_element(registry(), "BogusKind", "X", None),
            Err(ModelError::UnknownKind(_))
        ));
        let missing = ElementId::from("e-99");
        assert!(matches!(
            desc.add_element(registry(), "Viewpoint", "X", Some(&missing)),
            Err(ModelError::ParentNotFound(_))
        ));
    }

    #[test]
    fn children_attach_under_parent() {
        let mut desc = ArchitectureDescription::new("Toy-RA").unwrap();
        let vp = desc.add_element(registry(), "Viewpoint", "Crosscutting Viewpoint", None).unwrap();
        let view = desc.add_element(registry(), "View", "Variability View", Some(&vp)).unwrap();
        assert_eq!(desc.element(&vp).unwrap().children, vec![view.clone()]);
        let found = desc.find_elements(registry(), "View", Some("Variability")).unwrap();
        assert_eq!(found, vec![view]);
    }

    #[test]
    fn find_elements_on_empty_description_is_empty() {
        let desc = ArchitectureDescription::new("Toy-RA").unwrap();
        assert!(desc.find_elements(registry(), "Variability", None).unwrap().is_empty());
        assert!(matches!(
            desc.find_elements(registry(), "BogusKind", None),
            Err(ModelError::UnknownKind(_))
        ));
    }

    #[test]
    fn attach_child_rejects_cycles() {
        let mut desc = ArchitectureDescription::new("Toy-RA").unwrap();
        let a = desc.add_element(registry(), "Module", "a", None).unwrap();
        let b = desc.add_element(registry(), "Module", "b", Some(&a)).unwrap();
        assert!(matches!(desc.attach_child(&b, &a), Err(ModelError::WouldCycle { .. })));
        assert!(matches!(desc.attach_child(&a, &a), Err(ModelError::WouldCycle { .. })));
    }

    #[test]
    fn removal_takes_subtree_and_traces() {
        let mut desc = ArchitectureDescription::new("Toy-RA").unwrap();
        let vp = desc.add_element(registry(), "Viewpoint", "Crosscutting Viewpoint", None).unwrap();
        let view = desc.add_element(registry(), "View", "Variability View", Some(&vp)).unwrap();
        let model =
            desc.add_element(registry(), "ArchitectureModel", "Variability Model", Some(&view)).unwrap();
        desc.add_trace(TraceEntry {
            source: model.to_string(),
            target: "fera:3-11".into(),
            relation: RelationKind::Covers,
            note: String::new(),
            changeset_id: IMPORTED_CHANGESET.into(),
        })
        .unwrap();

        let report = desc.remove_element(&view).unwrap();
        assert_eq!(report.removed_ids, vec![view, model]);
        assert_eq!(report.removed_traces.len(), 1);
        assert_eq!(desc.element_count(), 1);
        assert!(desc.element(&vp).unwrap().children.is_empty());
        assert!(desc.traceability.is_empty());
    }

    #[test]
    fn removal_of_leaf_reports_one_id_no_traces() {
        let mut desc = ArchitectureDescription::new("Toy-RA").unwrap();
        let id = desc.add_element(registry(), "Concern", "Security", None).unwrap();
        let report = desc.remove_element(&id).unwrap();
        assert_eq!(report.removed_ids.len(), 1);
        assert!(report.removed_traces.is_empty());
        assert!(matches!(
            desc.remove_element(&id),
            Err(ModelError::ElementNotFound(_))
        ));
    }

    #[test]
    fn write_section_modes() {
        let mut desc = ArchitectureDescription::new("Toy-RA").unwrap();
        let target = SectionTarget::General;
        desc.write_section(&target, "Acquisition Process", "initial", WriteMode::Create).unwrap();
        assert_eq!(desc.general_sections.len(), 1);
        assert!(matches!(
            desc.write_section(&target, "Acquisition Process", "again", WriteMode::Create),
            Err(ModelError::SectionExists(..))
        ));
        desc.write_section(&target, "Acquisition Process", " more", WriteMode::Append).unwrap();
        assert_eq!(desc.general_section("Acquisition Process").unwrap().content, "initial more");
        desc.write_section(&target, "Acquisition Process", "fresh", WriteMode::Replace).unwrap();
        assert_eq!(desc.general_section("Acquisition Process").unwrap().content, "fresh");
        assert!(matches!(
            desc.write_section(&target, "Instantiation Guidelines", "x", WriteMode::Replace),
            Err(ModelError::SectionNotFound(..))
        ));
        let missing = SectionTarget::Element(ElementId::from("e-9"));
        assert!(matches!(
            desc.write_section(&missing, "s", "x", WriteMode::Create),
            Err(ModelError::ElementNotFound(_))
        ));
    }

    #[test]
    fn add_trace_rejects_self_and_dangling() {
        let mut desc = ArchitectureDescription::new("Toy-RA").unwrap();
        let id = desc.add_element(registry(), "View", "Module View", None).unwrap();
        let self_trace = TraceEntry {
            source: id.to_string(),
            target: id.to_string(),
            relation: RelationKind::Covers,
            note: String::new(),
            changeset_id: IMPORTED_CHANGESET.into(),
        };
        assert!(matches!(desc.add_trace(self_trace), Err(ModelError::SelfTrace(_))));
        let dangling = TraceEntry {
            source: id.to_string(),
            target: "e-42".into(),
            relation: RelationKind::Covers,
            note: String::new(),
            changeset_id: IMPORTED_CHANGESET.into(),
        };
        assert!(matches!(desc.add_trace(dangling), Err(ModelError::DanglingRef(_))));
        let ok = TraceEntry {
            source: id.to_string(),
            target: "fera:3-11".into(),
            relation: RelationKind::Covers,
            note: String::new(),
            changeset_id: IMPORTED_CHANGESET.into(),
        };
        desc.add_trace(ok).unwrap();
        assert_eq!(desc.traceability.len(), 1);
    }

    #[test]
    fn round_trip_preserves_everything() {
        let mut desc = ArchitectureDescription::new("Toy-RA").unwrap();
        let vp = desc.add_element(registry(), "Viewpoint", "Crosscutting Viewpoint", None).unwrap();
        let view = desc.add_element(registry(), "View", "Variability View", Some(&vp)).unwrap();
        desc.set_attribute(&view, "model_kind", "feature model").unwrap();
        desc.write_section(&SectionTarget::General, "Introduction", "text", WriteMode::Create)
            .unwrap();
        let json = desc.to_canonical_json().unwrap();
        let back = ArchitectureDescription::from_json(&json).unwrap();
        assert_eq!(desc, back);
        assert_eq!(json, back.to_canonical_json().unwrap());
    }

    #[test]
    fn truncated_stream_is_a_parse_error() {
        let err = ArchitectureDescription::from_json("{\"name\": \"x\"").unwrap_err();
        assert!(matches!(err, ModelError::Parse { .. }));
    }

    #[test]
    fn duplicate_ids_fail_deserialization() {
        let doc = r#"{
            "name": "x", "version": 0, "next_id": 3,
            "elements": [
                {"id": "e-1", "kind": "View", "name": "a", "body": [], "children": [], "attributes": {}},
                {"id": "e-1", "kind": "View", "name": "b", "body": [], "children": [], "attributes": {}}
            ],
            "traceability": [], "general_sections": []
        }"#;
        assert!(ArchitectureDescription::from_json(doc).is_err());
    }

    #[test]
    fn ids_at_or_above_the_counter_fail_deserialization() {
        let doc = r#"{
            "name": "x", "version": 0, "next_id": 1,
            "elements": [
                {"id": "e-1", "kind": "View", "name": "a", "body": [], "children": [], "attributes": {}}
            ],
            "traceability": [], "general_sections": []
        }"#;
        assert!(ArchitectureDescription::from_json(doc).is_err());
    }
}
