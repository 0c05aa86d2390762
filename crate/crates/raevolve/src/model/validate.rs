//! Structural validation of a description.
//!
//! Violations are data, not errors: the checks report everything they find
//! and leave the decision to the caller. A clean description produces an
//! empty list.

use std::collections::{BTreeMap, BTreeSet};

use super::{ArchitectureDescription, ElementId, KindRegistry};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    DanglingChild,
    ChildCycle,
    ViewInMultipleViewpoints,
    DanglingTraceRef,
    SelfTrace,
    MissingChangesetId,
    UnknownKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    /// Element id or `traceability[i]` locator.
    pub subject: String,
    pub detail: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.subject, self.detail)
    }
}

impl ArchitectureDescription {
    /// Check the structural invariants: child references resolve, the
    /// parent-child graph is acyclic, no view sits under more than one
    /// viewpoint, and traceability entries are well-formed.
    pub fn validate(&self) -> Vec<Violation> {
        let mut violations = Vec::new();

        for element in self.elements() {
            for child in &element.children {
                if self.element(child).is_none() {
                    violations.push(Violation {
                        kind: ViolationKind::DanglingChild,
                        subject: element.id.to_string(),
                        detail: format!("child `{child}` does not resolve"),
                    });
                }
            }
        }

        for id in self.cycle_members() {
            violations.push(Violation {
                kind: ViolationKind::ChildCycle,
                subject: id.to_string(),
                detail: "element participates in a parent-child cycle".to_string(),
            });
        }

        // Count viewpoint parents per view.
        let mut viewpoint_parents: BTreeMap<&ElementId, usize> = BTreeMap::new();
        for element in self.elements() {
            if element.kind == "Viewpoint" {
                for child in &element.children {
                    if self.element(child).map(|c| c.kind == "View").unwrap_or(false) {
                        *viewpoint_parents.entry(child).or_insert(0) += 1;
                    }
                }
            }
        }
        for (view, count) in viewpoint_parents {
            if count > 1 {
                violations.push(Violation {
                    kind: ViolationKind::ViewInMultipleViewpoints,
                    subject: view.to_string(),
                    detail: format!("view is attached to {count} viewpoints"),
                });
            }
        }

        for (i, entry) in self.traceability.iter().enumerate() {
            let subject = format!("traceability[{i}]");
            if entry.source == entry.target {
                violations.push(Violation {
                    kind: ViolationKind::SelfTrace,
                    subject: subject.clone(),
                    detail: format!("source and target are both `{}`", entry.source),
                });
            }
            for side in [&entry.source, &entry.target] {
                if ElementId::looks_like_id(side)
                    && self.element(&ElementId(side.clone())).is_none()
                {
                    violations.push(Violation {
                        kind: ViolationKind::DanglingTraceRef,
                        subject: subject.clone(),
                        detail: format!("reference `{side}` does not resolve"),
                    });
                }
            }
            if entry.changeset_id.is_empty() {
                violations.push(Violation {
                    kind: ViolationKind::MissingChangesetId,
                    subject,
                    detail: "entry has no changeset provenance".to_string(),
                });
            }
        }

        violations
    }

    /// `validate` plus a kind check against the registry. Used where the
    /// registry is in scope, e.g. when a workspace loads a description.
    pub fn validate_with_registry(&self, registry: &KindRegistry) -> Vec<Violation> {
        let mut violations = self.validate();
        for element in self.elements() {
            if !registry.contains(&element.kind) {
                violations.push(Violation {
                    kind: ViolationKind::UnknownKind,
                    subject: element.id.to_string(),
                    detail: format!("kind `{}` is not registered", element.kind),
                });
            }
        }
        violations
    }

    /// Ids of elements on at least one cycle of the children graph.
    fn cycle_members(&self) -> Vec<ElementId> {
        // Iteratively strip nodes with no unresolved children edges; what
        // survives is exactly the set of nodes on or reaching into cycles.
        // Kahn-style peeling on the reversed edges keeps it simple.
        let mut out_degree: BTreeMap<&ElementId, usize> = BTreeMap::new();
        let mut reverse: BTreeMap<&ElementId, Vec<&ElementId>> = BTreeMap::new();
        for element in self.elements() {
            let resolved: Vec<&ElementId> =
                element.children.iter().filter(|c| self.element(c).is_some()).collect();
            out_degree.insert(&element.id, resolved.len());
            for child in resolved {
                reverse.entry(child).or_default().push(&element.id);
            }
        }
        let mut queue: Vec<&ElementId> =
            out_degree.iter().filter(|(_, d)| **d == 0).map(|(id, _)| *id).collect();
        let mut done: BTreeSet<&ElementId> = BTreeSet::new();
        while let Some(id) = queue.pop() {
            if !done.insert(id) {
                continue;
            }
            if let Some(parents) = reverse.get(id) {
                for parent in parents {
                    let d = out_degree.get_mut(parent).expect("degree tracked");
                    *d -= 1;
                    if *d == 0 {
                        queue.push(parent);
                    }
                }
            }
        }
        self.elements()
            .map(|e| &e.id)
            .filter(|id| !done.contains(id))
            .cloned()
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{RelationKind, TraceEntry, IMPORTED_CHANGESET};
    use crate::seed;

    #[test]
    fn empty_description_is_clean() {
        let desc = ArchitectureDescription::new("Toy-RA").unwrap();
        assert!(desc.validate().is_empty());
    }

    #[test]
    fn view_under_two_viewpoints_is_flagged() {
        let reg = seed::kind_registry();
        let mut desc = ArchitectureDescription::new("Toy-RA").unwrap();
        let vp1 = desc.add_element(reg, "Viewpoint", "A", None).unwrap();
        let vp2 = desc.add_element(reg, "Viewpoint", "B", None).unwrap();
        let view = desc.add_element(reg, "View", "V", Some(&vp1)).unwrap();
        desc.attach_child(&vp2, &view).unwrap();
        let violations = desc.validate();
        assert_eq!(violations.len(), 1);
        assert_eq!(violations[0].kind, ViolationKind::ViewInMultipleViewpoints);
        assert_eq!(violations[0].subject, view.to_string());
    }

    #[test]
    fn dangling_trace_target_is_flagged() {
        let mut desc = ArchitectureDescription::new("Toy-RA").unwrap();
        desc.traceability.push(TraceEntry {
            source: "fera:3-11".into(),
            target: "e-77".into(),
            relation: RelationKind::Covers,
            note: String::new(),
            changeset_id: IMPORTED_CHANGESET.into(),
        });
        let violations = desc.validate();
        assert_eq!(violations.len(), 1);
        assert_eq!(violations[0].kind, ViolationKind::DanglingTraceRef);
    }

    #[test]
    fn manufactured_cycle_is_flagged() {
        // attach_child refuses cycles, so load a forged document instead.
        let doc = r#"{
            "name": "x", "version": 0, "next_id": 3,
            "elements": [
                {"id": "e-1", "kind": "Module", "name": "a", "body": [], "children": ["e-2"], "attributes": {}},
                {"id": "e-2", "kind": "Module", "name": "b", "body": [], "children": ["e-1"], "attributes": {}}
            ],
            "traceability": [], "general_sections": []
        }"#;
        let desc = ArchitectureDescription::from_json(doc).unwrap();
        let violations = desc.validate();
        assert_eq!(
            violations.iter().filter(|v| v.kind == ViolationKind::ChildCycle).count(),
            2
        );
    }

    #[test]
    fn unknown_kind_is_flagged_with_registry() {
        let reg = seed::kind_registry();
        let doc = r#"{
            "name": "x", "version": 0, "next_id": 2,
            "elements": [
                {"id": "e-1", "kind": "NotAKind", "name": "a", "body": [], "children": [], "attributes": {}}
            ],
            "traceability": [], "general_sections": []
        }"#;
        let desc = ArchitectureDescription::from_json(doc).unwrap();
        assert!(desc.validate().is_empty());
        let violations = desc.validate_with_registry(reg);
        assert_eq!(violations.len(), 1);
        assert_eq!(violations[0].kind, ViolationKind::UnknownKind);
    }
}
