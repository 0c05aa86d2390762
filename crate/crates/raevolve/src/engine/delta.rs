//! Changeset deltas: the exact difference between a description before and
//! after a rule execution, replayable forwards and invertible for reverts.
//!
//! Deltas are computed by diffing the pre and post states. This leans on
//! the fact that no engine operation reorders surviving elements, traces,
//! or sections: elements and traces are appended or removed, sections are
//! appended or edited in place. Element and trace operations carry array
//! positions so an inverted delta restores the original layout exactly.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{ArchitectureDescription, DescElement, ElementId, Section, TraceEntry};

#[derive(Debug, Error)]
pub enum DeltaError {
    #[error("delta does not fit the description: {0}")]
    StateMismatch(String),
    #[error(transparent)]
    Model(#[from] crate::model::ModelError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DeltaOp {
    InsertElement { index: usize, element: DescElement },
    RemoveElement { index: usize, element: DescElement },
    ReplaceElement { before: DescElement, after: DescElement },
    InsertTrace { index: usize, entry: TraceEntry },
    RemoveTrace { index: usize, entry: TraceEntry },
    /// General-section write, keyed by name. `before: None` means the
    /// section is created (appended); `after: None` means it is removed
    /// (which only inverted deltas produce).
    SetGeneralSection { name: String, before: Option<String>, after: Option<String> },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Delta {
    pub ops: Vec<DeltaOp>,
}

impl Delta {
    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn elements_added(&self) -> Vec<&ElementId> {
        self.ops
            .iter()
            .filter_map(|op| match op {
                DeltaOp::InsertElement { element, .. } => Some(&element.id),
                _ => None,
            })
            .collect()
    }

    pub fn elements_removed(&self) -> Vec<&ElementId> {
        self.ops
            .iter()
            .filter_map(|op| match op {
                DeltaOp::RemoveElement { element, .. } => Some(&element.id),
                _ => None,
            })
            .collect()
    }

    pub fn elements_modified(&self) -> Vec<&ElementId> {
        self.ops
            .iter()
            .filter_map(|op| match op {
                DeltaOp::ReplaceElement { after, .. } => Some(&after.id),
                _ => None,
            })
            .collect()
    }

    pub fn sections_written(&self) -> Vec<&str> {
        self.ops
            .iter()
            .filter_map(|op| match op {
                DeltaOp::SetGeneralSection { name, .. } => Some(name.as_str()),
                _ => None,
            })
            .collect()
    }

    pub fn traces_added(&self) -> Vec<&TraceEntry> {
        self.ops
            .iter()
            .filter_map(|op| match op {
                DeltaOp::InsertTrace { entry, .. } => Some(entry),
                _ => None,
            })
            .collect()
    }

    pub fn traces_removed(&self) -> usize {
        self.ops.iter().filter(|op| matches!(op, DeltaOp::RemoveTrace { .. })).count()
    }
}

/// Compute the delta turning `pre` into `post`.
pub fn diff(pre: &ArchitectureDescription, post: &ArchitectureDescription) -> Delta {
    let mut ops = Vec::new();

    let pre_elements: Vec<&DescElement> = pre.elements().collect();
    let post_elements: Vec<&DescElement> = post.elements().collect();

    // Removals at pre positions, descending so each index is valid when
    // its op executes.
    let mut removals = Vec::new();
    for (index, element) in pre_elements.iter().enumerate() {
        if !post_elements.iter().any(|e| e.id == element.id) {
            removals.push(DeltaOp::RemoveElement { index, element: (*element).clone() });
        }
    }
    removals.reverse();
    ops.extend(removals);

    // Insertions at post positions, ascending.
    for (index, element) in post_elements.iter().enumerate() {
        if !pre_elements.iter().any(|e| e.id == element.id) {
            ops.push(DeltaOp::InsertElement { index, element: (*element).clone() });
        }
    }

    // In-place modifications, keyed by id.
    for element in &pre_elements {
        if let Some(after) = post_elements.iter().find(|e| e.id == element.id) {
            if element != after {
                ops.push(DeltaOp::ReplaceElement {
                    before: (*element).clone(),
                    after: (*after).clone(),
                });
            }
        }
    }

    // Traces: two-pointer walk; surviving entries keep their relative
    // order, so anything unmatched on the pre side was removed and the
    // post tail was appended.
    let mut removals = Vec::new();
    let mut j = 0;
    for (i, entry) in pre.traceability.iter().enumerate() {
        if post.traceability.get(j) == Some(entry) {
            j += 1;
        } else {
            removals.push(DeltaOp::RemoveTrace { index: i, entry: entry.clone() });
        }
    }
    removals.reverse();
    ops.extend(removals);
    for (index, entry) in post.traceability.iter().enumerate().skip(j) {
        ops.push(DeltaOp::InsertTrace { index, entry: entry.clone() });
    }

    // General sections, keyed by name.
    for section in &pre.general_sections {
        match post.general_section(&section.name) {
            Some(after) if after.content == section.content => {}
            Some(after) => ops.push(DeltaOp::SetGeneralSection {
                name: section.name.clone(),
                before: Some(section.content.clone()),
                after: Some(after.content.clone()),
            }),
            None => ops.push(DeltaOp::SetGeneralSection {
                name: section.name.clone(),
                before: Some(section.content.clone()),
                after: None,
            }),
        }
    }
    for section in &post.general_sections {
        if pre.general_section(&section.name).is_none() {
            ops.push(DeltaOp::SetGeneralSection {
                name: section.name.clone(),
                before: None,
                after: Some(section.content.clone()),
            });
        }
    }

    Delta { ops }
}

/// Apply a delta in place. Every op verifies the state it expects, so a
/// delta replayed against the wrong description fails instead of
/// corrupting it. The version counter is not touched here.
pub fn apply(desc: &mut ArchitectureDescription, delta: &Delta) -> Result<(), DeltaError> {
    for op in &delta.ops {
        match op {
            DeltaOp::InsertElement { index, element } => {
                desc.insert_element_at(*index, element.clone())?;
            }
            DeltaOp::RemoveElement { index, element } => {
                match desc.element_at(*index) {
                    Some(found) if found.id == element.id => {}
                    other => {
                        return Err(DeltaError::StateMismatch(format!(
                            "expected `{}` at element position {index}, found {}",
                            element.id,
                            other.map(|e| e.id.to_string()).unwrap_or_else(|| "nothing".into())
                        )))
                    }
                }
                desc.remove_element_at(*index);
            }
            DeltaOp::ReplaceElement { before, after } => {
                match desc.element(&before.id) {
                    Some(found) if found == before => {}
                    _ => {
                        return Err(DeltaError::StateMismatch(format!(
                            "element `{}` does not match the delta's pre-image",
                            before.id
                        )))
                    }
                }
                desc.replace_element(after.clone())?;
            }
            DeltaOp::InsertTrace { index, entry } => {
                if *index > desc.traceability.len() {
                    return Err(DeltaError::StateMismatch(format!(
                        "trace position {index} out of range"
                    )));
                }
                desc.traceability.insert(*index, entry.clone());
            }
            DeltaOp::RemoveTrace { index, entry } => {
                match desc.traceability.get(*index) {
                    Some(found) if found == entry => {}
                    _ => {
                        return Err(DeltaError::StateMismatch(format!(
                            "trace at position {index} does not match the delta's pre-image"
                        )))
                    }
                }
                desc.traceability.remove(*index);
            }
            DeltaOp::SetGeneralSection { name, before, after } => {
                let current = desc.general_section(name).map(|s| s.content.clone());
                if current != *before {
                    return Err(DeltaError::StateMismatch(format!(
                        "general section `{name}` does not match the delta's pre-image"
                    )));
                }
                match after {
                    Some(content) => {
                        if before.is_some() {
                            let section = desc
                                .general_sections
                                .iter_mut()
                                .find(|s| s.name == *name)
                                .expect("presence checked above");
                            section.content = content.clone();
                        } else {
                            desc.general_sections
                                .push(Section { name: name.clone(), content: content.clone() });
                        }
                    }
                    None => desc.general_sections.retain(|s| s.name != *name),
                }
            }
        }
    }
    Ok(())
}

/// The delta that undoes this one: ops reversed, each flipped.
pub fn invert(delta: &Delta) -> Delta {
    let ops = delta
        .ops
        .iter()
        .rev()
        .map(|op| match op {
            DeltaOp::InsertElement { index, element } => {
                DeltaOp::RemoveElement { index: *index, element: element.clone() }
            }
            DeltaOp::RemoveElement { index, element } => {
                DeltaOp::InsertElement { index: *index, element: element.clone() }
            }
            DeltaOp::ReplaceElement { before, after } => {
                DeltaOp::ReplaceElement { before: after.clone(), after: before.clone() }
            }
            DeltaOp::InsertTrace { index, entry } => {
                DeltaOp::RemoveTrace { index: *index, entry: entry.clone() }
            }
            DeltaOp::RemoveTrace { index, entry } => {
                DeltaOp::InsertTrace { index: *index, entry: entry.clone() }
            }
            DeltaOp::SetGeneralSection { name, before, after } => DeltaOp::SetGeneralSection {
                name: name.clone(),
                before: after.clone(),
                after: before.clone(),
            },
        })
        .collect();
    Delta { ops }
}
