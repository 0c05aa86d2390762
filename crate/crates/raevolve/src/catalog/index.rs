//! The guideline index: a flat, lossless view of the catalog for quick
//! lookup — element, guideline, applicable questions, and the rules of
//! each evolution task.

use serde::Serialize;

use super::{Catalog, GuidelineId, RuleId, TaskType};
use crate::fera::QuestionRef;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexRow {
    pub element: String,
    pub guideline: GuidelineId,
    pub questions: Vec<QuestionRef>,
    pub task: TaskType,
    pub rules: Vec<RuleId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogIndex {
    pub rows: Vec<IndexRow>,
}

impl Catalog {
    /// Build the index. Guidelines group under their element in first-seen
    /// catalog order; each guideline contributes one row per task, in the
    /// order addition, removal, modification.
    pub fn render_index(&self) -> CatalogIndex {
        let mut element_order: Vec<&str> = Vec::new();
        for guideline in self.guidelines() {
            if !element_order.contains(&guideline.element.as_str()) {
                element_order.push(&guideline.element);
            }
        }
        let mut rows = Vec::new();
        for element in element_order {
            for guideline in self.guidelines().filter(|g| g.element == element) {
                for task in TaskType::ALL {
                    rows.push(IndexRow {
                        element: element.to_string(),
                        guideline: guideline.id.clone(),
                        questions: guideline.applicable_questions.clone(),
                        task,
                        rules: guideline.tasks.get(task).to_vec(),
                    });
                }
            }
        }
        CatalogIndex { rows }
    }
}

impl CatalogIndex {
    /// Plain-text table, one line per task row. Element and guideline
    /// repeat only on their first row of a group, mirroring the usual
    /// printed form of such indexes.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:<18} {:<25} {:<22} {:<13} {}\n",
            "Element", "Guideline", "Questions", "Task", "Rules"
        ));
        let mut last_guideline = String::new();
        for row in &self.rows {
            let first_of_group = row.guideline.to_string() != last_guideline;
            let element = if first_of_group { row.element.as_str() } else { "" };
            let guideline = if first_of_group { row.guideline.to_string() } else { String::new() };
            let questions = if first_of_group {
                row.questions.iter().map(|q| q.to_string()).collect::<Vec<_>>().join("; ")
            } else {
                String::new()
            };
            let rules = if row.rules.is_empty() {
                "-".to_string()
            } else {
                row.rules.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("; ")
            };
            out.push_str(&format!(
                "{:<18} {:<25} {:<22} {:<13} {}\n",
                element,
                guideline,
                questions,
                row.task.to_string(),
                rules
            ));
            last_guideline = row.guideline.to_string();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;
    use crate::seed;

    #[test]
    fn row_count_is_three_per_guideline() {
        let catalog = &seed::catalog().catalog;
        let index = catalog.render_index();
        assert_eq!(index.rows.len(), catalog.guideline_count() * 3);
    }

    #[test]
    fn empty_catalog_renders_empty_index() {
        let catalog = Catalog::from_parts(Vec::new(), Vec::new()).unwrap();
        assert!(catalog.render_index().rows.is_empty());
    }

    #[test]
    fn instantiation_group_lists_published_addition_rules() {
        let catalog = &seed::catalog().catalog;
        let index = catalog.render_index();
        let row = index
            .rows
            .iter()
            .find(|r| r.guideline.to_string() == "D_Instantiation_2" && r.task == TaskType::Addition)
            .unwrap();
        let rules: Vec<String> = row.rules.iter().map(|r| r.to_string()).collect();
        assert_eq!(rules, vec!["R-ins-1", "R-ins-2", "R-ins-4"]);
        assert_eq!(row.element, "Instantiation");
    }

    #[test]
    fn index_is_deterministic_and_lossless() {
        let catalog = &seed::catalog().catalog;
        let a = catalog.render_index();
        let b = catalog.render_index();
        assert_eq!(a, b);
        // Lossless: every guideline's full task map is recoverable.
        for guideline in catalog.guidelines() {
            for task in TaskType::ALL {
                let row = a
                    .rows
                    .iter()
                    .find(|r| r.guideline == guideline.id && r.task == task)
                    .unwrap();
                assert_eq!(row.rules, guideline.tasks.get(task));
                assert_eq!(row.questions, guideline.applicable_questions);
                assert_eq!(row.element, guideline.element);
            }
        }
        // Elements group contiguously.
        let mut seen = Vec::new();
        for row in &a.rows {
            if seen.last() != Some(&row.element) {
                assert!(!seen.contains(&row.element), "element groups must be contiguous");
                seen.push(row.element.clone());
            }
        }
    }
}
