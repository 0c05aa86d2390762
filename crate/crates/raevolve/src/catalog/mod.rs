//! Guideline catalog: identifiers, guidelines, evolution rules, loading,
//! validation, and the index.
//!
//! A guideline addresses one element of the conceptual model and carries
//! the advice texts plus a map from evolution task (addition, removal,
//! modification) to the rules executing it. Rules follow the
//! event/condition/action shape. The seed catalog ships the published
//! guidelines; everything is ordinary data files, so a deployment can add
//! its own entries next to them.

mod condition;
mod index;
mod validate;

pub use condition::{ConditionParseError, Predicate};
pub use index::{CatalogIndex, IndexRow};
pub use validate::{validate_catalog, CatalogIssue, IssueSeverity};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fera::{QuestionRef, QuestionRegistry};
use crate::model::{KindRegistry, RelationKind, WriteMode};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("parse error in {file}: {message}")]
    Parse { file: String, message: String },
    #[error("invalid identifier `{text}`: {reason}")]
    IdFormat { text: String, reason: String },
    #[error("duplicate catalog id `{0}`")]
    Duplicate(String),
    #[error("guideline {guideline} references unknown question {question}")]
    UnknownQuestion { guideline: String, question: String },
    #[error("guideline {guideline} references missing rule {rule}")]
    BrokenRuleRef { guideline: String, rule: String },
    #[error("unknown guideline `{0}`")]
    UnknownGuideline(String),
    #[error("catalog failed validation with {} violation(s); first: {}", .0.len(), .0.first().map(|i| i.to_string()).unwrap_or_default())]
    Validation(Vec<CatalogIssue>),
}

/// Guideline identifier, rendered `D_<Element>_<seq>`. The element token
/// keeps the underscores of multi-word element names
/// (`D_Information_Source_1`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GuidelineId {
    pub element_token: String,
    pub seq: u32,
}

impl GuidelineId {
    /// Element kind name: the id token with word separators removed
    /// (`Information_Source` → `InformationSource`).
    pub fn element_kind_name(&self) -> String {
        self.element_token.replace('_', "")
    }
}

impl fmt::Display for GuidelineId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D_{}_{}", self.element_token, self.seq)
    }
}

impl FromStr for GuidelineId {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fail = |reason: &str| CatalogError::IdFormat { text: s.to_string(), reason: reason.to_string() };
        let rest = s.strip_prefix("D_").ok_or_else(|| fail("expected `D_<Element>_<seq>`"))?;
        let (token, seq) = rest.rsplit_once('_').ok_or_else(|| fail("missing sequence number"))?;
        if token.is_empty() {
            return Err(fail("empty element token"));
        }
        for segment in token.split('_') {
            let mut chars = segment.chars();
            let first_ok = chars.next().map(|c| c.is_ascii_uppercase()).unwrap_or(false);
            if !first_ok || !segment.chars().all(|c| c.is_ascii_alphanumeric()) {
                return Err(fail("element token segments must be capitalized words"));
            }
        }
        if seq.starts_with('0') {
            return Err(fail("sequence number must not have leading zeros"));
        }
        let seq: u32 = seq.parse().map_err(|_| fail("sequence number must be a positive integer"))?;
        if seq == 0 {
            return Err(fail("sequence number must be positive"));
        }
        Ok(Self { element_token: token.to_string(), seq })
    }
}

impl Serialize for GuidelineId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GuidelineId {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Rule identifier, rendered `R-<acronym>-<seq>` with a lowercase acronym.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RuleId {
    pub acronym: String,
    pub seq: u32,
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R-{}-{}", self.acronym, self.seq)
    }
}

impl FromStr for RuleId {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fail = |reason: &str| CatalogError::IdFormat { text: s.to_string(), reason: reason.to_string() };
        let rest = s.strip_prefix("R-").ok_or_else(|| fail("expected `R-<acronym>-<seq>`"))?;
        let (acronym, seq) = rest.rsplit_once('-').ok_or_else(|| fail("missing sequence number"))?;
        if acronym.is_empty() || !acronym.chars().all(|c| c.is_ascii_lowercase()) {
            return Err(fail("acronym must be lowercase letters"));
        }
        if seq.starts_with('0') {
            return Err(fail("sequence number must not have leading zeros"));
        }
        let seq: u32 = seq.parse().map_err(|_| fail("sequence number must be a positive integer"))?;
        if seq == 0 {
            return Err(fail("sequence number must be positive"));
        }
        Ok(Self { acronym: acronym.to_string(), seq })
    }
}

impl Serialize for RuleId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RuleId {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TaskType {
    Addition,
    Removal,
    Modification,
}

impl TaskType {
    /// Canonical presentation order, used by the index and recommendations.
    pub const ALL: [TaskType; 3] = [TaskType::Addition, TaskType::Removal, TaskType::Modification];
}

impl fmt::Display for TaskType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TaskType::Addition => f.write_str("Addition"),
            TaskType::Removal => f.write_str("Removal"),
            TaskType::Modification => f.write_str("Modification"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Medium {
    Textual,
    Graphical,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Representation {
    pub medium: Medium,
    pub advice: String,
}

/// Which process step carries the evolution: architectural analysis is
/// needed when information sources are missing, synthesis performs the
/// evolution tasks themselves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HowToMake {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub needs_analysis_when: Option<String>,
    pub synthesis: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Artifact {
    ArchitecturalDescription,
    TraceabilityMatrix,
}

/// How much of the entry is backed by fully specified source material.
/// `Summarized` entries encode one-line rule descriptions as small action
/// lists; `IndexOnly` guidelines are seeded from the catalog index alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Fidelity {
    Full,
    Summarized,
    IndexOnly,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaskRules {
    #[serde(default)]
    pub addition: Vec<RuleId>,
    #[serde(default)]
    pub removal: Vec<RuleId>,
    #[serde(default)]
    pub modification: Vec<RuleId>,
}

impl TaskRules {
    pub fn get(&self, task: TaskType) -> &[RuleId] {
        match task {
            TaskType::Addition => &self.addition,
            TaskType::Removal => &self.removal,
            TaskType::Modification => &self.modification,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (TaskType, &[RuleId])> {
        TaskType::ALL.iter().map(move |t| (*t, self.get(*t)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Guideline {
    pub id: GuidelineId,
    pub element: String,
    /// Lowercase token naming this guideline's rule family; rules whose id
    /// carries a different acronym are references into another family.
    pub acronym: String,
    pub applicable_questions: Vec<QuestionRef>,
    pub what_to_do: String,
    #[serde(default)]
    pub how_to_represent: Vec<Representation>,
    pub how_to_make: HowToMake,
    pub tasks: TaskRules,
    pub artifacts: Vec<Artifact>,
    pub fidelity: Fidelity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Scope {
    /// The rule acts on an element as a whole.
    Element,
    /// The rule acts on a component of an element.
    Component,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleEvent {
    pub task: TaskType,
    pub element: String,
    pub scope: Scope,
}

impl fmt::Display for RuleEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.scope {
            Scope::Element => write!(f, "{} {} element", self.task, self.element),
            Scope::Component => write!(f, "{} component of {}", self.task, self.element),
        }
    }
}

/// A (kind, optional exact name) element query. Names may contain
/// placeholders resolved from rule inputs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementQuery {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl fmt::Display for ElementQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(name) => write!(f, "{} \"{}\"", self.kind, name),
            None => f.write_str(&self.kind),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SectionTargetSpec {
    General,
    Element(ElementQuery),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OnMissing {
    Create,
    Fail,
}

/// One step of a rule action.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ActionStep {
    CreateElement {
        kind: String,
        name: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        parent: Option<ElementQuery>,
        #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
        attributes: BTreeMap<String, String>,
    },
    /// Resolve an element, creating it when missing (or failing, for rules
    /// that require pre-existing structure).
    EnsureElement {
        kind: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        on_missing: OnMissing,
    },
    AttachChild {
        parent: ElementQuery,
        child: ElementQuery,
    },
    RemoveElement {
        query: ElementQuery,
    },
    WriteSection {
        target: SectionTargetSpec,
        section: String,
        mode: WriteMode,
        content: String,
    },
    /// Picks a model kind from a fixed option list. The choice is supplied
    /// through the named input binding, never interactively inside the
    /// engine.
    ChooseModelKind {
        prompt: String,
        options: Vec<String>,
        bind: String,
    },
    UpdateTraceability {
        source: String,
        target: String,
        relation: RelationKind,
        #[serde(default)]
        note: String,
    },
    Conditional {
        predicate: String,
        #[serde(default, rename = "then")]
        then_steps: Vec<ActionStep>,
        #[serde(default, rename = "else")]
        else_steps: Vec<ActionStep>,
    },
}

/// Declared input of a rule. Required inputs must be bound by the caller;
/// optional ones fall back to their default.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputSpec {
    pub name: String,
    #[serde(default)]
    pub required: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub default: Option<String>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub description: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvolutionRule {
    pub id: RuleId,
    /// One-line description of what the rule does.
    pub summary: String,
    pub event: RuleEvent,
    /// Condition predicate; the empty string is trivially true.
    #[serde(default)]
    pub condition: String,
    #[serde(default)]
    pub inputs: Vec<InputSpec>,
    pub action: Vec<ActionStep>,
    pub fidelity: Fidelity,
}

impl EvolutionRule {
    pub fn parsed_condition(&self) -> Result<Predicate, ConditionParseError> {
        Predicate::parse(&self.condition)
    }

    pub fn input(&self, name: &str) -> Option<&InputSpec> {
        self.inputs.iter().find(|i| i.name == name)
    }
}

/// Loaded, resolved catalog. Guideline order follows load order, which the
/// seed data arranges to match the published material.
#[derive(Debug, Clone, Default)]
pub struct Catalog {
    guidelines: IndexMap<String, Guideline>,
    rules: IndexMap<String, EvolutionRule>,
}

/// A catalog together with the non-fatal findings from load-time
/// validation.
#[derive(Debug, Clone)]
pub struct LoadedCatalog {
    pub catalog: Catalog,
    pub warnings: Vec<CatalogIssue>,
}

impl Catalog {
    /// Assemble a catalog from already-parsed parts. Only id uniqueness is
    /// enforced here; run `validate_catalog` for the full invariant sweep.
    pub fn from_parts(
        guidelines: Vec<Guideline>,
        rules: Vec<EvolutionRule>,
    ) -> Result<Self, CatalogError> {
        let mut catalog = Catalog::default();
        for rule in rules {
            let key = rule.id.to_string();
            if catalog.rules.insert(key.clone(), rule).is_some() {
                return Err(CatalogError::Duplicate(key));
            }
        }
        for guideline in guidelines {
            let key = guideline.id.to_string();
            if catalog.guidelines.insert(key.clone(), guideline).is_some() {
                return Err(CatalogError::Duplicate(key));
            }
        }
        Ok(catalog)
    }

    /// Parse guideline and rule documents (as `(file name, content)` pairs),
    /// resolve cross-references, and validate. Violations fail the load;
    /// warnings are returned for the caller to surface.
    pub fn load(
        guideline_docs: &[(String, String)],
        rule_docs: &[(String, String)],
        questions: &QuestionRegistry,
        kinds: &KindRegistry,
    ) -> Result<LoadedCatalog, CatalogError> {
        let mut rules = Vec::new();
        for (file, content) in rule_docs {
            let rule: EvolutionRule = serde_json::from_str(content)
                .map_err(|e| CatalogError::Parse { file: file.clone(), message: e.to_string() })?;
            rules.push(rule);
        }
        let mut guidelines = Vec::new();
        for (file, content) in guideline_docs {
            let guideline: Guideline = serde_json::from_str(content)
                .map_err(|e| CatalogError::Parse { file: file.clone(), message: e.to_string() })?;
            guidelines.push(guideline);
        }
        let catalog = Catalog::from_parts(guidelines, rules)?;

        // Hard reference errors first, so callers get precise failures for
        // the common mistakes.
        for guideline in catalog.guidelines.values() {
            for q in &guideline.applicable_questions {
                if !questions.contains(*q) {
                    return Err(CatalogError::UnknownQuestion {
                        guideline: guideline.id.to_string(),
                        question: q.to_string(),
                    });
                }
            }
            for (_, rule_ids) in guideline.tasks.iter() {
                for rule_id in rule_ids {
                    if !catalog.rules.contains_key(&rule_id.to_string()) {
                        return Err(CatalogError::BrokenRuleRef {
                            guideline: guideline.id.to_string(),
                            rule: rule_id.to_string(),
                        });
                    }
                }
            }
        }

        let issues = validate_catalog(&catalog, questions, kinds);
        let (violations, warnings): (Vec<_>, Vec<_>) =
            issues.into_iter().partition(|i| i.severity == IssueSeverity::Violation);
        if !violations.is_empty() {
            return Err(CatalogError::Validation(violations));
        }
        Ok(LoadedCatalog { catalog, warnings })
    }

    pub fn guideline(&self, id: &GuidelineId) -> Option<&Guideline> {
        self.guidelines.get(&id.to_string())
    }

    pub fn guideline_by_name(&self, id: &str) -> Option<&Guideline> {
        self.guidelines.get(id)
    }

    pub fn rule(&self, id: &RuleId) -> Option<&EvolutionRule> {
        self.rules.get(&id.to_string())
    }

    pub fn rule_by_name(&self, id: &str) -> Option<&EvolutionRule> {
        self.rules.get(id)
    }

    pub fn guidelines(&self) -> impl Iterator<Item = &Guideline> {
        self.guidelines.values()
    }

    pub fn rules(&self) -> impl Iterator<Item = &EvolutionRule> {
        self.rules.values()
    }

    pub fn guideline_count(&self) -> usize {
        self.guidelines.len()
    }

    pub fn rule_count(&self) -> usize {
        self.rules.len()
    }

    /// All guidelines whose applicable questions contain `q`, in catalog
    /// order. An unknown question simply matches nothing.
    pub fn guidelines_for_question(&self, q: QuestionRef) -> Vec<&Guideline> {
        self.guidelines
            .values()
            .filter(|g| g.applicable_questions.contains(&q))
            .collect()
    }

    /// Resolved rules of one guideline under one task. Empty cells are
    /// legitimate — not every guideline covers every task.
    pub fn rules_for(
        &self,
        id: &GuidelineId,
        task: TaskType,
    ) -> Result<Vec<&EvolutionRule>, CatalogError> {
        let guideline = self
            .guideline(id)
            .ok_or_else(|| CatalogError::UnknownGuideline(id.to_string()))?;
        Ok(guideline
            .tasks
            .get(task)
            .iter()
            .map(|rid| {
                self.rule(rid)
                    .expect("rule references resolved at load")
            })
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed;

    #[test]
    fn guideline_id_format() {
        let id: GuidelineId = "D_Variability_1".parse().unwrap();
        assert_eq!(id.element_token, "Variability");
        assert_eq!(id.seq, 1);
        assert_eq!(id.to_string(), "D_Variability_1");
        let id: GuidelineId = "D_Information_Source_1".parse().unwrap();
        assert_eq!(id.element_token, "Information_Source");
        assert_eq!(id.element_kind_name(), "InformationSource");

        for bad in ["DVar1", "D_var_1", "D_Variability_0", "D_Variability_", "D_Variability_01", "X_Variability_1"] {
            assert!(bad.parse::<GuidelineId>().is_err(), "{bad} should fail");
        }
    }

    #[test]
    fn rule_id_format() {
        let id: RuleId = "R-var-1".parse().unwrap();
        assert_eq!((id.acronym.as_str(), id.seq), ("var", 1));
        assert_eq!(id.to_string(), "R-var-1");
        for bad in ["Rvar1", "R-VAR-1", "R-var-0", "R-var-", "R--1", "R-var-01"] {
            assert!(bad.parse::<RuleId>().is_err(), "{bad} should fail");
        }
    }

    #[test]
    fn seed_catalog_loads_with_expected_shape() {
        let loaded = seed::catalog();
        let catalog = &loaded.catalog;
        // Six fully published guidelines plus three seeded from the index.
        assert_eq!(catalog.guideline_count(), 9);
        for id in [
            "D_Variability_1",
            "D_Acquisition_1",
            "D_Quality_4",
            "D_Technical_Solution_2",
            "D_Domain_Data_4",
            "D_Instantiation_2",
        ] {
            let g = catalog.guideline_by_name(id).unwrap();
            assert_ne!(g.fidelity, Fidelity::IndexOnly, "{id} has a published body");
        }
        for id in ["D_Information_Source_1", "D_Instantiation_1", "D_Instantiation_3"] {
            let g = catalog.guideline_by_name(id).unwrap();
            assert_eq!(g.fidelity, Fidelity::IndexOnly, "{id} is index-seeded");
        }
        assert!(catalog.rule_count() >= 15);
        assert_eq!(catalog.rule_count(), 22);
        // The cross-family references are warnings, not violations.
        assert!(!loaded.warnings.is_empty());
    }

    #[test]
    fn guidelines_for_question_matches_published_pairs() {
        let catalog = &seed::catalog().catalog;
        let names = |q: &str| -> Vec<String> {
            catalog
                .guidelines_for_question(q.parse().unwrap())
                .iter()
                .map(|g| g.id.to_string())
                .collect()
        };
        assert_eq!(names("2-3"), vec!["D_Information_Source_1"]);
        assert_eq!(
            names("2-25"),
            vec![
                "D_Variability_1",
                "D_Acquisition_1",
                "D_Quality_4",
                "D_Technical_Solution_2",
                "D_Domain_Data_4"
            ]
        );
        assert_eq!(names("3-13"), vec!["D_Instantiation_2"]);
        assert!(names("1-15").is_empty());
    }

    #[test]
    fn rules_for_published_cells() {
        let catalog = &seed::catalog().catalog;
        let var: GuidelineId = "D_Variability_1".parse().unwrap();
        let removal: Vec<String> = catalog
            .rules_for(&var, TaskType::Removal)
            .unwrap()
            .iter()
            .map(|r| r.id.to_string())
            .collect();
        assert_eq!(removal, vec!["R-var-2"]);

        let fi: GuidelineId = "D_Information_Source_1".parse().unwrap();
        let addition: Vec<String> = catalog
            .rules_for(&fi, TaskType::Addition)
            .unwrap()
            .iter()
            .map(|r| r.id.to_string())
            .collect();
        assert_eq!(addition, vec!["R-fi-1", "R-fi-2"]);

        let ins2: GuidelineId = "D_Instantiation_2".parse().unwrap();
        assert!(catalog.rules_for(&ins2, TaskType::Removal).unwrap().is_empty());

        let missing: GuidelineId = "D_Evolution_9".parse().unwrap();
        assert!(matches!(
            catalog.rules_for(&missing, TaskType::Addition),
            Err(CatalogError::UnknownGuideline(_))
        ));
    }

    #[test]
    fn broken_rule_reference_fails_load() {
        let questions = seed::question_registry();
        let kinds = seed::kind_registry();
        let guideline = r#"{
            "id": "D_Variability_1",
            "element": "Variability",
            "acronym": "var",
            "applicable_questions": ["3-11"],
            "what_to_do": "x",
            "how_to_make": {"synthesis": true},
            "tasks": {"addition": ["R-zzz-9"]},
            "artifacts": ["ArchitecturalDescription"],
            "fidelity": "full"
        }"#;
        let err = Catalog::load(
            &[("g.json".into(), guideline.into())],
            &[],
            questions,
            kinds,
        )
        .unwrap_err();
        assert!(matches!(err, CatalogError::BrokenRuleRef { .. }));
    }

    #[test]
    fn bad_id_format_fails_parse() {
        let questions = seed::question_registry();
        let kinds = seed::kind_registry();
        let guideline = r#"{
            "id": "DVar1",
            "element": "Variability",
            "acronym": "var",
            "applicable_questions": ["3-11"],
            "what_to_do": "x",
            "how_to_make": {"synthesis": true},
            "tasks": {},
            "artifacts": [],
            "fidelity": "full"
        }"#;
        let err = Catalog::load(
            &[("g.json".into(), guideline.into())],
            &[],
            questions,
            kinds,
        )
        .unwrap_err();
        assert!(matches!(err, CatalogError::Parse { .. }));
    }

    #[test]
    fn unknown_question_fails_load() {
        let questions = seed::question_registry();
        let kinds = seed::kind_registry();
        let guideline = r#"{
            "id": "D_Variability_7",
            "element": "Variability",
            "acronym": "var",
            "applicable_questions": ["1-77"],
            "what_to_do": "x",
            "how_to_make": {"synthesis": true},
            "tasks": {},
            "artifacts": [],
            "fidelity": "full"
        }"#;
        let err = Catalog::load(
            &[("g.json".into(), guideline.into())],
            &[],
            questions,
            kinds,
        )
        .unwrap_err();
        assert!(matches!(err, CatalogError::UnknownQuestion { .. }));
    }
}
