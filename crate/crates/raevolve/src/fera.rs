//! FERA question registry, assessment ingestion, and deficiency detection.
//!
//! The checklist has four parts and 118 questions in total, answered by
//! multiple stakeholder roles. The seed registry carries only the question
//! identifiers that published material pins down — it never invents
//! question wording, so most entries have no text. Each question maps to a
//! category of the conceptual model; a handful of cross-cutting questions
//! carry secondary categories as well.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::KindRegistry;

#[derive(Debug, Error)]
pub enum FeraError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid question reference `{0}`: expected `part-number` with part 1..4")]
    BadQuestionRef(String),
    #[error("question `{0}` maps to unknown category `{1}`")]
    UnknownCategory(QuestionRef, String),
    #[error("duplicate question reference `{0}`")]
    DuplicateRef(QuestionRef),
    #[error("unknown question `{0}`")]
    UnknownQuestion(QuestionRef),
    #[error("unknown stakeholder role `{0}`")]
    UnknownRole(String),
}

fn parse_err(err: serde_json::Error) -> FeraError {
    FeraError::Parse { line: err.line(), column: err.column(), message: err.to_string() }
}

/// A checklist question identifier in `part-number` form, e.g. `3-11`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuestionRef {
    pub part: u8,
    pub number: u32,
}

impl QuestionRef {
    pub fn new(part: u8, number: u32) -> Result<Self, FeraError> {
        if !(1..=4).contains(&part) || number == 0 {
            return Err(FeraError::BadQuestionRef(format!("{part}-{number}")));
        }
        Ok(Self { part, number })
    }
}

impl fmt::Display for QuestionRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.part, self.number)
    }
}

impl FromStr for QuestionRef {
    type Err = FeraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FeraError::BadQuestionRef(s.to_string());
        let (part, number) = s.split_once('-').ok_or_else(bad)?;
        let part: u8 = part.parse().map_err(|_| bad())?;
        let number: u32 = number.parse().map_err(|_| bad())?;
        QuestionRef::new(part, number).map_err(|_| bad())
    }
}

impl Serialize for QuestionRef {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for QuestionRef {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Registry entry for one question. Text is optional; unpublished wording
/// stays absent rather than being guessed.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuestionInfo {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
    pub category: String,
    /// Further categories for cross-cutting questions that several
    /// guidelines of different elements apply to.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub secondary: Vec<String>,
    /// Provenance remark, e.g. that the category was inferred from the
    /// guidelines that cite the question.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct QuestionsDoc {
    /// Size of the full checklist; the seeded entries are a subset.
    declared_total: u32,
    roles: Vec<String>,
    questions: Vec<QuestionEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct QuestionEntry {
    #[serde(rename = "ref")]
    reference: QuestionRef,
    #[serde(flatten)]
    info: QuestionInfo,
}

/// Validated question registry plus the stakeholder role vocabulary.
#[derive(Debug, Clone)]
pub struct QuestionRegistry {
    declared_total: u32,
    roles: Vec<String>,
    entries: IndexMap<QuestionRef, QuestionInfo>,
}

impl QuestionRegistry {
    /// Parse and validate a `questions.json` document. Every category must
    /// be a registered element kind.
    pub fn from_json(doc: &str, kinds: &KindRegistry) -> Result<Self, FeraError> {
        let parsed: QuestionsDoc = serde_json::from_str(doc).map_err(parse_err)?;
        let mut entries = IndexMap::new();
        for entry in parsed.questions {
            for category in std::iter::once(&entry.info.category).chain(&entry.info.secondary) {
                if !kinds.contains(category) {
                    return Err(FeraError::UnknownCategory(entry.reference, category.clone()));
                }
            }
            if entries.insert(entry.reference, entry.info).is_some() {
                return Err(FeraError::DuplicateRef(entry.reference));
            }
        }
        Ok(Self { declared_total: parsed.declared_total, roles: parsed.roles, entries })
    }

    pub fn declared_total(&self) -> u32 {
        self.declared_total
    }

    pub fn roles(&self) -> &[String] {
        &self.roles
    }

    pub fn is_role(&self, role: &str) -> bool {
        self.roles.iter().any(|r| r == role)
    }

    pub fn contains(&self, q: QuestionRef) -> bool {
        self.entries.contains_key(&q)
    }

    pub fn get(&self, q: QuestionRef) -> Option<&QuestionInfo> {
        self.entries.get(&q)
    }

    pub fn entries(&self) -> impl Iterator<Item = (QuestionRef, &QuestionInfo)> {
        self.entries.iter().map(|(q, info)| (*q, info))
    }

    /// Primary category of a question.
    pub fn category_of(&self, q: QuestionRef) -> Result<&str, FeraError> {
        self.entries
            .get(&q)
            .map(|info| info.category.as_str())
            .ok_or(FeraError::UnknownQuestion(q))
    }

    /// Primary plus secondary categories.
    pub fn categories_of(&self, q: QuestionRef) -> Result<Vec<&str>, FeraError> {
        let info = self.entries.get(&q).ok_or(FeraError::UnknownQuestion(q))?;
        let mut out = vec![info.category.as_str()];
        out.extend(info.secondary.iter().map(|s| s.as_str()));
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AnswerValue {
    Yes,
    No,
    Partial,
    NotApplicable,
}

impl AnswerValue {
    fn is_negative(self) -> bool {
        matches!(self, AnswerValue::No | AnswerValue::Partial)
    }

    fn is_counted(self) -> bool {
        self != AnswerValue::NotApplicable
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssessmentAnswer {
    pub question: QuestionRef,
    pub role: String,
    pub answer: AnswerValue,
    #[serde(default)]
    pub comments: String,
}

/// Per-architecture answers, possibly with repeated (question, role) pairs
/// from re-assessment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeraAssessment {
    pub architecture: String,
    pub answers: Vec<AssessmentAnswer>,
}

impl FeraAssessment {
    /// Parse an `assessment.json` document and validate every answer
    /// against the question registry and role vocabulary.
    pub fn from_json(doc: &str, registry: &QuestionRegistry) -> Result<Self, FeraError> {
        let assessment: FeraAssessment = serde_json::from_str(doc).map_err(parse_err)?;
        for answer in &assessment.answers {
            if !registry.contains(answer.question) {
                return Err(FeraError::UnknownQuestion(answer.question));
            }
            if !registry.is_role(&answer.role) {
                return Err(FeraError::UnknownRole(answer.role.clone()));
            }
        }
        Ok(assessment)
    }

    /// All (role, comments) pairs recorded for a question, in document
    /// order, skipping empty comments.
    pub fn comments_for(&self, q: QuestionRef) -> Vec<(String, String)> {
        self.answers
            .iter()
            .filter(|a| a.question == q && !a.comments.is_empty())
            .map(|a| (a.role.clone(), a.comments.clone()))
            .collect()
    }
}

/// How multi-stakeholder answers aggregate into deficiencies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeficiencyPolicy {
    /// Any negative answer flags the question.
    AnyNegative,
    /// Negative answers must reach at least half of the counted answers;
    /// an exact tie still flags the question, at `Partial` severity, so
    /// disagreement is surfaced rather than hidden.
    Majority,
    /// Only the latest answer per (question, role) pair counts, then
    /// any-negative semantics apply.
    Latest,
}

impl FromStr for DeficiencyPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "any-negative" => Ok(DeficiencyPolicy::AnyNegative),
            "majority" => Ok(DeficiencyPolicy::Majority),
            "latest" => Ok(DeficiencyPolicy::Latest),
            other => Err(format!(
                "unknown policy `{other}` (expected any-negative, majority, or latest)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Severity {
    Negative,
    Partial,
}

/// One question failing under the chosen policy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Deficiency {
    pub question: QuestionRef,
    pub category: String,
    pub severity: Severity,
    /// The negative answers behind the finding: (role, comments) pairs.
    pub evidence: Vec<(String, String)>,
}

/// Detect deficiencies in an assessment. Results are ordered by
/// (part, number). `NotApplicable` answers never count.
pub fn deficiencies(
    assessment: &FeraAssessment,
    registry: &QuestionRegistry,
    policy: DeficiencyPolicy,
) -> Vec<Deficiency> {
    let mut per_question: BTreeMap<QuestionRef, Vec<&AssessmentAnswer>> = BTreeMap::new();
    for answer in &assessment.answers {
        per_question.entry(answer.question).or_default().push(answer);
    }

    let mut out = Vec::new();
    for (question, answers) in per_question {
        let counted: Vec<&AssessmentAnswer> = match policy {
            DeficiencyPolicy::Latest => {
                let mut latest: IndexMap<&str, &AssessmentAnswer> = IndexMap::new();
                for answer in &answers {
                    latest.insert(answer.role.as_str(), answer);
                }
                latest.into_values().filter(|a| a.answer.is_counted()).collect()
            }
            _ => answers.iter().filter(|a| a.answer.is_counted()).copied().collect(),
        };
        if counted.is_empty() {
            continue;
        }
        let negatives: Vec<&AssessmentAnswer> =
            counted.iter().filter(|a| a.answer.is_negative()).copied().collect();
        if negatives.is_empty() {
            continue;
        }
        let positives = counted.len() - negatives.len();
        let has_no = negatives.iter().any(|a| a.answer == AnswerValue::No);
        let severity = match policy {
            DeficiencyPolicy::AnyNegative | DeficiencyPolicy::Latest => {
                if has_no {
                    Severity::Negative
                } else {
                    Severity::Partial
                }
            }
            DeficiencyPolicy::Majority => {
                if negatives.len() < positives {
                    continue;
                }
                if negatives.len() == positives {
                    // Tie: flag, but only at Partial severity.
                    Severity::Partial
                } else if has_no {
                    Severity::Negative
                } else {
                    Severity::Partial
                }
            }
        };
        let category = registry
            .category_of(question)
            .expect("assessment validated against registry")
            .to_string();
        out.push(Deficiency {
            question,
            category,
            severity,
            evidence: negatives.iter().map(|a| (a.role.clone(), a.comments.clone())).collect(),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed;

    fn answer(q: &str, role: &str, value: AnswerValue, comments: &str) -> AssessmentAnswer {
        AssessmentAnswer {
            question: q.parse().unwrap(),
            role: role.into(),
            answer: value,
            comments: comments.into(),
        }
    }

    fn assessment(answers: Vec<AssessmentAnswer>) -> FeraAssessment {
        FeraAssessment { architecture: "Toy-RA".into(), answers }
    }

    #[test]
    fn question_ref_parsing() {
        let q: QuestionRef = "3-11".parse().unwrap();
        assert_eq!((q.part, q.number), (3, 11));
        assert_eq!(q.to_string(), "3-11");
        assert!("5-1".parse::<QuestionRef>().is_err());
        assert!("0-0".parse::<QuestionRef>().is_err());
        assert!("3-0".parse::<QuestionRef>().is_err());
        assert!("311".parse::<QuestionRef>().is_err());
    }

    #[test]
    fn seed_registry_known_mappings() {
        let reg = seed::question_registry();
        assert_eq!(reg.category_of("1-15".parse().unwrap()).unwrap(), "Viewpoint");
        let info = reg.get("2-35".parse().unwrap()).unwrap();
        assert_eq!(info.category, "DomainData");
        assert!(info.text.as_deref().unwrap().contains("conformance with the requirements document"));
        assert_eq!(reg.category_of("3-11".parse().unwrap()).unwrap(), "Variability");
        assert!(matches!(
            reg.category_of("1-99".parse().unwrap()),
            Err(FeraError::UnknownQuestion(_))
        ));
        assert_eq!(reg.declared_total(), 118);
        assert_eq!(reg.roles().len(), 7);
    }

    #[test]
    fn registry_rejects_out_of_range_part() {
        let kinds = seed::kind_registry();
        let doc = r#"{
            "declared_total": 118,
            "roles": ["tester"],
            "questions": [{"ref": "5-1", "category": "Viewpoint"}]
        }"#;
        assert!(matches!(
            QuestionRegistry::from_json(doc, kinds),
            Err(FeraError::Parse { .. })
        ));
    }

    #[test]
    fn registry_rejects_unknown_category_and_duplicates() {
        let kinds = seed::kind_registry();
        let unknown = r#"{
            "declared_total": 118,
            "roles": [],
            "questions": [{"ref": "1-1", "category": "Nope"}]
        }"#;
        assert!(matches!(
            QuestionRegistry::from_json(unknown, kinds),
            Err(FeraError::UnknownCategory(..))
        ));
        let duplicate = r#"{
            "declared_total": 118,
            "roles": [],
            "questions": [
                {"ref": "1-1", "category": "Viewpoint"},
                {"ref": "1-1", "category": "Viewpoint"}
            ]
        }"#;
        assert!(matches!(
            QuestionRegistry::from_json(duplicate, kinds),
            Err(FeraError::DuplicateRef(_))
        ));
    }

    #[test]
    fn assessment_validation() {
        let reg = seed::question_registry();
        let ok = r#"{
            "architecture": "Toy-RA",
            "answers": [{"question": "3-11", "role": "software architect", "answer": "No", "comments": "variability not documented"}]
        }"#;
        let parsed = FeraAssessment::from_json(ok, reg).unwrap();
        assert_eq!(parsed.answers.len(), 1);
        // Ingest is idempotent: parsing the same document twice gives equal values.
        assert_eq!(parsed, FeraAssessment::from_json(ok, reg).unwrap());

        let unknown_q = r#"{
            "architecture": "Toy-RA",
            "answers": [{"question": "1-99", "role": "tester", "answer": "No", "comments": ""}]
        }"#;
        assert!(matches!(
            FeraAssessment::from_json(unknown_q, reg),
            Err(FeraError::UnknownQuestion(_))
        ));

        let unknown_role = r#"{
            "architecture": "Toy-RA",
            "answers": [{"question": "3-11", "role": "astronaut", "answer": "No", "comments": ""}]
        }"#;
        assert!(matches!(
            FeraAssessment::from_json(unknown_role, reg),
            Err(FeraError::UnknownRole(_))
        ));

        let empty = r#"{"architecture": "Toy-RA", "answers": []}"#;
        let parsed = FeraAssessment::from_json(empty, reg).unwrap();
        assert!(deficiencies(&parsed, reg, DeficiencyPolicy::AnyNegative).is_empty());
    }

    #[test]
    fn all_yes_means_no_deficiencies() {
        let reg = seed::question_registry();
        let a = assessment(vec![
            answer("3-11", "software architect", AnswerValue::Yes, ""),
            answer("2-25", "tester", AnswerValue::Yes, ""),
        ]);
        assert!(deficiencies(&a, reg, DeficiencyPolicy::AnyNegative).is_empty());
    }

    #[test]
    fn single_no_under_any_negative() {
        let reg = seed::question_registry();
        let a = assessment(vec![answer(
            "3-11",
            "software architect",
            AnswerValue::No,
            "variability not documented",
        )]);
        let found = deficiencies(&a, reg, DeficiencyPolicy::AnyNegative);
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].question.to_string(), "3-11");
        assert_eq!(found[0].category, "Variability");
        assert_eq!(found[0].severity, Severity::Negative);
        assert_eq!(found[0].evidence.len(), 1);
    }

    #[test]
    fn majority_tie_flags_partial() {
        let reg = seed::question_registry();
        let a = assessment(vec![
            answer("3-11", "software architect", AnswerValue::No, "missing"),
            answer("3-11", "tester", AnswerValue::Yes, ""),
        ]);
        let found = deficiencies(&a, reg, DeficiencyPolicy::Majority);
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].severity, Severity::Partial);
    }

    #[test]
    fn majority_with_clear_positive_majority_is_silent() {
        let reg = seed::question_registry();
        let a = assessment(vec![
            answer("3-11", "software architect", AnswerValue::No, ""),
            answer("3-11", "tester", AnswerValue::Yes, ""),
            answer("3-11", "developer", AnswerValue::Yes, ""),
        ]);
        assert!(deficiencies(&a, reg, DeficiencyPolicy::Majority).is_empty());
    }

    #[test]
    fn not_applicable_is_excluded_everywhere() {
        let reg = seed::question_registry();
        let a = assessment(vec![
            answer("3-11", "software architect", AnswerValue::NotApplicable, ""),
            answer("3-11", "tester", AnswerValue::NotApplicable, ""),
        ]);
        assert!(deficiencies(&a, reg, DeficiencyPolicy::AnyNegative).is_empty());
        assert!(deficiencies(&a, reg, DeficiencyPolicy::Majority).is_empty());
        assert!(deficiencies(&a, reg, DeficiencyPolicy::Latest).is_empty());
    }

    #[test]
    fn latest_takes_the_most_recent_answer_per_role() {
        let reg = seed::question_registry();
        let a = assessment(vec![
            answer("3-11", "software architect", AnswerValue::No, "first pass"),
            answer("3-11", "software architect", AnswerValue::Yes, "fixed"),
        ]);
        assert!(deficiencies(&a, reg, DeficiencyPolicy::Latest).is_empty());
        // The historical No still counts under any-negative.
        assert_eq!(deficiencies(&a, reg, DeficiencyPolicy::AnyNegative).len(), 1);
    }

    #[test]
    fn results_are_ordered_by_part_then_number() {
        let reg = seed::question_registry();
        let a = assessment(vec![
            answer("3-11", "tester", AnswerValue::No, ""),
            answer("2-25", "tester", AnswerValue::No, ""),
            answer("2-1", "tester", AnswerValue::No, ""),
        ]);
        let found = deficiencies(&a, reg, DeficiencyPolicy::AnyNegative);
        let order: Vec<String> = found.iter().map(|d| d.question.to_string()).collect();
        assert_eq!(order, vec!["2-1", "2-25", "3-11"]);
    }
}
