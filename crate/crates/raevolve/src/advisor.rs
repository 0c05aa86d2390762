//! Recommendation roadmap: from an assessed deficiency to the guidelines,
//! tasks, and candidate rules that can address it.
//!
//! The lookup chain is question → element category → guideline index →
//! tasks → rules. The advisor ranks nothing and applies nothing: it lists
//! every applicable guideline in catalog order, annotates each task with
//! whether its rules look applicable to the current description, and
//! attaches the evaluators' comments so the human making the call sees the
//! evidence. Execution stays a separate, explicit step.

use serde::Serialize;
use thiserror::Error;

use crate::catalog::{Catalog, Guideline, GuidelineId, RuleId, TaskType};
use crate::engine;
use crate::fera::{
    deficiencies, Deficiency, DeficiencyPolicy, FeraAssessment, QuestionRef, QuestionRegistry,
};
use crate::model::ArchitectureDescription;

#[derive(Debug, Error)]
pub enum AdvisorError {
    #[error("unknown question `{0}`")]
    UnknownQuestion(QuestionRef),
    #[error("no guideline covers question {question} (element {element})")]
    NoGuideline { question: QuestionRef, element: String },
}

/// One task row of a recommendation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TaskRecommendation {
    pub task: TaskType,
    pub rules: Vec<RuleId>,
    /// Whether at least one of the rules passes its condition and
    /// existence pre-checks against the current description.
    pub applicable_now: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GuidelineRecommendation {
    pub guideline: GuidelineId,
    pub element: String,
    pub tasks: Vec<TaskRecommendation>,
}

/// Everything the roadmap yields for one deficiency.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Recommendation {
    pub deficiency: Deficiency,
    pub element: String,
    pub guidelines: Vec<GuidelineRecommendation>,
    pub evaluator_comments: Vec<(String, String)>,
    /// Set when no guideline covers the question; the gap is surfaced, not
    /// hidden.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub advisory: Option<String>,
}

impl Recommendation {
    pub fn is_advisory(&self) -> bool {
        self.advisory.is_some()
    }
}

/// Resolve a question to its element category and the guidelines covering
/// it. A mapped question without coverage is an error the caller can
/// surface, not an empty success.
pub fn resolve_question(
    q: QuestionRef,
    registry: &QuestionRegistry,
    catalog: &Catalog,
) -> Result<(String, Vec<GuidelineId>), AdvisorError> {
    let element =
        registry.category_of(q).map_err(|_| AdvisorError::UnknownQuestion(q))?.to_string();
    let guidelines: Vec<GuidelineId> =
        catalog.guidelines_for_question(q).iter().map(|g| g.id.clone()).collect();
    if guidelines.is_empty() {
        return Err(AdvisorError::NoGuideline { question: q, element });
    }
    Ok((element, guidelines))
}

fn task_recommendations(
    guideline: &Guideline,
    catalog: &Catalog,
    desc: &ArchitectureDescription,
) -> Vec<TaskRecommendation> {
    TaskType::ALL
        .iter()
        .map(|task| {
            let rules = guideline.tasks.get(*task).to_vec();
            let applicable_now = rules.iter().any(|rid| {
                catalog.rule(rid).map(|rule| engine::precheck(rule, desc)).unwrap_or(false)
            });
            TaskRecommendation { task: *task, rules, applicable_now }
        })
        .collect()
}

fn recommendation_for(
    deficiency: Deficiency,
    assessment: &FeraAssessment,
    desc: &ArchitectureDescription,
    registry: &QuestionRegistry,
    catalog: &Catalog,
) -> Recommendation {
    let question = deficiency.question;
    let element = deficiency.category.clone();
    let evaluator_comments = assessment.comments_for(question);
    match resolve_question(question, registry, catalog) {
        Ok((_, guideline_ids)) => {
            let guidelines = guideline_ids
                .iter()
                .map(|gid| {
                    let guideline = catalog.guideline(gid).expect("id from this catalog");
                    GuidelineRecommendation {
                        guideline: gid.clone(),
                        element: guideline.element.clone(),
                        tasks: task_recommendations(guideline, catalog, desc),
                    }
                })
                .collect();
            Recommendation {
                deficiency,
                element,
                guidelines,
                evaluator_comments,
                advisory: None,
            }
        }
        Err(err) => Recommendation {
            deficiency,
            element,
            guidelines: Vec::new(),
            evaluator_comments,
            advisory: Some(err.to_string()),
        },
    }
}

/// One recommendation per deficiency of the assessment, ordered by
/// question (part, number). The description is only read.
pub fn recommend(
    assessment: &FeraAssessment,
    desc: &ArchitectureDescription,
    registry: &QuestionRegistry,
    catalog: &Catalog,
    policy: DeficiencyPolicy,
) -> Vec<Recommendation> {
    deficiencies(assessment, registry, policy)
        .into_iter()
        .map(|d| recommendation_for(d, assessment, desc, registry, catalog))
        .collect()
}

/// A recommendation for one question regardless of how it was answered,
/// for direct roadmap lookups. The deficiency record carries the answers'
/// negative evidence when present, or no evidence for a purely manual
/// query.
pub fn recommend_question(
    q: QuestionRef,
    assessment: &FeraAssessment,
    desc: &ArchitectureDescription,
    registry: &QuestionRegistry,
    catalog: &Catalog,
    policy: DeficiencyPolicy,
) -> Result<Recommendation, AdvisorError> {
    if !registry.contains(q) {
        return Err(AdvisorError::UnknownQuestion(q));
    }
    if let Some(existing) = deficiencies(assessment, registry, policy)
        .into_iter()
        .find(|d| d.question == q)
    {
        return Ok(recommendation_for(existing, assessment, desc, registry, catalog));
    }
    let deficiency = Deficiency {
        question: q,
        category: registry.category_of(q).expect("presence checked").to_string(),
        severity: crate::fera::Severity::Partial,
        evidence: Vec::new(),
    };
    Ok(recommendation_for(deficiency, assessment, desc, registry, catalog))
}

/// Render a recommendation as a deterministic plain-text report. Guideline
/// advice is quoted verbatim from the catalog; the advisor never writes
/// advice of its own.
pub fn explain(recommendation: &Recommendation, catalog: &Catalog) -> String {
    let mut out = String::new();
    let d = &recommendation.deficiency;
    out.push_str(&format!(
        "question {} (element {}), severity {:?}\n",
        d.question, recommendation.element, d.severity
    ));
    for (role, comment) in &recommendation.evaluator_comments {
        out.push_str(&format!("  comment [{role}]: {comment}\n"));
    }
    if let Some(advisory) = &recommendation.advisory {
        out.push_str(&format!("  advisory: {advisory}\n"));
        return out;
    }
    for gr in &recommendation.guidelines {
        let guideline = catalog.guideline(&gr.guideline).expect("recommendation from catalog");
        out.push_str(&format!("  guideline {} (element {})\n", gr.guideline, gr.element));
        out.push_str(&format!("    what to do: {}\n", guideline.what_to_do));
        for representation in &guideline.how_to_represent {
            out.push_str(&format!(
                "    how to represent ({:?}): {}\n",
                representation.medium, representation.advice
            ));
        }
        if let Some(when) = &guideline.how_to_make.needs_analysis_when {
            out.push_str(&format!("    run architectural analysis when {when}\n"));
        }
        for task in &gr.tasks {
            let rules = if task.rules.is_empty() {
                "-".to_string()
            } else {
                task.rules.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("; ")
            };
            let marker = if task.applicable_now { " (applicable now)" } else { "" };
            out.push_str(&format!("    {}: {rules}{marker}\n", task.task));
        }
    }
    out
}
