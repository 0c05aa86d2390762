//! Catalog invariant validation.
//!
//! Checks run over an assembled catalog and report issues rather than
//! failing fast, so one pass surfaces everything. Two severities exist:
//! violations make the catalog unusable; warnings flag constructs that are
//! permitted but worth an audit — currently only references to rules of a
//! different guideline family (the rule id's acronym does not match the
//! guideline's), which the published index does in a few cells.

use std::collections::BTreeSet;
use std::fmt;

use super::{ActionStep, Catalog, Guideline, Predicate, SectionTargetSpec};
use crate::fera::QuestionRegistry;
use crate::model::KindRegistry;
use crate::template;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum IssueSeverity {
    Violation,
    Warning,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CatalogIssue {
    pub severity: IssueSeverity,
    /// Guideline or rule id the issue is about.
    pub subject: String,
    pub message: String,
}

impl fmt::Display for CatalogIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.severity {
            IssueSeverity::Violation => "violation",
            IssueSeverity::Warning => "warning",
        };
        write!(f, "{tag} [{}]: {}", self.subject, self.message)
    }
}

fn violation(subject: &impl fmt::Display, message: String) -> CatalogIssue {
    CatalogIssue { severity: IssueSeverity::Violation, subject: subject.to_string(), message }
}

fn warning(subject: &impl fmt::Display, message: String) -> CatalogIssue {
    CatalogIssue { severity: IssueSeverity::Warning, subject: subject.to_string(), message }
}

/// Run every catalog invariant and the cross-module category consistency
/// check. Returns an empty list iff the catalog is fully consistent.
pub fn validate_catalog(
    catalog: &Catalog,
    questions: &QuestionRegistry,
    kinds: &KindRegistry,
) -> Vec<CatalogIssue> {
    let mut issues = Vec::new();
    let mut referenced_rules: BTreeSet<String> = BTreeSet::new();

    for guideline in catalog.guidelines() {
        check_guideline(catalog, guideline, questions, kinds, &mut issues, &mut referenced_rules);
    }

    for rule in catalog.rules() {
        let id = &rule.id;
        if rule.action.is_empty() {
            issues.push(violation(id, "action list is empty".into()));
        }
        if !kinds.contains(&rule.event.element) {
            issues.push(violation(
                id,
                format!("event element `{}` is not a registered kind", rule.event.element),
            ));
        }
        match Predicate::parse(&rule.condition) {
            Ok(predicate) => {
                for kind in predicate.referenced_kinds() {
                    if !kinds.contains(kind) {
                        issues.push(violation(
                            id,
                            format!("condition references unknown kind `{kind}`"),
                        ));
                    }
                }
            }
            Err(err) => issues.push(violation(id, format!("condition does not parse: {err}"))),
        }

        // Input specs: unique names, no required-with-default.
        let mut seen_inputs = BTreeSet::new();
        for input in &rule.inputs {
            if !seen_inputs.insert(input.name.as_str()) {
                issues.push(violation(id, format!("duplicate input `{}`", input.name)));
            }
            if input.required && input.default.is_some() {
                issues.push(violation(
                    id,
                    format!("input `{}` is required but has a default", input.name),
                ));
            }
        }
        let declared: BTreeSet<&str> = rule.inputs.iter().map(|i| i.name.as_str()).collect();
        check_steps(rule, &rule.action, &declared, kinds, &mut issues);

        if !referenced_rules.contains(&id.to_string()) {
            issues.push(violation(id, "rule is not referenced by any guideline".into()));
        }
    }

    issues
}

fn check_guideline(
    catalog: &Catalog,
    guideline: &Guideline,
    questions: &QuestionRegistry,
    kinds: &KindRegistry,
    issues: &mut Vec<CatalogIssue>,
    referenced_rules: &mut BTreeSet<String>,
) {
    let id = &guideline.id;

    if id.element_kind_name() != guideline.element {
        issues.push(violation(
            id,
            format!(
                "identifier names element `{}` but the guideline declares `{}`",
                id.element_kind_name(),
                guideline.element
            ),
        ));
    }
    if !kinds.contains(&guideline.element) {
        issues.push(violation(
            id,
            format!("element `{}` is not a registered kind", guideline.element),
        ));
    }
    if guideline.acronym.is_empty()
        || !guideline.acronym.chars().all(|c| c.is_ascii_lowercase())
    {
        issues.push(violation(
            id,
            format!("acronym `{}` must be lowercase letters", guideline.acronym),
        ));
    }
    if guideline.applicable_questions.is_empty() {
        issues.push(violation(id, "no applicable questions".into()));
    }
    for q in &guideline.applicable_questions {
        match questions.categories_of(*q) {
            Ok(categories) => {
                if !categories.contains(&guideline.element.as_str()) {
                    issues.push(violation(
                        id,
                        format!(
                            "question {q} is categorized as {} but the guideline addresses {}",
                            categories.join("/"),
                            guideline.element
                        ),
                    ));
                }
            }
            Err(_) => {
                issues.push(violation(id, format!("question {q} is not in the registry")));
            }
        }
    }

    let mut needs_traceability = false;
    for (task, rule_ids) in guideline.tasks.iter() {
        for rule_id in rule_ids {
            referenced_rules.insert(rule_id.to_string());
            let Some(rule) = catalog.rule(rule_id) else {
                issues.push(violation(id, format!("task {task} references missing rule {rule_id}")));
                continue;
            };
            if rule.event.task != task {
                issues.push(violation(
                    id,
                    format!(
                        "task {task} references {rule_id}, whose event is `{}`",
                        rule.event
                    ),
                ));
            }
            if rule_id.acronym == guideline.acronym {
                if rule.event.element != guideline.element {
                    issues.push(violation(
                        id,
                        format!(
                            "family rule {rule_id} acts on element `{}`, not `{}`",
                            rule.event.element, guideline.element
                        ),
                    ));
                }
            } else {
                issues.push(warning(
                    id,
                    format!(
                        "task {task} references {rule_id} from the `{}` family (this guideline's family is `{}`)",
                        rule_id.acronym, guideline.acronym
                    ),
                ));
            }
            if steps_touch_traceability(&rule.action) {
                needs_traceability = true;
            }
        }
    }
    if needs_traceability
        && !guideline.artifacts.contains(&super::Artifact::TraceabilityMatrix)
    {
        issues.push(violation(
            id,
            "referenced rules update the traceability matrix but the guideline does not list it as an involved artifact".into(),
        ));
    }
}

fn steps_touch_traceability(steps: &[ActionStep]) -> bool {
    steps.iter().any(|step| match step {
        ActionStep::UpdateTraceability { .. } => true,
        ActionStep::Conditional { then_steps, else_steps, .. } => {
            steps_touch_traceability(then_steps) || steps_touch_traceability(else_steps)
        }
        _ => false,
    })
}

fn check_steps(
    rule: &super::EvolutionRule,
    steps: &[ActionStep],
    declared: &BTreeSet<&str>,
    kinds: &KindRegistry,
    issues: &mut Vec<CatalogIssue>,
) {
    let id = &rule.id;
    let mut check_template = |text: &str, what: &str| match template::placeholders(text) {
        Ok(names) => {
            for name in names {
                if !declared.contains(name.as_str()) {
                    issues.push(violation(
                        id,
                        format!("{what} references undeclared input `{name}`"),
                    ));
                }
            }
        }
        Err(err) => issues.push(violation(id, format!("{what}: {err}"))),
    };
    let mut bad_kind = Vec::new();
    let mut check_kind = |kind: &str, what: &str| {
        if !kinds.contains(kind) {
            bad_kind.push((kind.to_string(), what.to_string()));
        }
    };

    for step in steps {
        match step {
            ActionStep::CreateElement { kind, name, parent, attributes } => {
                check_kind(kind, "create_element kind");
                check_template(name, "create_element name");
                if let Some(parent) = parent {
                    check_kind(&parent.kind, "create_element parent kind");
                    if let Some(n) = &parent.name {
                        check_template(n, "create_element parent query");
                    }
                }
                for (key, value) in attributes {
                    check_template(value, &format!("attribute `{key}`"));
                }
            }
            ActionStep::EnsureElement { kind, name, .. } => {
                check_kind(kind, "ensure_element kind");
                if let Some(n) = name {
                    check_template(n, "ensure_element query");
                }
            }
            ActionStep::AttachChild { parent, child } => {
                check_kind(&parent.kind, "attach_child parent kind");
                check_kind(&child.kind, "attach_child child kind");
                for query in [parent, child] {
                    if let Some(n) = &query.name {
                        check_template(n, "attach_child query");
                    }
                }
            }
            ActionStep::RemoveElement { query } => {
                check_kind(&query.kind, "remove_element kind");
                if let Some(n) = &query.name {
                    check_template(n, "remove_element query");
                }
            }
            ActionStep::WriteSection { target, section, content, .. } => {
                if let SectionTargetSpec::Element(query) = target {
                    check_kind(&query.kind, "write_section target kind");
                    if let Some(n) = &query.name {
                        check_template(n, "write_section target query");
                    }
                }
                check_template(section, "write_section section name");
                check_template(content, "write_section content");
            }
            ActionStep::ChooseModelKind { options, bind, .. } => {
                if options.is_empty() {
                    issues.push(violation(id, "choose_model_kind has no options".into()));
                }
                match rule.input(bind) {
                    None => issues.push(violation(
                        id,
                        format!("choose_model_kind binds undeclared input `{bind}`"),
                    )),
                    Some(spec) => {
                        if let Some(default) = &spec.default {
                            if !options.contains(default) {
                                issues.push(violation(
                                    id,
                                    format!(
                                        "default for `{bind}` is not one of the step's options"
                                    ),
                                ));
                            }
                        }
                    }
                }
            }
            ActionStep::UpdateTraceability { source, target, .. } => {
                for endpoint in [source, target] {
                    check_template(endpoint, "update_traceability endpoint");
                    if let Some(kind) = template::endpoint_kind(endpoint) {
                        check_kind(kind, "update_traceability endpoint kind");
                    }
                }
            }
            ActionStep::Conditional { predicate, then_steps, else_steps } => {
                match Predicate::parse(predicate) {
                    Ok(parsed) => {
                        for kind in parsed.referenced_kinds() {
                            check_kind(kind, "conditional predicate kind");
                        }
                    }
                    Err(err) => {
                        issues.push(violation(id, format!("conditional predicate: {err}")))
                    }
                }
                check_steps(rule, then_steps, declared, kinds, issues);
                check_steps(rule, else_steps, declared, kinds, issues);
            }
        }
    }

    for (kind, what) in bad_kind {
        issues.push(violation(id, format!("{what} `{kind}` is not registered")));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{Fidelity, TaskType};
    use crate::seed;

    #[test]
    fn seed_catalog_has_no_violations() {
        let loaded = seed::catalog();
        let issues =
            validate_catalog(&loaded.catalog, seed::question_registry(), seed::kind_registry());
        let violations: Vec<_> =
            issues.iter().filter(|i| i.severity == IssueSeverity::Violation).collect();
        assert!(violations.is_empty(), "unexpected violations: {violations:?}");
        // Published cross-family references: R-vi-4 and R-ponvi-4 under
        // D_Instantiation_1, R-dd-3 under D_Quality_4.
        let warnings: Vec<_> =
            issues.iter().filter(|i| i.severity == IssueSeverity::Warning).collect();
        assert_eq!(warnings.len(), 3);
        assert!(warnings.iter().all(|w| {
            w.subject == "D_Instantiation_1" || w.subject == "D_Quality_4"
        }));
    }

    #[test]
    fn element_mutation_produces_violations() {
        let loaded = seed::catalog();
        let mut catalog = loaded.catalog.clone();
        let mut guidelines: Vec<_> = catalog.guidelines().cloned().collect();
        let rules: Vec<_> = catalog.rules().cloned().collect();
        for g in &mut guidelines {
            if g.id.to_string() == "D_Variability_1" {
                g.element = "Quality".to_string();
            }
        }
        catalog = crate::catalog::Catalog::from_parts(guidelines, rules).unwrap();
        let issues =
            validate_catalog(&catalog, seed::question_registry(), seed::kind_registry());
        let violations: Vec<_> = issues
            .iter()
            .filter(|i| i.severity == IssueSeverity::Violation && i.subject == "D_Variability_1")
            .collect();
        // At least the id/element mismatch and one question-category mismatch.
        assert!(violations.len() >= 2, "got {violations:?}");
    }

    #[test]
    fn empty_action_list_is_a_violation() {
        let loaded = seed::catalog();
        let guidelines: Vec<_> = loaded.catalog.guidelines().cloned().collect();
        let mut rules: Vec<_> = loaded.catalog.rules().cloned().collect();
        for r in &mut rules {
            if r.id.to_string() == "R-var-1" {
                r.action.clear();
            }
        }
        let catalog = crate::catalog::Catalog::from_parts(guidelines, rules).unwrap();
        let issues =
            validate_catalog(&catalog, seed::question_registry(), seed::kind_registry());
        assert!(issues
            .iter()
            .any(|i| i.severity == IssueSeverity::Violation
                && i.subject == "R-var-1"
                && i.message.contains("action list is empty")));
    }

    #[test]
    fn orphan_rule_is_a_violation() {
        let loaded = seed::catalog();
        let guidelines: Vec<_> = loaded.catalog.guidelines().cloned().collect();
        let mut rules: Vec<_> = loaded.catalog.rules().cloned().collect();
        let mut orphan = rules[0].clone();
        orphan.id = "R-zzz-1".parse().unwrap();
        rules.push(orphan);
        let catalog = crate::catalog::Catalog::from_parts(guidelines, rules).unwrap();
        let issues =
            validate_catalog(&catalog, seed::question_registry(), seed::kind_registry());
        assert!(issues
            .iter()
            .any(|i| i.subject == "R-zzz-1" && i.message.contains("not referenced")));
    }

    #[test]
    fn every_seed_rule_is_reachable_and_fidelity_flagged() {
        let catalog = &seed::catalog().catalog;
        // R-var-1 is the only rule with a fully published action list.
        for rule in catalog.rules() {
            if rule.id.to_string() == "R-var-1" {
                assert_eq!(rule.fidelity, Fidelity::Full);
            } else {
                assert_eq!(rule.fidelity, Fidelity::Summarized, "{}", rule.id);
            }
        }
        // Bidirectional consistency: every referenced rule matches its task.
        for guideline in catalog.guidelines() {
            for (task, rule_ids) in guideline.tasks.iter() {
                for rule_id in rule_ids {
                    let rule = catalog.rule(rule_id).unwrap();
                    assert_eq!(rule.event.task, task, "{rule_id} under {}", guideline.id);
                }
            }
        }
        let _ = TaskType::ALL;
    }
}
