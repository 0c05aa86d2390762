//! Execution engine: match, check, plan, and run evolution rules against a
//! description as atomic, logged, reversible changesets.
//!
//! All mutation happens on a scratch clone; the live description is
//! replaced only after every step succeeded, so a failing step leaves it
//! bit-identical to the pre-state. Executions are deterministic given the
//! rule, the description, and the input bindings — ids come from the
//! description's own counter and changesets carry no clocks.

mod delta;

pub use delta::{apply as apply_delta, diff, invert as invert_delta, Delta, DeltaError, DeltaOp};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon;
use crate::catalog::{
    ActionStep, ConditionParseError, ElementQuery, EvolutionRule, OnMissing, Predicate, RuleId,
    Scope, SectionTargetSpec, TaskType,
};
use crate::model::{
    ArchitectureDescription, DescElement, ElementId, KindRegistry, ModelError, RelationKind,
    Section, SectionTarget, TraceEntry, WriteMode,
};
use crate::template::{self, TemplateError, TraceEndpoint};

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("required input `{0}` is missing")]
    MissingInput(String),
    #[error("input `{name}` is invalid: {reason}")]
    InvalidInput { name: String, reason: String },
    #[error("input `{0}` is not declared by the rule")]
    UnknownInput(String),
    #[error("query {query} matches {count} elements; bind an input that disambiguates")]
    QueryAmbiguous { query: String, count: usize },
    #[error("no element matches {0}")]
    TargetNotFound(String),
    #[error("step {step} failed: {cause}")]
    StepFailure { step: usize, cause: Box<EngineError> },
    #[error("injected fault")]
    InjectedFault,
    #[error("condition `{condition}` does not hold: {explanation}")]
    ConditionNotMet { condition: String, explanation: String },
    #[error("condition evaluation failed: {0}")]
    ConditionEval(#[from] ConditionParseError),
    #[error("description hash {actual} does not match the changeset's {expected}")]
    HashMismatch { expected: String, actual: String },
    #[error("malformed template: {0}")]
    BadTemplate(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Delta(#[from] DeltaError),
    #[error(transparent)]
    Canon(#[from] canon::CanonError),
}

impl EngineError {
    fn from_template(err: TemplateError) -> Self {
        match err {
            TemplateError::UnboundPlaceholder(name) => EngineError::MissingInput(name),
            TemplateError::Malformed(text) => EngineError::BadTemplate(text),
        }
    }

    /// The underlying error of a step failure, or the error itself.
    pub fn root_cause(&self) -> &EngineError {
        match self {
            EngineError::StepFailure { cause, .. } => cause.root_cause(),
            other => other,
        }
    }
}

/// Caller-supplied input bindings for one rule execution.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RuleInputs {
    values: BTreeMap<String, String>,
}

impl RuleInputs {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(mut self, name: &str, value: &str) -> Self {
        self.values.insert(name.to_string(), value.to_string());
        self
    }

    pub fn insert(&mut self, name: &str, value: &str) {
        self.values.insert(name.to_string(), value.to_string());
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.values.get(name).map(|s| s.as_str())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &String)> {
        self.values.iter()
    }
}

impl FromIterator<(String, String)> for RuleInputs {
    fn from_iter<T: IntoIterator<Item = (String, String)>>(iter: T) -> Self {
        Self { values: iter.into_iter().collect() }
    }
}

/// An evolution request, matched field-wise against rule events.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventRequest {
    pub task: TaskType,
    pub element: String,
    pub scope: Scope,
}

/// True iff the rule's event equals the request field-wise.
pub fn check_event(rule: &EvolutionRule, request: &EventRequest) -> bool {
    rule.event.task == request.task
        && rule.event.element == request.element
        && rule.event.scope == request.scope
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionCheck {
    pub holds: bool,
    pub explanation: String,
}

/// Evaluate a rule's condition against a description.
pub fn check_condition(
    rule: &EvolutionRule,
    desc: &ArchitectureDescription,
) -> Result<ConditionCheck, EngineError> {
    let predicate = rule.parsed_condition()?;
    if predicate == Predicate::True {
        return Ok(ConditionCheck { holds: true, explanation: "no condition".to_string() });
    }
    let holds = predicate.eval(desc);
    Ok(ConditionCheck { holds, explanation: format!("{predicate} = {holds}") })
}

/// One concrete mutation of an execution plan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum PlannedOp {
    CreateElement { kind: String, name: String, id: ElementId },
    /// An existing element satisfied the query; nothing is created.
    ResolveElement { kind: String, name: String, id: ElementId },
    AttachChild { parent: ElementId, child: ElementId },
    RemoveElements { root: ElementId, removed: Vec<ElementId> },
    WriteSection { target: String, section: String, mode: WriteMode },
    BindChoice { input: String, value: String },
    AddTrace { source: String, target: String, relation: RelationKind },
    Branch { predicate: String, taken: bool },
}

impl std::fmt::Display for PlannedOp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PlannedOp::CreateElement { kind, name, id } => {
                write!(f, "create {kind} \"{name}\" as {id}")
            }
            PlannedOp::ResolveElement { kind, name, id } => {
                write!(f, "use existing {kind} \"{name}\" ({id})")
            }
            PlannedOp::AttachChild { parent, child } => {
                write!(f, "attach {child} under {parent}")
            }
            PlannedOp::RemoveElements { root, removed } => {
                write!(f, "remove {root} and its subtree ({} element(s))", removed.len())
            }
            PlannedOp::WriteSection { target, section, mode } => {
                write!(f, "{mode:?} section \"{section}\" on {target}")
            }
            PlannedOp::BindChoice { input, value } => {
                write!(f, "bind {input} = \"{value}\"")
            }
            PlannedOp::AddTrace { source, target, relation } => {
                write!(f, "trace {source} -> {target} ({relation})")
            }
            PlannedOp::Branch { predicate, taken } => {
                write!(f, "branch on `{predicate}`: {}", if *taken { "then" } else { "else" })
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlannedStep {
    pub index: usize,
    pub op: PlannedOp,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExecutionPlan {
    pub rule: RuleId,
    pub steps: Vec<PlannedStep>,
}

impl ExecutionPlan {
    pub fn to_text(&self) -> String {
        let mut out = format!("plan for {}:\n", self.rule);
        for step in &self.steps {
            out.push_str(&format!("  {}. {}\n", step.index, step.op));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepLog {
    pub step: usize,
    pub summary: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChangeOrigin {
    Rule(RuleId),
    Revert(String),
}

/// Atomic record of one applied transformation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChangeSet {
    pub id: String,
    pub origin: ChangeOrigin,
    pub inputs: BTreeMap<String, String>,
    pub steps_applied: Vec<StepLog>,
    pub delta: Delta,
    pub pre_hash: String,
    pub post_hash: String,
}

impl ChangeSet {
    pub fn rule_id(&self) -> Option<&RuleId> {
        match &self.origin {
            ChangeOrigin::Rule(id) => Some(id),
            ChangeOrigin::Revert(_) => None,
        }
    }

    /// Short label used in history file names.
    pub fn label(&self) -> String {
        match &self.origin {
            ChangeOrigin::Rule(id) => id.to_string(),
            ChangeOrigin::Revert(_) => "revert".to_string(),
        }
    }
}

/// Content hash of a description: the canonical bytes of everything except
/// the version and id counters. Reverting a changeset therefore restores
/// the pre-hash even though the version keeps growing.
pub fn content_hash(desc: &ArchitectureDescription) -> String {
    #[derive(Serialize)]
    struct ContentView<'a> {
        elements: Vec<&'a DescElement>,
        general_sections: &'a [Section],
        name: &'a str,
        traceability: &'a [TraceEntry],
    }
    let view = ContentView {
        elements: desc.elements().collect(),
        general_sections: &desc.general_sections,
        name: &desc.name,
        traceability: &desc.traceability,
    };
    canon::canonical_hash_hex(&view).expect("description content is canonical-serializable")
}

/// Resolve a rule's effective bindings: declared defaults overlaid with the
/// caller's values. Unknown names, missing required inputs, and
/// choose-step bindings outside their options all fail here, before any
/// step runs.
fn bindings_for(
    rule: &EvolutionRule,
    inputs: &RuleInputs,
) -> Result<BTreeMap<String, String>, EngineError> {
    for (name, _) in inputs.iter() {
        if rule.input(name).is_none() {
            return Err(EngineError::UnknownInput(name.clone()));
        }
    }
    let mut bindings = BTreeMap::new();
    for spec in &rule.inputs {
        match inputs.get(&spec.name) {
            Some(value) => {
                bindings.insert(spec.name.clone(), value.to_string());
            }
            None => match (&spec.default, spec.required) {
                (Some(default), _) => {
                    bindings.insert(spec.name.clone(), default.clone());
                }
                (None, true) => return Err(EngineError::MissingInput(spec.name.clone())),
                (None, false) => {}
            },
        }
    }
    check_choice_bindings(&rule.action, &bindings)?;
    Ok(bindings)
}

fn check_choice_bindings(
    steps: &[ActionStep],
    bindings: &BTreeMap<String, String>,
) -> Result<(), EngineError> {
    for step in steps {
        match step {
            ActionStep::ChooseModelKind { options, bind, .. } => {
                let value = bindings
                    .get(bind)
                    .ok_or_else(|| EngineError::MissingInput(bind.clone()))?;
                if !options.contains(value) {
                    return Err(EngineError::InvalidInput {
                        name: bind.clone(),
                        reason: format!(
                            "`{value}` is not among the options [{}]",
                            options.join(", ")
                        ),
                    });
                }
            }
            ActionStep::Conditional { then_steps, else_steps, .. } => {
                check_choice_bindings(then_steps, bindings)?;
                check_choice_bindings(else_steps, bindings)?;
            }
            _ => {}
        }
    }
    Ok(())
}

struct ExecCtx<'a> {
    kinds: &'a KindRegistry,
    bindings: BTreeMap<String, String>,
    scratch: ArchitectureDescription,
    steps: Vec<PlannedStep>,
    log: Vec<StepLog>,
    changeset_id: String,
    counter: usize,
    current_step: usize,
    fail_before: Option<usize>,
}

impl ExecCtx<'_> {
    fn resolve(&self, text: &str) -> Result<String, EngineError> {
        template::resolve(text, &self.bindings).map_err(EngineError::from_template)
    }

    fn resolve_query(&self, query: &ElementQuery) -> Result<ElementId, EngineError> {
        let name = match &query.name {
            Some(template) => Some(self.resolve(template)?),
            None => None,
        };
        self.lookup(&query.kind, name.as_deref())
    }

    fn lookup(&self, kind: &str, name: Option<&str>) -> Result<ElementId, EngineError> {
        let matches: Vec<&DescElement> = self
            .scratch
            .elements()
            .filter(|e| e.kind == kind && name.map(|n| e.name == n).unwrap_or(true))
            .collect();
        let display = match name {
            Some(n) => format!("{kind} \"{n}\""),
            None => kind.to_string(),
        };
        match matches.len() {
            0 => Err(EngineError::TargetNotFound(display)),
            1 => Ok(matches[0].id.clone()),
            count => Err(EngineError::QueryAmbiguous { query: display, count }),
        }
    }

    fn record(&mut self, index: usize, op: PlannedOp) {
        self.log.push(StepLog { step: index, summary: op.to_string() });
        self.steps.push(PlannedStep { index, op });
    }

    fn run_steps(&mut self, steps: &[ActionStep]) -> Result<(), EngineError> {
        for step in steps {
            let index = self.counter;
            self.counter += 1;
            self.current_step = index;
            if self.fail_before == Some(index) {
                return Err(EngineError::InjectedFault);
            }
            self.run_step(index, step)?;
        }
        Ok(())
    }

    fn run_step(&mut self, index: usize, step: &ActionStep) -> Result<(), EngineError> {
        match step {
            ActionStep::CreateElement { kind, name, parent, attributes } => {
                let name = self.resolve(name)?;
                let parent_id = match parent {
                    Some(query) => Some(self.resolve_query(query)?),
                    None => None,
                };
                let id =
                    self.scratch.add_element(self.kinds, kind, &name, parent_id.as_ref())?;
                for (key, value) in attributes {
                    let value = self.resolve(value)?;
                    self.scratch.set_attribute(&id, key, &value)?;
                }
                self.record(index, PlannedOp::CreateElement { kind: kind.clone(), name, id });
            }
            ActionStep::EnsureElement { kind, name, on_missing } => {
                let resolved_name = match name {
                    Some(template) => Some(self.resolve(template)?),
                    None => None,
                };
                match self.lookup(kind, resolved_name.as_deref()) {
                    Ok(id) => {
                        self.record(
                            index,
                            PlannedOp::ResolveElement {
                                kind: kind.clone(),
                                name: resolved_name.unwrap_or_default(),
                                id,
                            },
                        );
                    }
                    Err(EngineError::TargetNotFound(_)) if *on_missing == OnMissing::Create => {
                        let name = resolved_name.ok_or_else(|| {
                            EngineError::BadTemplate(format!(
                                "ensure_element on {kind} cannot create without a name"
                            ))
                        })?;
                        let id = self.scratch.add_element(self.kinds, kind, &name, None)?;
                        self.record(
                            index,
                            PlannedOp::CreateElement { kind: kind.clone(), name, id },
                        );
                    }
                    Err(err) => return Err(err),
                }
            }
            ActionStep::AttachChild { parent, child } => {
                let parent_id = self.resolve_query(parent)?;
                let child_id = self.resolve_query(child)?;
                self.scratch.attach_child(&parent_id, &child_id)?;
                self.record(index, PlannedOp::AttachChild { parent: parent_id, child: child_id });
            }
            ActionStep::RemoveElement { query } => {
                let id = self.resolve_query(query)?;
                let report = self.scratch.remove_element(&id)?;
                self.record(
                    index,
                    PlannedOp::RemoveElements { root: id, removed: report.removed_ids },
                );
            }
            ActionStep::WriteSection { target, section, mode, content } => {
                let section = self.resolve(section)?;
                let content = self.resolve(content)?;
                let resolved_target = match target {
                    SectionTargetSpec::General => SectionTarget::General,
                    SectionTargetSpec::Element(query) => {
                        SectionTarget::Element(self.resolve_query(query)?)
                    }
                };
                self.scratch.write_section(&resolved_target, &section, &content, *mode)?;
                self.record(
                    index,
                    PlannedOp::WriteSection {
                        target: resolved_target.to_string(),
                        section,
                        mode: *mode,
                    },
                );
            }
            ActionStep::ChooseModelKind { bind, .. } => {
                // Validated against the options up front; here it only
                // lands in the plan.
                let value = self.bindings.get(bind).cloned().unwrap_or_default();
                self.record(index, PlannedOp::BindChoice { input: bind.clone(), value });
            }
            ActionStep::UpdateTraceability { source, target, relation, note } => {
                let source = self.resolve_endpoint(source)?;
                let target = self.resolve_endpoint(target)?;
                let note = self.resolve(note)?;
                let entry = TraceEntry {
                    source: source.clone(),
                    target: target.clone(),
                    relation: relation.clone(),
                    note,
                    changeset_id: self.changeset_id.clone(),
                };
                self.scratch.add_trace(entry)?;
                self.record(
                    index,
                    PlannedOp::AddTrace { source, target, relation: relation.clone() },
                );
            }
            ActionStep::Conditional { predicate, then_steps, else_steps } => {
                let parsed = Predicate::parse(predicate)?;
                let taken = parsed.eval(&self.scratch);
                self.record(
                    index,
                    PlannedOp::Branch { predicate: predicate.clone(), taken },
                );
                if taken {
                    self.run_steps(then_steps)?;
                } else {
                    self.run_steps(else_steps)?;
                }
            }
        }
        Ok(())
    }

    fn resolve_endpoint(&self, template_text: &str) -> Result<String, EngineError> {
        let resolved = self.resolve(template_text)?;
        match template::parse_trace_endpoint(&resolved).map_err(EngineError::from_template)? {
            TraceEndpoint::Element { kind, name } => {
                Ok(self.lookup(&kind, Some(&name))?.to_string())
            }
            TraceEndpoint::External(text) => Ok(text),
        }
    }
}

fn run<'k>(
    rule: &EvolutionRule,
    desc: &ArchitectureDescription,
    inputs: &RuleInputs,
    kinds: &'k KindRegistry,
    fail_before: Option<usize>,
) -> Result<ExecCtx<'k>, EngineError> {
    let bindings = bindings_for(rule, inputs)?;
    let check = check_condition(rule, desc)?;
    if !check.holds {
        return Err(EngineError::ConditionNotMet {
            condition: rule.condition.clone(),
            explanation: check.explanation,
        });
    }
    let mut ctx = ExecCtx {
        kinds,
        bindings,
        scratch: desc.clone(),
        steps: Vec::new(),
        log: Vec::new(),
        changeset_id: format!("cs-{}", desc.version + 1),
        counter: 0,
        current_step: 0,
        fail_before,
    };
    ctx.run_steps(&rule.action).map_err(|cause| {
        let step = ctx.current_step;
        EngineError::StepFailure { step, cause: Box::new(cause) }
    })?;
    Ok(ctx)
}

/// Plan a rule execution without mutating the description. The plan lists
/// every concrete mutation with queries resolved to element ids (fresh ids
/// for elements the execution would create).
pub fn dry_run(
    rule: &EvolutionRule,
    desc: &ArchitectureDescription,
    inputs: &RuleInputs,
    kinds: &KindRegistry,
) -> Result<ExecutionPlan, EngineError> {
    let ctx = run(rule, desc, inputs, kinds, None).map_err(|err| match err {
        // The caller asked for a plan; the step wrapper adds nothing here.
        EngineError::StepFailure { cause, .. } => *cause,
        other => other,
    })?;
    Ok(ExecutionPlan { rule: rule.id.clone(), steps: ctx.steps })
}

/// Execute a rule. On success the description holds the post-state and its
/// version advanced by one; on any failure it is untouched and the error
/// names the failing step.
pub fn execute(
    rule: &EvolutionRule,
    desc: &mut ArchitectureDescription,
    inputs: &RuleInputs,
    kinds: &KindRegistry,
) -> Result<ChangeSet, EngineError> {
    execute_with_fault(rule, desc, inputs, kinds, None)
}

/// `execute` with a fault injected before the step with the given ordinal.
/// An ordinal one past the last step fails after all steps but before the
/// commit. Exists so atomicity can be exercised at every point.
pub fn execute_with_fault(
    rule: &EvolutionRule,
    desc: &mut ArchitectureDescription,
    inputs: &RuleInputs,
    kinds: &KindRegistry,
    fail_before: Option<usize>,
) -> Result<ChangeSet, EngineError> {
    let ctx = run(rule, desc, inputs, kinds, fail_before)?;
    if let Some(k) = fail_before {
        if k >= ctx.counter {
            // Fault point past the last step: fail before commit.
            return Err(EngineError::StepFailure {
                step: ctx.counter,
                cause: Box::new(EngineError::InjectedFault),
            });
        }
    }
    let mut post = ctx.scratch;
    let delta = diff(desc, &post);
    let changeset = ChangeSet {
        id: ctx.changeset_id,
        origin: ChangeOrigin::Rule(rule.id.clone()),
        inputs: ctx.bindings,
        steps_applied: ctx.log,
        delta,
        pre_hash: content_hash(desc),
        post_hash: content_hash(&post),
    };
    post.version = desc.version + 1;
    *desc = post;
    Ok(changeset)
}

/// Undo a changeset. The description must sit exactly at the changeset's
/// post-state; reverts append history rather than erasing it, so the
/// version advances.
pub fn revert(
    desc: &mut ArchitectureDescription,
    changeset: &ChangeSet,
) -> Result<ChangeSet, EngineError> {
    let actual = content_hash(desc);
    if actual != changeset.post_hash {
        return Err(EngineError::HashMismatch {
            expected: changeset.post_hash.clone(),
            actual,
        });
    }
    let inverse = invert_delta(&changeset.delta);
    let mut post = desc.clone();
    apply_delta(&mut post, &inverse)?;
    post.version = desc.version + 1;
    let revert_changeset = ChangeSet {
        id: format!("cs-{}", post.version),
        origin: ChangeOrigin::Revert(changeset.id.clone()),
        inputs: BTreeMap::new(),
        steps_applied: vec![StepLog {
            step: 0,
            summary: format!("revert changeset {}", changeset.id),
        }],
        delta: inverse,
        pre_hash: changeset.post_hash.clone(),
        post_hash: changeset.pre_hash.clone(),
    };
    *desc = post;
    Ok(revert_changeset)
}

/// Cheap applicability pre-check used by recommendations: the condition
/// must hold and every step's target must plausibly resolve. Name
/// templates with placeholders are treated as wildcards, since their
/// bindings are not known yet; the check is deliberately optimistic about
/// those but exact about literal names.
pub fn precheck(rule: &EvolutionRule, desc: &ArchitectureDescription) -> bool {
    let Ok(predicate) = rule.parsed_condition() else {
        return false;
    };
    if !predicate.eval(desc) {
        return false;
    }
    let mut planned: Vec<(String, Option<String>)> = Vec::new();
    let mut planned_sections: Vec<String> = Vec::new();
    precheck_steps(&rule.action, desc, &mut planned, &mut planned_sections)
}

fn literal_name(template: &Option<String>) -> Option<Option<String>> {
    // None = no name in the query; Some(None) = templated (wildcard);
    // Some(Some(n)) = literal.
    match template {
        None => None,
        Some(t) => {
            if t.contains('{') {
                Some(None)
            } else {
                Some(Some(t.clone()))
            }
        }
    }
}

fn query_satisfiable(
    desc: &ArchitectureDescription,
    planned: &[(String, Option<String>)],
    kind: &str,
    name: Option<&Option<String>>,
) -> bool {
    let name = name.map(|n| n.as_ref());
    let existing = desc.elements().any(|e| {
        e.kind == kind
            && match name {
                Some(Some(literal)) => &e.name == literal,
                _ => true,
            }
    });
    if existing {
        return true;
    }
    planned.iter().any(|(k, n)| {
        k == kind
            && match (name, n) {
                (Some(Some(literal)), Some(planned_name)) => literal == planned_name,
                (Some(Some(_)), None) => true,
                _ => true,
            }
    })
}

fn precheck_steps(
    steps: &[ActionStep],
    desc: &ArchitectureDescription,
    planned: &mut Vec<(String, Option<String>)>,
    planned_sections: &mut Vec<String>,
) -> bool {
    for step in steps {
        match step {
            ActionStep::CreateElement { kind, name, parent, .. } => {
                if let Some(parent) = parent {
                    let n = literal_name(&parent.name);
                    if !query_satisfiable(desc, planned, &parent.kind, n.as_ref()) {
                        return false;
                    }
                }
                planned.push((kind.clone(), literal_name(&Some(name.clone())).flatten()));
            }
            ActionStep::EnsureElement { kind, name, on_missing } => match on_missing {
                OnMissing::Create => {
                    planned.push((kind.clone(), literal_name(name).flatten()));
                }
                OnMissing::Fail => {
                    let n = literal_name(name);
                    if !query_satisfiable(desc, planned, kind, n.as_ref()) {
                        return false;
                    }
                }
            },
            ActionStep::AttachChild { parent, child } => {
                for query in [parent, child] {
                    let n = literal_name(&query.name);
                    if !query_satisfiable(desc, planned, &query.kind, n.as_ref()) {
                        return false;
                    }
                }
            }
            ActionStep::RemoveElement { query } => {
                let n = literal_name(&query.name);
                if !query_satisfiable(desc, planned, &query.kind, n.as_ref()) {
                    return false;
                }
            }
            ActionStep::WriteSection { target, section, mode, .. } => {
                let section_known = !section.contains('{');
                match target {
                    SectionTargetSpec::General => {
                        if section_known {
                            let exists = desc.general_section(section).is_some()
                                || planned_sections.iter().any(|s| s == section);
                            match mode {
                                WriteMode::Create => {
                                    if exists {
                                        return false;
                                    }
                                    planned_sections.push(section.clone());
                                }
                                WriteMode::Replace | WriteMode::Append => {
                                    if !exists {
                                        return false;
                                    }
                                }
                            }
                        }
                    }
                    SectionTargetSpec::Element(query) => {
                        let n = literal_name(&query.name);
                        if !query_satisfiable(desc, planned, &query.kind, n.as_ref()) {
                            return false;
                        }
                        if section_known && *mode != WriteMode::Create {
                            // Exact check only when one literal-named,
                            // already-existing element is the target.
                            if let Some(Some(literal)) = &n {
                                let candidates: Vec<&DescElement> = desc
                                    .elements()
                                    .filter(|e| e.kind == query.kind && &e.name == literal)
                                    .collect();
                                if candidates.len() == 1
                                    && candidates[0].section(section).is_none()
                                {
                                    return false;
                                }
                            }
                        }
                    }
                }
            }
            ActionStep::ChooseModelKind { .. } => {}
            ActionStep::UpdateTraceability { source, target, .. } => {
                for endpoint in [source, target] {
                    if let Some(kind) = template::endpoint_kind(endpoint) {
                        let after_colon = endpoint
                            .strip_prefix('@')
                            .and_then(|rest| rest.split_once(':'))
                            .map(|(_, name)| name.to_string());
                        let n = literal_name(&after_colon);
                        if !query_satisfiable(desc, planned, kind, n.as_ref()) {
                            return false;
                        }
                    }
                }
            }
            ActionStep::Conditional { predicate, then_steps, else_steps } => {
                let Ok(parsed) = Predicate::parse(predicate) else {
                    return false;
                };
                let branch = if parsed.eval(desc) { then_steps } else { else_steps };
                if !precheck_steps(branch, desc, planned, planned_sections) {
                    return false;
                }
            }
        }
    }
    true
}
