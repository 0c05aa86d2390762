//! Seed data embedded in the binary.
//!
//! `init` materializes these files into a fresh workspace; the library
//! accessors parse them once and hand out shared references. The files
//! also live under `seed/` in the source tree, where they are ordinary
//! editable JSON.

use std::sync::OnceLock;

use crate::catalog::LoadedCatalog;
use crate::fera::QuestionRegistry;
use crate::model::KindRegistry;

pub const KINDS_JSON: &str = include_str!("../seed/kinds.json");
pub const QUESTIONS_JSON: &str = include_str!("../seed/questions.json");

/// Guideline documents as (file name, content), in catalog order. The
/// numeric prefixes keep directory listings aligned with the order the
/// guidelines were published in.
pub const GUIDELINE_DOCS: &[(&str, &str)] = &[
    (
        "01_d_variability_1.guideline.json",
        include_str!("../seed/catalog/01_d_variability_1.guideline.json"),
    ),
    (
        "02_d_information_source_1.guideline.json",
        include_str!("../seed/catalog/02_d_information_source_1.guideline.json"),
    ),
    (
        "03_d_instantiation_1.guideline.json",
        include_str!("../seed/catalog/03_d_instantiation_1.guideline.json"),
    ),
    (
        "04_d_instantiation_2.guideline.json",
        include_str!("../seed/catalog/04_d_instantiation_2.guideline.json"),
    ),
    (
        "05_d_instantiation_3.guideline.json",
        include_str!("../seed/catalog/05_d_instantiation_3.guideline.json"),
    ),
    (
        "06_d_acquisition_1.guideline.json",
        include_str!("../seed/catalog/06_d_acquisition_1.guideline.json"),
    ),
    ("07_d_quality_4.guideline.json", include_str!("../seed/catalog/07_d_quality_4.guideline.json")),
    (
        "08_d_technical_solution_2.guideline.json",
        include_str!("../seed/catalog/08_d_technical_solution_2.guideline.json"),
    ),
    (
        "09_d_domain_data_4.guideline.json",
        include_str!("../seed/catalog/09_d_domain_data_4.guideline.json"),
    ),
];

pub const RULE_DOCS: &[(&str, &str)] = &[
    ("r-aq-1.rule.json", include_str!("../seed/catalog/rules/r-aq-1.rule.json")),
    ("r-aq-2.rule.json", include_str!("../seed/catalog/rules/r-aq-2.rule.json")),
    ("r-da-4.rule.json", include_str!("../seed/catalog/rules/r-da-4.rule.json")),
    ("r-da-5.rule.json", include_str!("../seed/catalog/rules/r-da-5.rule.json")),
    ("r-dd-3.rule.json", include_str!("../seed/catalog/rules/r-dd-3.rule.json")),
    ("r-fi-1.rule.json", include_str!("../seed/catalog/rules/r-fi-1.rule.json")),
    ("r-fi-2.rule.json", include_str!("../seed/catalog/rules/r-fi-2.rule.json")),
    ("r-fi-3.rule.json", include_str!("../seed/catalog/rules/r-fi-3.rule.json")),
    ("r-ins-1.rule.json", include_str!("../seed/catalog/rules/r-ins-1.rule.json")),
    ("r-ins-2.rule.json", include_str!("../seed/catalog/rules/r-ins-2.rule.json")),
    ("r-ins-3.rule.json", include_str!("../seed/catalog/rules/r-ins-3.rule.json")),
    ("r-ins-4.rule.json", include_str!("../seed/catalog/rules/r-ins-4.rule.json")),
    ("r-ins-5.rule.json", include_str!("../seed/catalog/rules/r-ins-5.rule.json")),
    ("r-ins-6.rule.json", include_str!("../seed/catalog/rules/r-ins-6.rule.json")),
    ("r-ins-7.rule.json", include_str!("../seed/catalog/rules/r-ins-7.rule.json")),
    ("r-ponvi-4.rule.json", include_str!("../seed/catalog/rules/r-ponvi-4.rule.json")),
    ("r-st-5.rule.json", include_str!("../seed/catalog/rules/r-st-5.rule.json")),
    ("r-st-6.rule.json", include_str!("../seed/catalog/rules/r-st-6.rule.json")),
    ("r-var-1.rule.json", include_str!("../seed/catalog/rules/r-var-1.rule.json")),
    ("r-var-2.rule.json", include_str!("../seed/catalog/rules/r-var-2.rule.json")),
    ("r-var-3.rule.json", include_str!("../seed/catalog/rules/r-var-3.rule.json")),
    ("r-vi-4.rule.json", include_str!("../seed/catalog/rules/r-vi-4.rule.json")),
];

/// The built-in kind registry.
pub fn kind_registry() -> &'static KindRegistry {
    static REGISTRY: OnceLock<KindRegistry> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        KindRegistry::from_json(KINDS_JSON).expect("embedded kind registry is valid")
    })
}

/// The built-in question registry.
pub fn question_registry() -> &'static QuestionRegistry {
    static REGISTRY: OnceLock<QuestionRegistry> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        QuestionRegistry::from_json(QUESTIONS_JSON, kind_registry())
            .expect("embedded question registry is valid")
    })
}

/// The built-in catalog, including load-time warnings.
pub fn catalog() -> &'static LoadedCatalog {
    static CATALOG: OnceLock<LoadedCatalog> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let guidelines: Vec<(String, String)> =
            GUIDELINE_DOCS.iter().map(|(n, c)| (n.to_string(), c.to_string())).collect();
        let rules: Vec<(String, String)> =
            RULE_DOCS.iter().map(|(n, c)| (n.to_string(), c.to_string())).collect();
        crate::catalog::Catalog::load(&guidelines, &rules, question_registry(), kind_registry())
            .expect("embedded catalog is valid")
    })
}
