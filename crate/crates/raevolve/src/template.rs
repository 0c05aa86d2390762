//! Placeholder templates used by rule actions.
//!
//! A template is plain text where `{name}` substitutes the value bound to
//! `name` in the rule inputs. Trace endpoints additionally understand the
//! form `@Kind:name` — after substitution it resolves to the id of the
//! element of that kind and exact name; anything else is an external
//! artifact reference recorded verbatim.

use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TemplateError {
    UnboundPlaceholder(String),
    Malformed(String),
}

impl std::fmt::Display for TemplateError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TemplateError::UnboundPlaceholder(name) => {
                write!(f, "placeholder `{{{name}}}` has no binding")
            }
            TemplateError::Malformed(text) => write!(f, "malformed template `{text}`"),
        }
    }
}

/// Placeholder names appearing in a template, in order of appearance.
/// Errors when braces are unbalanced or a placeholder is not an identifier.
pub fn placeholders(template: &str) -> Result<Vec<String>, TemplateError> {
    let mut names = Vec::new();
    let mut rest = template;
    while let Some(start) = rest.find('{') {
        let after = &rest[start + 1..];
        let end = after.find('}').ok_or_else(|| TemplateError::Malformed(template.into()))?;
        let name = &after[..end];
        let valid = !name.is_empty()
            && name.chars().next().map(|c| c.is_ascii_alphabetic() || c == '_').unwrap_or(false)
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid {
            return Err(TemplateError::Malformed(template.into()));
        }
        names.push(name.to_string());
        rest = &after[end + 1..];
    }
    if rest.contains('}') {
        return Err(TemplateError::Malformed(template.into()));
    }
    Ok(names)
}

/// Substitute every placeholder from the bindings.
pub fn resolve(template: &str, bindings: &BTreeMap<String, String>) -> Result<String, TemplateError> {
    let mut out = String::with_capacity(template.len());
    let mut rest = template;
    while let Some(start) = rest.find('{') {
        out.push_str(&rest[..start]);
        let after = &rest[start + 1..];
        let end = after.find('}').ok_or_else(|| TemplateError::Malformed(template.into()))?;
        let name = &after[..end];
        let value = bindings
            .get(name)
            .ok_or_else(|| TemplateError::UnboundPlaceholder(name.to_string()))?;
        out.push_str(value);
        rest = &after[end + 1..];
    }
    if rest.contains('}') {
        return Err(TemplateError::Malformed(template.into()));
    }
    out.push_str(rest);
    Ok(out)
}

/// A resolved trace endpoint: either a lookup of one element or an external
/// artifact name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEndpoint {
    Element { kind: String, name: String },
    External(String),
}

/// Interpret a resolved trace-endpoint string.
pub fn parse_trace_endpoint(resolved: &str) -> Result<TraceEndpoint, TemplateError> {
    match resolved.strip_prefix('@') {
        Some(rest) => {
            let (kind, name) = rest
                .split_once(':')
                .ok_or_else(|| TemplateError::Malformed(resolved.into()))?;
            if kind.is_empty() || name.is_empty() {
                return Err(TemplateError::Malformed(resolved.into()));
            }
            Ok(TraceEndpoint::Element { kind: kind.to_string(), name: name.to_string() })
        }
        None => Ok(TraceEndpoint::External(resolved.to_string())),
    }
}

/// The element kind referenced by an endpoint template, if it is an
/// element lookup. Works on the unresolved template.
pub fn endpoint_kind(template: &str) -> Option<&str> {
    template.strip_prefix('@').and_then(|rest| rest.split_once(':')).map(|(kind, _)| kind)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bindings(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
        pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
    }

    #[test]
    fn extraction_and_resolution() {
        assert_eq!(placeholders("plain text").unwrap(), Vec::<String>::new());
        assert_eq!(placeholders("{a} and {b_2}").unwrap(), vec!["a", "b_2"]);
        let resolved =
            resolve("fera:{question}", &bindings(&[("question", "3-11")])).unwrap();
        assert_eq!(resolved, "fera:3-11");
    }

    #[test]
    fn unbound_and_malformed() {
        assert_eq!(
            resolve("{missing}", &bindings(&[])),
            Err(TemplateError::UnboundPlaceholder("missing".into()))
        );
        assert!(placeholders("{unclosed").is_err());
        assert!(placeholders("stray } brace").is_err());
        assert!(placeholders("{not valid}").is_err());
    }

    #[test]
    fn trace_endpoints() {
        assert_eq!(
            parse_trace_endpoint("@View:Variability View").unwrap(),
            TraceEndpoint::Element { kind: "View".into(), name: "Variability View".into() }
        );
        assert_eq!(
            parse_trace_endpoint("fera:3-11").unwrap(),
            TraceEndpoint::External("fera:3-11".into())
        );
        assert!(parse_trace_endpoint("@View").is_err());
        assert_eq!(endpoint_kind("@View:{view_name}"), Some("View"));
        assert_eq!(endpoint_kind("fera:{q}"), None);
    }
}
