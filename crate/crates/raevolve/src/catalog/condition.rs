//! Condition predicate grammar for evolution rules.
//!
//! The grammar is deliberately tiny:
//!
//! ```text
//! expr  := or
//! or    := and ("or" and)*
//! and   := not ("and" not)*
//! not   := "not" not | atom
//! atom  := "exists" "(" KIND ("," STRING)? ")"
//!        | "section" "(" STRING ")"
//!        | "(" expr ")"
//! ```
//!
//! The empty string is the trivially-true condition. `exists` matches
//! elements by kind and, when a name is given, by exact name; `section`
//! checks the description's general sections.

use serde::Serialize;
use thiserror::Error;

use crate::model::ArchitectureDescription;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("condition parse error at byte {position}: {message}")]
pub struct ConditionParseError {
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Predicate {
    True,
    Exists { kind: String, name: Option<String> },
    Section { name: String },
    Not(Box<Predicate>),
    And(Box<Predicate>, Box<Predicate>),
    Or(Box<Predicate>, Box<Predicate>),
}

impl Predicate {
    pub fn parse(text: &str) -> Result<Self, ConditionParseError> {
        if text.trim().is_empty() {
            return Ok(Predicate::True);
        }
        let mut parser = Parser { text, tokens: tokenize(text)?, pos: 0 };
        let expr = parser.parse_or()?;
        if parser.pos < parser.tokens.len() {
            let (offset, _) = parser.tokens[parser.pos];
            return Err(ConditionParseError {
                position: offset,
                message: "unexpected trailing input".to_string(),
            });
        }
        Ok(expr)
    }

    pub fn eval(&self, desc: &ArchitectureDescription) -> bool {
        match self {
            Predicate::True => true,
            Predicate::Exists { kind, name } => desc.elements().any(|e| {
                e.kind == *kind && name.as_ref().map(|n| &e.name == n).unwrap_or(true)
            }),
            Predicate::Section { name } => desc.general_section(name).is_some(),
            Predicate::Not(inner) => !inner.eval(desc),
            Predicate::And(a, b) => a.eval(desc) && b.eval(desc),
            Predicate::Or(a, b) => a.eval(desc) || b.eval(desc),
        }
    }

    /// Element kinds the predicate mentions, for registry validation.
    pub fn referenced_kinds(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_kinds(&mut out);
        out
    }

    fn collect_kinds<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Predicate::Exists { kind, .. } => out.push(kind),
            Predicate::Not(inner) => inner.collect_kinds(out),
            Predicate::And(a, b) | Predicate::Or(a, b) => {
                a.collect_kinds(out);
                b.collect_kinds(out);
            }
            _ => {}
        }
    }
}

impl std::fmt::Display for Predicate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Predicate::True => f.write_str("true"),
            Predicate::Exists { kind, name: Some(name) } => {
                write!(f, "exists({kind}, \"{name}\")")
            }
            Predicate::Exists { kind, name: None } => write!(f, "exists({kind})"),
            Predicate::Section { name } => write!(f, "section(\"{name}\")"),
            Predicate::Not(inner) => write!(f, "not {inner}"),
            Predicate::And(a, b) => write!(f, "({a} and {b})"),
            Predicate::Or(a, b) => write!(f, "({a} or {b})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Str(String),
    LParen,
    RParen,
    Comma,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ConditionParseError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '(' => {
                tokens.push((i, Token::LParen));
                i += 1;
            }
            ')' => {
                tokens.push((i, Token::RParen));
                i += 1;
            }
            ',' => {
                tokens.push((i, Token::Comma));
                i += 1;
            }
            '"' => {
                let start = i;
                i += 1;
                let mut value = String::new();
                loop {
                    if i >= bytes.len() {
                        return Err(ConditionParseError {
                            position: start,
                            message: "unterminated string literal".to_string(),
                        });
                    }
                    match bytes[i] as char {
                        '"' => {
                            i += 1;
                            break;
                        }
                        '\\' => {
                            i += 1;
                            match bytes.get(i).map(|b| *b as char) {
                                Some('"') => value.push('"'),
                                Some('\\') => value.push('\\'),
                                _ => {
                                    return Err(ConditionParseError {
                                        position: i,
                                        message: "unsupported escape sequence".to_string(),
                                    })
                                }
                            }
                            i += 1;
                        }
                        _ => {
                            let ch = text[i..].chars().next().expect("index on char boundary");
                            value.push(ch);
                            i += ch.len_utf8();
                        }
                    }
                }
                tokens.push((start, Token::Str(value)));
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() {
                    let b = bytes[i] as char;
                    if b.is_ascii_alphanumeric() || b == '_' {
                        i += 1;
                    } else {
                        break;
                    }
                }
                tokens.push((start, Token::Ident(text[start..i].to_string())));
            }
            _ => {
                let ch = text[i..].chars().next().expect("index on char boundary");
                return Err(ConditionParseError {
                    position: i,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    text: &'a str,
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn next(&mut self) -> Option<(usize, Token)> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err_here(&self, message: &str) -> ConditionParseError {
        let position = self
            .tokens
            .get(self.pos)
            .map(|(o, _)| *o)
            .unwrap_or(self.text.len());
        ConditionParseError { position, message: message.to_string() }
    }

    fn expect(&mut self, expected: Token, what: &str) -> Result<(), ConditionParseError> {
        match self.next() {
            Some((_, token)) if token == expected => Ok(()),
            _ => {
                self.pos = self.pos.saturating_sub(1);
                Err(self.err_here(&format!("expected {what}")))
            }
        }
    }

    fn parse_or(&mut self) -> Result<Predicate, ConditionParseError> {
        let mut left = self.parse_and()?;
        while matches!(self.peek(), Some(Token::Ident(w)) if w == "or") {
            self.next();
            let right = self.parse_and()?;
            left = Predicate::Or(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn parse_and(&mut self) -> Result<Predicate, ConditionParseError> {
        let mut left = self.parse_not()?;
        while matches!(self.peek(), Some(Token::Ident(w)) if w == "and") {
            self.next();
            let right = self.parse_not()?;
            left = Predicate::And(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn parse_not(&mut self) -> Result<Predicate, ConditionParseError> {
        if matches!(self.peek(), Some(Token::Ident(w)) if w == "not") {
            self.next();
            let inner = self.parse_not()?;
            return Ok(Predicate::Not(Box::new(inner)));
        }
        self.parse_atom()
    }

    fn parse_atom(&mut self) -> Result<Predicate, ConditionParseError> {
        match self.next() {
            Some((_, Token::Ident(word))) if word == "exists" => {
                self.expect(Token::LParen, "`(` after exists")?;
                let kind = match self.next() {
                    Some((_, Token::Ident(kind))) => kind,
                    _ => {
                        self.pos = self.pos.saturating_sub(1);
                        return Err(self.err_here("expected element kind"));
                    }
                };
                let name = if matches!(self.peek(), Some(Token::Comma)) {
                    self.next();
                    match self.next() {
                        Some((_, Token::Str(name))) => Some(name),
                        _ => {
                            self.pos = self.pos.saturating_sub(1);
                            return Err(self.err_here("expected quoted name"));
                        }
                    }
                } else {
                    None
                };
                self.expect(Token::RParen, "`)`")?;
                Ok(Predicate::Exists { kind, name })
            }
            Some((_, Token::Ident(word))) if word == "section" => {
                self.expect(Token::LParen, "`(` after section")?;
                let name = match self.next() {
                    Some((_, Token::Str(name))) => name,
                    _ => {
                        self.pos = self.pos.saturating_sub(1);
                        return Err(self.err_here("expected quoted section name"));
                    }
                };
                self.expect(Token::RParen, "`)`")?;
                Ok(Predicate::Section { name })
            }
            Some((_, Token::LParen)) => {
                let inner = self.parse_or()?;
                self.expect(Token::RParen, "`)`")?;
                Ok(inner)
            }
            _ => {
                self.pos = self.pos.saturating_sub(1);
                Err(self.err_here("expected exists(...), section(...), not, or parentheses"))
            }
        }
    }
}
