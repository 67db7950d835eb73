//! Text format for reduction systems.
//!
//! ```text
//! # comment
//! alphabet: X Y Z κ/kappa λ/lambda μ/mu
//! weights: 1 1 1 1 1 1
//! tiebreak: lex
//! Y*X -> -X*Y + Z + κ
//! define ι/iota := X + Y + Z
//! ```
//!
//! `weights` defaults to all ones and `tiebreak` to `lex`; the alternative
//! tiebreak is `chain A B C D` (elementary operations along that chain). Rule
//! and define lines use the expression grammar of [`crate::parse`]. A rule's
//! left-hand side must evaluate to a single word with coefficient one.

use std::sync::Arc;

use num_traits::One;

use crate::alphabet::Alphabet;
use crate::error::DefinitionError;
use crate::parse::parse_element;
use crate::rewrite::order::{TermOrder, Tiebreak};
use crate::rewrite::system::{ReductionSystem, SystemBuilder};
use crate::scope::Scope;
use crate::weight::WeightVector;

/// A parsed system file: the sealed system plus its (unreduced) defines.
#[derive(Debug)]
pub struct SystemDefinition {
    pub name: Option<String>,
    pub system: ReductionSystem,
    pub scope: Scope,
}

fn syntax(line: usize, message: impl Into<String>) -> DefinitionError {
    DefinitionError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_alphabet(spec: &str, line: usize) -> Result<Alphabet, DefinitionError> {
    let decls: Vec<(String, Vec<String>)> = spec
        .split_whitespace()
        .map(|tok| {
            let mut parts = tok.split('/').map(str::to_string);
            let name = parts.next().unwrap_or_default();
            (name, parts.collect())
        })
        .collect();
    if decls.is_empty() {
        return Err(syntax(line, "empty alphabet"));
    }
    let refs: Vec<(&str, Vec<&str>)> = decls
        .iter()
        .map(|(n, a)| (n.as_str(), a.iter().map(String::as_str).collect()))
        .collect();
    let slices: Vec<(&str, &[&str])> = refs.iter().map(|(n, a)| (*n, a.as_slice())).collect();
    Ok(Alphabet::new(&slices)?)
}

pub fn parse_system_definition(text: &str) -> Result<SystemDefinition, DefinitionError> {
    let mut name = None;
    let mut alphabet: Option<Arc<Alphabet>> = None;
    let mut weights: Option<WeightVector> = None;
    let mut tiebreak = Tiebreak::Lex;
    let mut rule_lines: Vec<(usize, String, String)> = Vec::new();
    let mut define_lines: Vec<(usize, String, String)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix("name:") {
            name = Some(rest.trim().to_string());
        } else if let Some(rest) = content.strip_prefix("alphabet:") {
            if alphabet.is_some() {
                return Err(syntax(line, "alphabet declared twice"));
            }
            alphabet = Some(Arc::new(parse_alphabet(rest, line)?));
        } else if let Some(rest) = content.strip_prefix("weights:") {
            let ws = rest
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<u32>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| syntax(line, "weights must be nonnegative integers"))?;
            weights = Some(WeightVector::new(ws));
        } else if let Some(rest) = content.strip_prefix("tiebreak:") {
            let mut toks = rest.split_whitespace();
            tiebreak = match toks.next() {
                Some("lex") => Tiebreak::Lex,
                Some("chain") => {
                    let a = alphabet
                        .as_ref()
                        .ok_or_else(|| syntax(line, "tiebreak chain before alphabet"))?;
                    let chain = toks
                        .map(|t| {
                            a.lookup(t)
                                .ok_or_else(|| syntax(line, format!("unknown generator {t:?}")))
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    Tiebreak::ElementaryOps { chain }
                }
                other => return Err(syntax(line, format!("unknown tiebreak {other:?}"))),
            };
        } else if let Some(rest) = content.strip_prefix("define ") {
            let (lhs, rhs) = rest
                .split_once(":=")
                .ok_or_else(|| syntax(line, "expected `define NAME := expression`"))?;
            define_lines.push((line, lhs.trim().to_string(), rhs.trim().to_string()));
        } else if let Some((lhs, rhs)) = content.split_once("->") {
            rule_lines.push((line, lhs.trim().to_string(), rhs.trim().to_string()));
        } else {
            return Err(syntax(line, format!("unrecognised line {content:?}")));
        }
    }

    let alphabet = alphabet.ok_or_else(|| syntax(1, "missing `alphabet:` line"))?;
    let weight = weights.unwrap_or_else(|| WeightVector::uniform(alphabet.len()));
    let mut builder = SystemBuilder::new(alphabet.clone(), TermOrder { weight, tiebreak });
    let bare = alphabet.clone();
    for (line, lhs, rhs) in rule_lines {
        let l = parse_element(&lhs, &bare).map_err(|source| DefinitionError::Parse { line, source })?;
        let word = match l.terms().iter().next() {
            Some((w, c)) if l.len() == 1 && c.is_one() => w.clone(),
            _ => return Err(syntax(line, "rule left-hand side must be a single word")),
        };
        let r = parse_element(&rhs, &bare).map_err(|source| DefinitionError::Parse { line, source })?;
        builder.rule(word, r)?;
    }
    let system = builder.build()?;

    let mut scope = Scope::new(alphabet);
    for (line, names, expr) in define_lines {
        let mut parts = names.split('/').map(str::trim);
        let primary = parts.next().unwrap_or_default().to_string();
        let aliases: Vec<&str> = parts.collect();
        let value = parse_element(&expr, &scope).map_err(|source| DefinitionError::Parse { line, source })?;
        scope.define(&primary, &aliases, value)?;
    }
    Ok(SystemDefinition {
        name,
        system,
        scope,
    })
}

impl ReductionSystem {
    /// Exports in the system-definition format (without defines).
    pub fn to_definition_text(&self) -> String {
        let a = self.alphabet();
        let mut out = format!("alphabet: {a}\n");
        let ws: Vec<String> = self
            .order()
            .weight
            .as_slice()
            .iter()
            .map(|w| w.to_string())
            .collect();
        out.push_str(&format!("weights: {}\n", ws.join(" ")));
        match &self.order().tiebreak {
            Tiebreak::Lex => out.push_str("tiebreak: lex\n"),
            Tiebreak::ElementaryOps { chain } => {
                let names: Vec<&str> = chain.iter().map(|&s| a.name(s)).collect();
                out.push_str(&format!("tiebreak: chain {}\n", names.join(" ")));
            }
        }
        for r in self.rules() {
            out.push_str(&r.to_text());
            out.push('\n');
        }
        out
    }
}
