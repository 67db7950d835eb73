use thiserror::Error;

use crate::word::Word;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TermError {
    #[error("elements belong to different alphabets")]
    AlphabetMismatch,
    #[error("duplicate generator name {0:?}")]
    DuplicateName(String),
    #[error("invalid generator name {0:?}")]
    InvalidName(String),
    #[error("alphabet has {0} symbols, at most 255 are supported")]
    AlphabetTooLarge(usize),
    #[error("unknown generator {0:?}")]
    UnknownSymbol(String),
    #[error("bad coefficient {0:?}")]
    BadCoefficient(String),
    #[error("malformed JSON element: {0}")]
    Json(String),
}

/// Expression parse failure with a 1-based source position.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{line}:{column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("'/' is only allowed inside a rational literal such as 1/16")]
    StraySlash,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("expected {expected}, found {found}")]
    Expected { expected: String, found: String },
    #[error("malformed bracket: {0}")]
    MalformedBracket(String),
    #[error("exponent out of range")]
    BadExponent,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RewriteError {
    #[error(transparent)]
    Term(#[from] TermError),
    #[error("rule left-hand side {0:?} must have length at least 2")]
    ShortLhs(String),
    #[error("two rules share the left-hand side {0}")]
    DuplicateLhs(String),
    #[error("weight vector has {found} entries, alphabet has {expected}")]
    WeightLength { expected: usize, found: usize },
    #[error("rules do not decrease under the term order: {}", .0.join("; "))]
    NonTerminating(Vec<String>),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DefinitionError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: ParseError,
    },
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Term(#[from] TermError),
    #[error(transparent)]
    Map(#[from] MapError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("map {0} has not passed verification on the source relations")]
    Unsealed(String),
    #[error("map {name} fails on {} relation(s)", .failures.len())]
    RelationsViolated { name: String, failures: Vec<String> },
    #[error("no image given for generator {0}")]
    MissingImage(String),
    #[error("image given for unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error(transparent)]
    Term(#[from] TermError),
    #[error("cannot compose: target of {inner} is not the source of {outer}")]
    NotComposable { outer: String, inner: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FiltrationError {
    #[error("element is not in normal form: word {0:?} is reducible")]
    NotIrreducible(Word),
    #[error("weight vector has {found} entries, alphabet has {expected}")]
    WeightLength { expected: usize, found: usize },
    #[error(transparent)]
    Term(#[from] TermError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CasimirError {
    #[error("image is not a polynomial in ι, κ, λ, μ; offending monomials: {}", .0.join(", "))]
    NotCentral(Vec<String>),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Term(#[from] TermError),
}
