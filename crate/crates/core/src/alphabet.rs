//! Generator alphabets.
//!
//! The declaration order of an alphabet is its total order: a symbol's rank is
//! its index, and graded-lexicographic comparison of words uses these ranks.

use std::fmt;

use crate::error::TermError;

/// A generator symbol, identified by its rank in the owning alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sym(pub(crate) u8);

impl Sym {
    pub fn rank(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct SymbolDecl {
    name: String,
    aliases: Vec<String>,
}

/// Ordered set of generator names. Each symbol has a primary (display) name
/// and any number of aliases accepted on input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<SymbolDecl>,
}

impl Alphabet {
    /// Builds an alphabet from `(name, aliases)` pairs in rank order.
    pub fn new<S: AsRef<str>>(decls: &[(S, &[S])]) -> Result<Self, TermError> {
        let mut symbols: Vec<SymbolDecl> = Vec::with_capacity(decls.len());
        if decls.len() > u8::MAX as usize {
            return Err(TermError::AlphabetTooLarge(decls.len()));
        }
        for (name, aliases) in decls {
            let decl = SymbolDecl {
                name: name.as_ref().to_string(),
                aliases: aliases.iter().map(|a| a.as_ref().to_string()).collect(),
            };
            for n in std::iter::once(&decl.name).chain(decl.aliases.iter()) {
                if !is_valid_name(n) {
                    return Err(TermError::InvalidName(n.clone()));
                }
                let taken = symbols
                    .iter()
                    .any(|s| s.name == *n || s.aliases.iter().any(|a| a == n));
                if taken {
                    return Err(TermError::DuplicateName(n.clone()));
                }
            }
            symbols.push(decl);
        }
        Ok(Alphabet { symbols })
    }

    /// Alphabet whose symbols have no aliases.
    pub fn from_names(names: &[&str]) -> Result<Self, TermError> {
        let decls: Vec<(&str, &[&str])> = names.iter().map(|n| (*n, &[][..])).collect();
        Alphabet::new(&decls)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> impl Iterator<Item = Sym> + '_ {
        (0..self.symbols.len()).map(|i| Sym(i as u8))
    }

    pub fn sym(&self, rank: usize) -> Option<Sym> {
        (rank < self.symbols.len()).then_some(Sym(rank as u8))
    }

    pub fn name(&self, sym: Sym) -> &str {
        &self.symbols[sym.rank()].name
    }

    pub fn aliases(&self, sym: Sym) -> &[String] {
        &self.symbols[sym.rank()].aliases
    }

    /// Resolves a primary name or alias.
    pub fn lookup(&self, name: &str) -> Option<Sym> {
        self.symbols
            .iter()
            .position(|s| s.name == name || s.aliases.iter().any(|a| a == name))
            .map(|i| Sym(i as u8))
    }

    /// Symbol by name, panicking if absent. Intended for built-in tables.
    pub fn get(&self, name: &str) -> Sym {
        self.lookup(name)
            .unwrap_or_else(|| panic!("unknown generator {name:?}"))
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&s.name)?;
            for a in &s.aliases {
                write!(f, "/{a}")?;
            }
        }
        Ok(())
    }
}

/// Identifier grammar shared by generators and defined names: a letter
/// followed by letters, digits or `_`.
pub fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() => chars.all(|c| c.is_alphanumeric() || c == '_'),
        _ => false,
    }
}
