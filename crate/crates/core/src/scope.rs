//! Named elements visible to the expression parser.

use std::sync::Arc;

use crate::alphabet::{is_valid_name, Alphabet};
use crate::element::Element;
use crate::error::TermError;
use crate::parse::NameScope;

/// A named element such as `δ = A + B + C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Defined {
    pub name: String,
    pub aliases: Vec<String>,
    pub value: Element,
}

impl Defined {
    pub fn answers_to(&self, name: &str) -> bool {
        self.name == name || self.aliases.iter().any(|a| a == name)
    }
}

/// Generators plus defined names, all distinct.
#[derive(Debug, Clone)]
pub struct Scope {
    alphabet: Arc<Alphabet>,
    defined: Vec<Defined>,
}

impl Scope {
    pub fn new(alphabet: Arc<Alphabet>) -> Self {
        Scope {
            alphabet,
            defined: Vec::new(),
        }
    }

    pub fn define(&mut self, name: &str, aliases: &[&str], value: Element) -> Result<(), TermError> {
        if !value.same_alphabet(&Element::zero(&self.alphabet)) {
            return Err(TermError::AlphabetMismatch);
        }
        for n in std::iter::once(&name).chain(aliases.iter()) {
            if !is_valid_name(n) {
                return Err(TermError::InvalidName(n.to_string()));
            }
            if self.alphabet.lookup(n).is_some() || self.get(n).is_some() {
                return Err(TermError::DuplicateName(n.to_string()));
            }
        }
        self.defined.push(Defined {
            name: name.to_string(),
            aliases: aliases.iter().map(|a| a.to_string()).collect(),
            value,
        });
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&Defined> {
        self.defined.iter().find(|d| d.answers_to(name))
    }

    pub fn defined(&self) -> &[Defined] {
        &self.defined
    }

    /// Applies `f` to every stored value.
    pub fn map_values(&mut self, mut f: impl FnMut(&Element) -> Element) {
        for d in &mut self.defined {
            d.value = f(&d.value);
        }
    }
}

impl NameScope for Scope {
    fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    fn defined(&self, name: &str) -> Option<&Element> {
        self.get(name).map(|d| &d.value)
    }

    fn canonical_defined_name(&self, name: &str) -> Option<&str> {
        self.get(name).map(|d| d.name.as_str())
    }
}
