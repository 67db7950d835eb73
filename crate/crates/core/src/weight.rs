use std::fmt;

use crate::alphabet::Sym;
use crate::word::Word;

/// Nonnegative integer weight per generator, indexed by symbol rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<u32>);

impl WeightVector {
    pub fn new(weights: Vec<u32>) -> Self {
        WeightVector(weights)
    }

    /// All weights equal to one, i.e. word length.
    pub fn uniform(len: usize) -> Self {
        WeightVector(vec![1; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn of_sym(&self, s: Sym) -> u64 {
        u64::from(self.0[s.rank()])
    }

    /// Total weight of a word: the monoid homomorphism extending the
    /// per-symbol weights.
    pub fn of_word(&self, w: &Word) -> u64 {
        w.iter().map(|&s| self.of_sym(s)).sum()
    }

    /// Parses `4,4,6,8,9,9`.
    pub fn parse(text: &str) -> Option<Self> {
        text.split(',')
            .map(|p| p.trim().parse::<u32>().ok())
            .collect::<Option<Vec<_>>>()
            .map(WeightVector)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|w| w.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}
