//! Words in the free monoid over an alphabet.

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::ops::Deref;

use smallvec::SmallVec;

use crate::alphabet::{Alphabet, Sym};

/// A finite sequence of generator symbols. The empty word is the unit.
///
/// Words are ordered graded-lexicographically: shorter words first, then by
/// symbol rank from the left.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(SmallVec<[Sym; 8]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn from_syms(syms: &[Sym]) -> Self {
        Word(SmallVec::from_slice(syms))
    }

    pub fn letter(s: Sym) -> Self {
        let mut w = SmallVec::new();
        w.push(s);
        Word(w)
    }

    pub fn power(s: Sym, n: usize) -> Self {
        Word(std::iter::repeat(s).take(n).collect())
    }

    pub fn push(&mut self, s: Sym) {
        self.0.push(s);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = SmallVec::with_capacity(self.len() + other.len());
        out.extend_from_slice(&self.0);
        out.extend_from_slice(&other.0);
        Word(out)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Concatenation of `self[..at]`, `middle` and `self[at + cut..]`.
    pub fn splice(&self, at: usize, cut: usize, middle: &Word) -> Word {
        let mut out = SmallVec::with_capacity(self.len() - cut + middle.len());
        out.extend_from_slice(&self.0[..at]);
        out.extend_from_slice(&middle.0);
        out.extend_from_slice(&self.0[at + cut..]);
        Word(out)
    }

    /// Leftmost position where `pattern` occurs as a contiguous subword.
    pub fn find(&self, pattern: &[Sym]) -> Option<usize> {
        if pattern.is_empty() || pattern.len() > self.len() {
            return None;
        }
        self.0.windows(pattern.len()).position(|w| w == pattern)
    }

    pub fn contains_subword(&self, pattern: &[Sym]) -> bool {
        self.find(pattern).is_some()
    }

    /// Number of occurrences of `s`.
    pub fn count(&self, s: Sym) -> usize {
        self.0.iter().filter(|&&t| t == s).count()
    }

    /// Maximal runs of equal symbols, as `(symbol, run length)`.
    pub fn runs(&self) -> Vec<(Sym, usize)> {
        let mut out: Vec<(Sym, usize)> = Vec::new();
        for &s in &self.0 {
            match out.last_mut() {
                Some((t, n)) if *t == s => *n += 1,
                _ => out.push((s, 1)),
            }
        }
        out
    }

    /// Whether the symbols are in nondecreasing rank order.
    pub fn is_sorted(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// Exponent vector of a sorted word (one entry per alphabet symbol).
    pub fn exponents(&self, alphabet_len: usize) -> Vec<u32> {
        let mut e = vec![0u32; alphabet_len];
        for s in &self.0 {
            e[s.rank()] += 1;
        }
        e
    }

    /// The sorted word with the given exponent vector.
    pub fn from_exponents(exps: &[u32]) -> Word {
        let mut w = SmallVec::new();
        for (rank, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                w.push(Sym(rank as u8));
            }
        }
        Word(w)
    }

    /// Text form such as `X^2*Y*κ`; the unit prints as `1`.
    pub fn to_text(&self, alphabet: &Alphabet) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        for (i, (s, n)) in self.runs().into_iter().enumerate() {
            if i > 0 {
                out.push('*');
            }
            out.push_str(alphabet.name(s));
            if n > 1 {
                let _ = write!(out, "^{n}");
            }
        }
        out
    }
}

impl Deref for Word {
    type Target = [Sym];

    fn deref(&self) -> &[Sym] {
        &self.0
    }
}

impl FromIterator<Sym> for Word {
    fn from_iter<I: IntoIterator<Item = Sym>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
