//! Monoid orders used to certify termination of a reduction system.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};

use crate::alphabet::{Alphabet, Sym};
use crate::weight::WeightVector;
use crate::word::Word;

/// How words of equal weight and equal length are compared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tiebreak {
    /// Lexicographic by symbol rank.
    Lex,
    /// `u < w` iff `u` is obtained from `w` by a nonempty sequence of
    /// elementary operations: swapping two letters that stand in the wrong
    /// rank order, or replacing a letter of `chain` by its predecessor in
    /// `chain`. Both moves make a word lex-smaller, so this refines nothing
    /// beyond [`Tiebreak::Lex`] and is well founded.
    ElementaryOps { chain: Vec<Sym> },
}

/// Compares words by total weight, then length, then the tiebreak.
///
/// Weight and length are additive and the tiebreak is only consulted on words
/// of equal length, so the order is compatible with concatenation. Descending
/// chains stabilise in weight, then in length, and then move within a finite
/// set, so the order is well founded even with zero-weight generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermOrder {
    pub weight: WeightVector,
    pub tiebreak: Tiebreak,
}

impl TermOrder {
    /// Length order with lexicographic tiebreak (deg-lex).
    pub fn deglex(alphabet: &Alphabet) -> Self {
        TermOrder {
            weight: WeightVector::uniform(alphabet.len()),
            tiebreak: Tiebreak::Lex,
        }
    }

    pub fn weighted(weight: WeightVector) -> Self {
        TermOrder {
            weight,
            tiebreak: Tiebreak::Lex,
        }
    }

    /// Whether `smaller` is strictly below `larger`.
    pub fn less(&self, smaller: &Word, larger: &Word) -> bool {
        match self.weight.of_word(smaller).cmp(&self.weight.of_word(larger)) {
            Ordering::Less => return true,
            Ordering::Greater => return false,
            Ordering::Equal => {}
        }
        match smaller.len().cmp(&larger.len()) {
            Ordering::Less => return true,
            Ordering::Greater => return false,
            Ordering::Equal => {}
        }
        match &self.tiebreak {
            Tiebreak::Lex => smaller[..] < larger[..],
            Tiebreak::ElementaryOps { chain } => reachable_by_elementary_ops(larger, smaller, chain),
        }
    }
}

/// Breadth-first search from `from` for `to` under elementary operations.
fn reachable_by_elementary_ops(from: &Word, to: &Word, chain: &[Sym]) -> bool {
    if from == to || from.len() != to.len() {
        return false;
    }
    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    seen.insert(from.clone());
    queue.push_back(from.clone());
    while let Some(w) = queue.pop_front() {
        for next in elementary_moves(&w, chain) {
            // every move is lex-decreasing, so anything lex-below `to` is a dead end
            if next[..] < to[..] {
                continue;
            }
            if next == *to {
                return true;
            }
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    false
}

fn elementary_moves(w: &Word, chain: &[Sym]) -> Vec<Word> {
    let mut out = Vec::new();
    let syms: Vec<Sym> = w.to_vec();
    for i in 0..syms.len() {
        for j in i + 1..syms.len() {
            if syms[j] < syms[i] {
                let mut v = syms.clone();
                v.swap(i, j);
                out.push(Word::from_syms(&v));
            }
        }
        if let Some(p) = chain.iter().position(|&c| c == syms[i]) {
            if p > 0 {
                let mut v = syms.clone();
                v[i] = chain[p - 1];
                out.push(Word::from_syms(&v));
            }
        }
    }
    out
}
