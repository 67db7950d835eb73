//! Ambiguity enumeration for the diamond lemma.

use crate::element::{Element, Terms};
use crate::element::add_scaled;
use crate::rewrite::system::ReductionSystem;
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AmbiguityKind {
    /// A proper suffix of one lhs is a prefix of another.
    Overlap,
    /// One lhs occurs inside another.
    Inclusion,
}

/// Both reductions of one ambiguous word, carried to normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapReport {
    pub word: Word,
    pub kind: AmbiguityKind,
    /// Indices of the two rules involved (first applied on the left).
    pub rules: (usize, usize),
    pub left_result: Element,
    pub right_result: Element,
    pub resolvable: bool,
    /// Whether one of the two rules is a plain commutation `ba -> ab`.
    pub involves_commutation: bool,
}

impl ReductionSystem {
    /// One report per overlap and inclusion ambiguity.
    pub fn check_confluence(&self) -> Vec<OverlapReport> {
        let rules = self.rules();
        let mut out = Vec::new();
        for (i, r1) in rules.iter().enumerate() {
            for (j, r2) in rules.iter().enumerate() {
                let (p, q) = (&r1.lhs, &r2.lhs);
                // overlaps: suffix of p of length t equals prefix of q
                for t in 1..p.len().min(q.len()) {
                    if p[p.len() - t..] != q[..t] {
                        continue;
                    }
                    let tail = Word::from_syms(&q[t..]);
                    let head = Word::from_syms(&p[..p.len() - t]);
                    let word = p.concat(&tail);
                    let left = self.reduce_after(&r1.rhs, &Word::empty(), &tail);
                    let right = self.reduce_after(&r2.rhs, &head, &Word::empty());
                    out.push(self.report(word, AmbiguityKind::Overlap, (i, j), left, right));
                }
                // inclusions: q occurs strictly inside p
                if i != j && q.len() < p.len() {
                    let mut start = 0;
                    while let Some(pos) = Word::from_syms(&p[start..]).find(q) {
                        let at = start + pos;
                        let head = Word::from_syms(&p[..at]);
                        let tail = Word::from_syms(&p[at + q.len()..]);
                        let left = self.reduce_after(&r1.rhs, &Word::empty(), &Word::empty());
                        let right = self.reduce_after(&r2.rhs, &head, &tail);
                        out.push(self.report(p.clone(), AmbiguityKind::Inclusion, (i, j), left, right));
                        start = at + 1;
                    }
                }
            }
        }
        out
    }

    /// Normal form of `head * e * tail`, by rewriting only.
    fn reduce_after(&self, e: &Element, head: &Word, tail: &Word) -> Element {
        let mut acc = Terms::new();
        for (w, c) in e.terms() {
            let full = head.concat(w).concat(tail);
            let part = self.normal_form_by_rewriting(&Element::word(self.alphabet(), full));
            add_scaled(&mut acc, part.terms(), c);
        }
        Element::from_terms(self.alphabet(), acc)
    }

    fn report(
        &self,
        word: Word,
        kind: AmbiguityKind,
        rules: (usize, usize),
        left: Element,
        right: Element,
    ) -> OverlapReport {
        let rs = self.rules();
        OverlapReport {
            word,
            kind,
            rules,
            resolvable: left == right,
            left_result: left,
            right_result: right,
            involves_commutation: rs[rules.0].is_commutation() || rs[rules.1].is_commutation(),
        }
    }
}
