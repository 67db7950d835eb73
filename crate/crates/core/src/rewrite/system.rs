use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::One;

use crate::alphabet::{Alphabet, Sym};
use crate::element::{add_scaled, add_term, Element, Terms};
use crate::error::{RewriteError, TermError};
use crate::rewrite::order::TermOrder;
use crate::scalar::Scalar;
use crate::word::Word;

/// A rewriting rule `lhs -> rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Element,
}

impl Rule {
    /// Whether the rule just swaps two letters (`ba -> ab`).
    pub fn is_commutation(&self) -> bool {
        self.lhs.len() == 2
            && self.rhs.len() == 1
            && self.rhs.coeff(&self.lhs.reversed()).is_one()
    }

    pub fn to_text(&self) -> String {
        format!(
            "{} -> {}",
            self.lhs.to_text(self.rhs.alphabet()),
            self.rhs.to_text()
        )
    }
}

/// A rhs word that does not lie strictly below its rule's lhs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule: usize,
    pub lhs: Word,
    pub word: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TerminationReport {
    pub terminating: bool,
    pub violations: Vec<Violation>,
}

fn termination_report(rules: &[Rule], order: &TermOrder) -> TerminationReport {
    let mut violations = Vec::new();
    for (i, r) in rules.iter().enumerate() {
        for w in r.rhs.terms().keys() {
            if !order.less(w, &r.lhs) {
                violations.push(Violation {
                    rule: i,
                    lhs: r.lhs.clone(),
                    word: w.clone(),
                });
            }
        }
    }
    TerminationReport {
        terminating: violations.is_empty(),
        violations,
    }
}

/// Collects rules before sealing them into a [`ReductionSystem`].
#[derive(Debug, Clone)]
pub struct SystemBuilder {
    alphabet: Arc<Alphabet>,
    rules: Vec<Rule>,
    order: TermOrder,
}

impl SystemBuilder {
    pub fn new(alphabet: Arc<Alphabet>, order: TermOrder) -> Self {
        SystemBuilder {
            alphabet,
            rules: Vec::new(),
            order,
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// Appends a rule; earlier rules have higher priority.
    pub fn rule(&mut self, lhs: Word, rhs: Element) -> Result<&mut Self, RewriteError> {
        if !Arc::ptr_eq(&self.alphabet, rhs.alphabet()) && **rhs.alphabet() != *self.alphabet {
            return Err(TermError::AlphabetMismatch.into());
        }
        if lhs.len() < 2 {
            return Err(RewriteError::ShortLhs(lhs.to_text(&self.alphabet)));
        }
        if self.rules.iter().any(|r| r.lhs == lhs) {
            return Err(RewriteError::DuplicateLhs(lhs.to_text(&self.alphabet)));
        }
        self.rules.push(Rule { lhs, rhs });
        Ok(self)
    }

    pub fn check_termination(&self) -> TerminationReport {
        termination_report(&self.rules, &self.order)
    }

    /// Seals the system. Fails if some rule does not decrease under the order.
    pub fn build(self) -> Result<ReductionSystem, RewriteError> {
        if self.order.weight.len() != self.alphabet.len() {
            return Err(RewriteError::WeightLength {
                expected: self.alphabet.len(),
                found: self.order.weight.len(),
            });
        }
        let report = self.check_termination();
        if !report.terminating {
            let msgs = report
                .violations
                .iter()
                .map(|v| {
                    format!(
                        "{} is not below {}",
                        v.word.to_text(&self.alphabet),
                        v.lhs.to_text(&self.alphabet)
                    )
                })
                .collect();
            return Err(RewriteError::NonTerminating(msgs));
        }
        let mut sys = ReductionSystem {
            alphabet: self.alphabet,
            rules: self.rules,
            order: self.order,
            pair_index: HashMap::new(),
            confluent: false,
            word_memo: Mutex::new(HashMap::new()),
            letter_memo: Mutex::new(HashMap::new()),
        };
        sys.confluent = sys.check_confluence().iter().all(|r| r.resolvable);
        if sys.confluent && sys.rules.iter().all(|r| r.lhs.len() == 2) {
            sys.pair_index = sys
                .rules
                .iter()
                .enumerate()
                .map(|(i, r)| ((r.lhs[0], r.lhs[1]), i))
                .collect();
        }
        Ok(sys)
    }
}

/// A terminating set of rewriting rules over one alphabet.
///
/// Normal forms are memoised per word. For confluent systems whose rules all
/// have two-letter left-hand sides, normal forms are computed by
/// right-multiplying normal words one letter at a time; otherwise by
/// rewriting the leftmost occurrence of the highest-priority applicable rule.
/// The diamond lemma makes both routes agree on confluent systems.
pub struct ReductionSystem {
    alphabet: Arc<Alphabet>,
    rules: Vec<Rule>,
    order: TermOrder,
    pair_index: HashMap<(Sym, Sym), usize>,
    confluent: bool,
    word_memo: Mutex<HashMap<Word, Arc<Terms>>>,
    letter_memo: Mutex<HashMap<(Word, Sym), Arc<Terms>>>,
}

impl fmt::Debug for ReductionSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ReductionSystem")
            .field("alphabet", &self.alphabet.to_string())
            .field("rules", &self.rules.len())
            .field("confluent", &self.confluent)
            .finish()
    }
}

impl ReductionSystem {
    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    /// Whether every ambiguity resolved when the system was built.
    pub fn is_confluent(&self) -> bool {
        self.confluent
    }

    pub fn rule_for(&self, lhs: &Word) -> Option<&Rule> {
        self.rules.iter().find(|r| r.lhs == *lhs)
    }

    pub fn check_termination(&self) -> TerminationReport {
        termination_report(&self.rules, &self.order)
    }

    pub fn is_irreducible_word(&self, w: &Word) -> bool {
        self.rules.iter().all(|r| !w.contains_subword(&r.lhs))
    }

    pub fn is_normal(&self, e: &Element) -> bool {
        e.terms().keys().all(|w| self.is_irreducible_word(w))
    }

    /// All irreducible words of length at most `max_len`, by exhaustive scan.
    pub fn irreducible_words(&self, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut frontier = vec![Word::empty()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for s in self.alphabet.symbols() {
                    let mut v = w.clone();
                    v.push(s);
                    // a reducible prefix stays reducible, so pruning is exact
                    if self.is_irreducible_word(&v) {
                        next.push(v);
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    pub fn try_normal_form(&self, e: &Element) -> Result<Element, TermError> {
        if !Arc::ptr_eq(&self.alphabet, e.alphabet()) && **e.alphabet() != *self.alphabet {
            return Err(TermError::AlphabetMismatch);
        }
        let mut acc = Terms::new();
        for (w, c) in e.terms() {
            let part = self.word_normal_form(w);
            add_scaled(&mut acc, &part, c);
        }
        Ok(Element::from_canonical(&self.alphabet, acc))
    }

    /// The unique irreducible element equal to `e` (panics on alphabet mismatch).
    pub fn normal_form(&self, e: &Element) -> Element {
        self.try_normal_form(e)
            .expect("element over a different alphabet")
    }

    /// Normal form computed only by leftmost/highest-priority rewriting,
    /// bypassing the letter-by-letter route.
    pub fn normal_form_by_rewriting(&self, e: &Element) -> Element {
        let mut acc = Terms::new();
        for (w, c) in e.terms() {
            add_scaled(&mut acc, &self.rewrite_word(w), c);
        }
        Element::from_canonical(&self.alphabet, acc)
    }

    pub(crate) fn word_normal_form(&self, w: &Word) -> Arc<Terms> {
        if self.pair_index.is_empty() {
            self.rewrite_word(w)
        } else {
            Arc::new(self.mul_normal_word(&Word::empty(), w))
        }
    }

    /// `nf(nf(a) * nf(b))`
    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let a = if self.is_normal(a) { a.clone() } else { self.normal_form(a) };
        let b = if self.is_normal(b) { b.clone() } else { self.normal_form(b) };
        let mut acc = Terms::new();
        for (u, x) in a.terms() {
            for (v, y) in b.terms() {
                let part = if self.pair_index.is_empty() {
                    (*self.rewrite_word(&u.concat(v))).clone()
                } else {
                    self.mul_normal_word(u, v)
                };
                add_scaled(&mut acc, &part, &(x * y));
            }
        }
        Element::from_canonical(&self.alphabet, acc)
    }

    pub fn pow(&self, a: &Element, n: u32) -> Element {
        let mut out = Element::one(&self.alphabet);
        for _ in 0..n {
            out = self.mul(&out, a);
        }
        out
    }

    /// Reduced commutator `nf(ab - ba)`.
    pub fn commutator(&self, a: &Element, b: &Element) -> Element {
        &self.mul(a, b) - &self.mul(b, a)
    }

    fn rewrite_word(&self, w: &Word) -> Arc<Terms> {
        if let Some(hit) = self.word_memo.lock().expect("memo").get(w) {
            return hit.clone();
        }
        let redex = self
            .rules
            .iter()
            .find_map(|r| w.find(&r.lhs).map(|pos| (r, pos)));
        let result = match redex {
            None => {
                let mut t = Terms::new();
                t.insert(w.clone(), Scalar::one());
                t
            }
            Some((rule, pos)) => {
                let mut acc = Terms::new();
                for (v, c) in rule.rhs.terms() {
                    let next = w.splice(pos, rule.lhs.len(), v);
                    add_scaled(&mut acc, &self.rewrite_word(&next), c);
                }
                acc
            }
        };
        let result = Arc::new(result);
        self.word_memo
            .lock()
            .expect("memo")
            .insert(w.clone(), result.clone());
        result
    }

    /// `nf(m * x)` for an irreducible word `m`.
    fn mul_normal_letter(&self, m: &Word, x: Sym) -> Arc<Terms> {
        let key = (m.clone(), x);
        if let Some(hit) = self.letter_memo.lock().expect("memo").get(&key) {
            return hit.clone();
        }
        let rule = m
            .last()
            .and_then(|&y| self.pair_index.get(&(y, x)))
            .map(|&i| &self.rules[i]);
        let result = match rule {
            // m is irreducible and every lhs has length two, so only the new
            // junction can be a redex
            None => {
                let mut w = m.clone();
                w.push(x);
                let mut t = Terms::new();
                t.insert(w, Scalar::one());
                t
            }
            Some(rule) => {
                let prefix = Word::from_syms(&m[..m.len() - 1]);
                let mut acc = Terms::new();
                for (v, c) in rule.rhs.terms() {
                    add_scaled(&mut acc, &self.mul_normal_word(&prefix, v), c);
                }
                acc
            }
        };
        let result = Arc::new(result);
        self.letter_memo
            .lock()
            .expect("memo")
            .insert(key, result.clone());
        result
    }

    /// `nf(m * w)` for an irreducible word `m` and any word `w`.
    fn mul_normal_word(&self, m: &Word, w: &Word) -> Terms {
        let mut cur = Terms::new();
        add_term(&mut cur, m.clone(), Scalar::one());
        for &x in w.iter() {
            let mut next = Terms::new();
            for (u, c) in &cur {
                add_scaled(&mut next, &self.mul_normal_letter(u, x), c);
            }
            cur = next;
        }
        cur
    }
}
