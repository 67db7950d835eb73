//! Formal rational linear combinations of words (elements of the free algebra).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::alphabet::{Alphabet, Sym};
use crate::error::TermError;
use crate::scalar::{self, Scalar};
use crate::word::Word;

/// Canonical term map: words in graded-lex order, no zero coefficients.
pub type Terms = BTreeMap<Word, Scalar>;

/// Adds `c * w` into `terms`, dropping the entry if it cancels.
pub(crate) fn add_term(terms: &mut Terms, w: Word, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match terms.entry(w) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// `acc += scale * part`
pub(crate) fn add_scaled(acc: &mut Terms, part: &Terms, scale: &Scalar) {
    for (w, c) in part {
        add_term(acc, w.clone(), c * scale);
    }
}

/// An element of the free algebra over an alphabet.
#[derive(Clone)]
pub struct Element {
    alphabet: Arc<Alphabet>,
    terms: Terms,
}

impl Element {
    pub fn zero(alphabet: &Arc<Alphabet>) -> Self {
        Element {
            alphabet: alphabet.clone(),
            terms: Terms::new(),
        }
    }

    pub fn one(alphabet: &Arc<Alphabet>) -> Self {
        Self::scalar(alphabet, Scalar::one())
    }

    pub fn scalar(alphabet: &Arc<Alphabet>, c: Scalar) -> Self {
        Self::monomial(alphabet, Word::empty(), c)
    }

    pub fn generator(alphabet: &Arc<Alphabet>, s: Sym) -> Self {
        Self::monomial(alphabet, Word::letter(s), Scalar::one())
    }

    pub fn word(alphabet: &Arc<Alphabet>, w: Word) -> Self {
        Self::monomial(alphabet, w, Scalar::one())
    }

    pub fn monomial(alphabet: &Arc<Alphabet>, w: Word, c: Scalar) -> Self {
        let mut terms = Terms::new();
        add_term(&mut terms, w, c);
        Element {
            alphabet: alphabet.clone(),
            terms,
        }
    }

    /// Collects terms, merging repeated words and dropping zeros.
    pub fn from_terms<I>(alphabet: &Arc<Alphabet>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Word, Scalar)>,
    {
        let mut out = Terms::new();
        for (w, c) in terms {
            add_term(&mut out, w, c);
        }
        Element {
            alphabet: alphabet.clone(),
            terms: out,
        }
    }

    pub(crate) fn from_canonical(alphabet: &Arc<Alphabet>, terms: Terms) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        Element {
            alphabet: alphabet.clone(),
            terms,
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn terms(&self) -> &Terms {
        &self.terms
    }

    pub fn into_terms(self) -> Terms {
        self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Length of the longest word, or `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).max()
    }

    /// The constant if this element is a scalar multiple of the unit.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    pub fn same_alphabet(&self, other: &Element) -> bool {
        Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet
    }

    fn check(&self, other: &Element) -> Result<(), TermError> {
        if self.same_alphabet(other) {
            Ok(())
        } else {
            Err(TermError::AlphabetMismatch)
        }
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element, TermError> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            add_term(&mut terms, w.clone(), c.clone());
        }
        Ok(Element::from_canonical(&self.alphabet, terms))
    }

    pub fn checked_sub(&self, other: &Element) -> Result<Element, TermError> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            add_term(&mut terms, w.clone(), -c);
        }
        Ok(Element::from_canonical(&self.alphabet, terms))
    }

    /// Free-algebra product: bilinear extension of word concatenation.
    pub fn checked_mul(&self, other: &Element) -> Result<Element, TermError> {
        self.check(other)?;
        let mut terms = Terms::new();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                add_term(&mut terms, u.concat(v), a * b);
            }
        }
        Ok(Element::from_canonical(&self.alphabet, terms))
    }

    /// `ab - ba`
    pub fn commutator(&self, other: &Element) -> Result<Element, TermError> {
        self.checked_mul(other)?
            .checked_sub(&other.checked_mul(self)?)
    }

    /// `ab + ba`
    pub fn anticommutator(&self, other: &Element) -> Result<Element, TermError> {
        self.checked_mul(other)?
            .checked_add(&other.checked_mul(self)?)
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero(&self.alphabet);
        }
        let terms = self
            .terms
            .iter()
            .map(|(w, a)| (w.clone(), a * c))
            .collect();
        Element::from_canonical(&self.alphabet, terms)
    }

    /// Unreduced `n`-th power in the free algebra.
    pub fn pow(&self, n: u32) -> Element {
        let mut out = Element::one(&self.alphabet);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Words in reverse order; the canonical involution of the free algebra.
    pub fn reversed(&self) -> Element {
        Element::from_terms(
            &self.alphabet,
            self.terms.iter().map(|(w, c)| (w.reversed(), c.clone())),
        )
    }

    /// Canonical text: graded-lex term order, coefficients as `p/q`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if w.is_empty() {
                out.push_str(&scalar::format_scalar(&abs));
            } else if abs.is_one() {
                out.push_str(&w.to_text(&self.alphabet));
            } else {
                out.push_str(&scalar::format_scalar(&abs));
                out.push('*');
                out.push_str(&w.to_text(&self.alphabet));
            }
        }
        out
    }

    /// JSON form: a list of `{ "word": [...], "coeff": "p/q" }` in canonical order.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<JsonTerm> = self
            .terms
            .iter()
            .map(|(w, c)| JsonTerm {
                word: w.iter().map(|&s| self.alphabet.name(s).to_string()).collect(),
                coeff: scalar::format_scalar(c),
            })
            .collect();
        serde_json::to_value(terms).expect("terms serialize")
    }

    pub fn from_json(alphabet: &Arc<Alphabet>, value: &serde_json::Value) -> Result<Self, TermError> {
        let terms: Vec<JsonTerm> =
            serde_json::from_value(value.clone()).map_err(|e| TermError::Json(e.to_string()))?;
        let mut out = Terms::new();
        for t in terms {
            let w = t
                .word
                .iter()
                .map(|n| {
                    alphabet
                        .lookup(n)
                        .ok_or_else(|| TermError::UnknownSymbol(n.clone()))
                })
                .collect::<Result<Word, _>>()?;
            let c = scalar::parse_scalar(&t.coeff)
                .ok_or_else(|| TermError::BadCoefficient(t.coeff.clone()))?;
            add_term(&mut out, w, c);
        }
        Ok(Element::from_canonical(alphabet, out))
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonTerm {
    word: Vec<String>,
    coeff: String,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.same_alphabet(other) && self.terms == other.terms
    }
}

impl Eq for Element {}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({})", self.to_text())
    }
}

// Operator forms panic on alphabet mismatch; use the `checked_*` methods when
// the operands come from untrusted input.

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.checked_add(rhs).expect("alphabet mismatch in +")
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.checked_sub(rhs).expect("alphabet mismatch in -")
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        self.checked_mul(rhs).expect("alphabet mismatch in *")
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&-Scalar::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Element {
            type Output = Element;
            fn $m(self, rhs: Element) -> Element {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Element> for Element {
            type Output = Element;
            fn $m(self, rhs: &Element) -> Element {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn xy() -> (Arc<Alphabet>, Element, Element) {
        let a = Arc::new(Alphabet::from_names(&["X", "Y"]).unwrap());
        let x = Element::generator(&a, a.get("X"));
        let y = Element::generator(&a, a.get("Y"));
        (a, x, y)
    }

    #[test]
    fn additive_inverse_is_zero() {
        let (_, x, _) = xy();
        assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn image_numerator_of_a() {
        let (a, x, _) = xy();
        let two_x = x.scale(&int(2));
        let f = &two_x - &Element::scalar(&a, int(3));
        let g = &two_x + &Element::one(&a);
        let p = &f * &g;
        assert_eq!(p.to_text(), "-3 - 4*X + 4*X^2");
        let q = p.scale(&ratio(1, 16));
        assert_eq!(q.to_text(), "-3/16 - 1/4*X + 1/4*X^2");
    }

    #[test]
    fn noncommuting_square() {
        let (_, x, y) = xy();
        let s = &x + &y;
        assert_eq!((&s * &s).to_text(), "X^2 + X*Y + Y*X + Y^2");
    }

    #[test]
    fn brackets() {
        let (_, x, y) = xy();
        assert!(x.commutator(&x).unwrap().is_zero());
        assert_eq!(x.anticommutator(&y).unwrap().to_text(), "X*Y + Y*X");
    }

    #[test]
    fn scale_by_zero() {
        let (_, x, y) = xy();
        assert!((&x + &y).scale(&int(0)).is_zero());
    }

    #[test]
    fn alphabet_mismatch_is_an_error() {
        let (_, x, _) = xy();
        let b = Arc::new(Alphabet::from_names(&["A"]).unwrap());
        let a = Element::generator(&b, b.get("A"));
        assert_eq!(x.checked_add(&a), Err(TermError::AlphabetMismatch));
        assert_eq!(x.checked_mul(&a), Err(TermError::AlphabetMismatch));
    }

    #[test]
    fn json_round_trip() {
        let (a, x, y) = xy();
        let e = &(&x * &y).scale(&ratio(1, 16)) - &y.scale(&ratio(1, 8));
        let j = e.to_json();
        assert_eq!(
            j.to_string(),
            r#"[{"coeff":"-1/8","word":["Y"]},{"coeff":"1/16","word":["X","Y"]}]"#
        );
        assert_eq!(Element::from_json(&a, &j).unwrap(), e);
    }
}
