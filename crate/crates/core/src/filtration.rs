//! Weighted filtrations on a presentation with a PBW basis.
//!
//! A weight vector assigns each generator a nonnegative integer. Level `n` of
//! the induced chain of subspaces is spanned by the irreducible words of
//! weight at most `n`. For the Bannai–Ito algebra this chain is compatible
//! with multiplication exactly when [`is_filtration`] holds.

use std::sync::Arc;

use crate::element::Element;
use crate::error::FiltrationError;
use crate::presentations::{bannai_ito, Presentation};
use crate::weight::WeightVector;
use crate::word::Word;

/// The three inequalities on `(w_X, w_Y, w_Z, w_κ, w_λ, w_μ)`:
/// `max(w_Z, w_κ) ≤ w_X + w_Y`, `max(w_X, w_λ) ≤ w_Y + w_Z`,
/// `max(w_Y, w_μ) ≤ w_Z + w_X`.
pub fn is_filtration(w: &WeightVector) -> Result<bool, FiltrationError> {
    let [x, y, z, k, l, m]: [u32; 6] = w.as_slice().try_into().map_err(|_| {
        FiltrationError::WeightLength {
            expected: 6,
            found: w.len(),
        }
    })?;
    Ok(z.max(k) <= x + y && x.max(l) <= y + z && y.max(m) <= z + x)
}

/// Two basis monomials whose product leaves the expected level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductWitness {
    pub left: Word,
    pub right: Word,
    pub product: Element,
    pub bound: u64,
    pub degree: u64,
}

#[derive(Debug, Clone)]
pub struct Filtration {
    presentation: Arc<Presentation>,
    weights: WeightVector,
}

impl Filtration {
    pub fn new(presentation: Arc<Presentation>, weights: WeightVector) -> Result<Self, FiltrationError> {
        if weights.len() != presentation.alphabet().len() {
            return Err(FiltrationError::WeightLength {
                expected: presentation.alphabet().len(),
                found: weights.len(),
            });
        }
        Ok(Filtration {
            presentation,
            weights,
        })
    }

    pub fn bannai_ito(weights: WeightVector) -> Result<Self, FiltrationError> {
        Filtration::new(bannai_ito(), weights)
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.presentation
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    /// Whether no rule raises the weight: the left-hand side weighs at least
    /// as much as every word on the right. Sufficient for compatibility with
    /// products; for the Bannai–Ito rules it is equivalent to the inequalities.
    pub fn rules_respect_weights(&self) -> bool {
        self.presentation.system().rules().iter().all(|r| {
            let lhs = self.weights.of_word(&r.lhs);
            r.rhs.terms().keys().all(|w| self.weights.of_word(w) <= lhs)
        })
    }

    /// Largest weight of a basis word in `e`; `-1` for zero. `e` must already
    /// be in normal form.
    pub fn weighted_degree(&self, e: &Element) -> Result<i64, FiltrationError> {
        if !e.same_alphabet(&Element::zero(self.presentation.alphabet())) {
            return Err(crate::error::TermError::AlphabetMismatch.into());
        }
        let sys = self.presentation.system();
        let mut best = -1i64;
        for w in e.terms().keys() {
            if !sys.is_irreducible_word(w) {
                return Err(FiltrationError::NotIrreducible(w.clone()));
            }
            best = best.max(self.weights.of_word(w) as i64);
        }
        Ok(best)
    }

    /// The terms of `nf(e)` of weight at least `n`, i.e. `e` with everything
    /// in level `n - 1` dropped.
    pub fn leading_form(&self, e: &Element, n: u64) -> Element {
        let nf = self.presentation.normal_form(e);
        Element::from_terms(
            self.presentation.alphabet(),
            nf.terms()
                .iter()
                .filter(|(w, _)| self.weights.of_word(w) >= n)
                .map(|(w, c)| (w.clone(), c.clone())),
        )
    }

    /// Whether `a ≡ b` modulo level `level`, i.e. `nf(a - b)` has weighted
    /// degree at most `level`. A negative level means exact equality.
    pub fn congruent(&self, a: &Element, b: &Element, level: i64) -> bool {
        let d = self.presentation.normal_form(&(a - b));
        self.weighted_degree(&d).expect("normal form is irreducible") <= level
    }

    /// Basis words of weight at most `degree`. Words are additionally capped
    /// at `max_len` letters, which matters once some weight is zero.
    pub fn monomials_up_to(&self, degree: u64, max_len: usize) -> Vec<Word> {
        self.presentation
            .system()
            .irreducible_words(max_len)
            .into_iter()
            .filter(|w| self.weights.of_word(w) <= degree)
            .collect()
    }

    /// Checks `nf(u·v)` has weight at most `wt(u) + wt(v)` for all basis words
    /// `u, v` from [`Filtration::monomials_up_to`]. Returns the first failure.
    pub fn check_product(&self, sample_degree: u64, max_len: usize) -> Result<(), ProductWitness> {
        let monos = self.monomials_up_to(sample_degree, max_len);
        let a = self.presentation.alphabet();
        for u in &monos {
            let eu = Element::word(a, u.clone());
            let wu = self.weights.of_word(u);
            for v in &monos {
                let bound = wu + self.weights.of_word(v);
                let product = self.presentation.mul(&eu, &Element::word(a, v.clone()));
                let degree = product
                    .terms()
                    .keys()
                    .map(|w| self.weights.of_word(w))
                    .max()
                    .unwrap_or(0);
                if degree > bound {
                    return Err(ProductWitness {
                        left: u.clone(),
                        right: v.clone(),
                        product,
                        bound,
                        degree,
                    });
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn w(s: &str) -> WeightVector {
        WeightVector::parse(s).unwrap()
    }

    #[test]
    fn inequalities() {
        assert!(is_filtration(&w("4,4,6,8,9,9")).unwrap());
        assert!(is_filtration(&w("1,1,2,0,0,0")).unwrap());
        assert!(!is_filtration(&w("0,0,1,0,0,0")).unwrap());
        assert!(is_filtration(&w("1,1,1")).is_err());
    }

    #[test]
    fn degrees() {
        let f = Filtration::bannai_ito(w("1,1,2,0,0,0")).unwrap();
        let b = f.presentation().clone();
        assert_eq!(f.weighted_degree(&b.parse("X*Y*Z*κ").unwrap()).unwrap(), 4);
        assert_eq!(f.weighted_degree(&Element::zero(b.alphabet())).unwrap(), -1);
        let raw = crate::parse::parse_element("Y*X", &*b).unwrap();
        assert!(matches!(
            f.weighted_degree(&raw),
            Err(FiltrationError::NotIrreducible(_))
        ));
        // leading_form reduces first
        assert_eq!(f.leading_form(&raw, 2), b.parse("-X*Y + Z").unwrap());
    }

    #[test]
    fn product_witness() {
        let f = Filtration::bannai_ito(w("0,0,1,0,0,0")).unwrap();
        assert!(!f.rules_respect_weights());
        let witness = f.check_product(3, 2).unwrap_err();
        let b = f.presentation();
        assert_eq!(witness.product, b.parse("Y*X").unwrap());
        assert_eq!(witness.bound, 0);
        assert_eq!(witness.degree, 1);
    }

    #[test]
    fn congruence_at_level() {
        let f = Filtration::bannai_ito(w("1,1,2,0,0,0")).unwrap();
        let b = f.presentation().clone();
        let z = b.named("Z");
        let iota = b.named("ι");
        assert!(f.congruent(&iota, &z, 1));
        assert!(!f.congruent(&iota, &z, 0));
        let half = Element::scalar(b.alphabet(), ratio(1, 2));
        assert!(f.congruent(&half, &Element::zero(b.alphabet()), 0));
    }
}
