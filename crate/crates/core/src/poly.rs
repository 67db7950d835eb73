//! Commutative polynomials over ℚ in a fixed number of variables.
//!
//! Used for Casimir corrections in `α, β, γ, δ` and for polynomials in the
//! central elements `ι, κ, λ, μ`. Evaluation into a noncommutative algebra is
//! only meaningful when the substituted elements commute with each other.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::alphabet::{Alphabet, Sym};
use crate::element::Element;
use crate::error::{ParseError, TermError};
use crate::parse::parse_element;
use crate::presentations::Presentation;
use crate::scalar::Scalar;
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Scalar::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Poly::monomial(e, Scalar::one())
    }

    pub fn monomial(exponents: Vec<u32>, c: Scalar) -> Self {
        let mut p = Poly::zero(exponents.len());
        p.add_term(exponents, c);
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: Scalar) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
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

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponents: &[u32]) -> Scalar {
        self.terms.get(exponents).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a * c);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut out = Poly::one(self.nvars);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Substitutes `values[i]` for variable `i`; all values share one arity.
    pub fn substitute(&self, values: &[Poly]) -> Poly {
        assert_eq!(values.len(), self.nvars, "one value per variable");
        let m = values.first().map_or(0, |v| v.nvars);
        let mut out = Poly::zero(m);
        for (e, c) in &self.terms {
            let mut t = Poly::constant(m, c.clone());
            for (v, &k) in values.iter().zip(e) {
                t = &t * &v.pow(k);
            }
            out = &out + &t;
        }
        out
    }

    /// Evaluates at pairwise commuting elements of `p`, in normal form.
    pub fn evaluate(&self, p: &Presentation, values: &[Element]) -> Element {
        assert_eq!(values.len(), self.nvars, "one value per variable");
        let mut out = Element::zero(p.alphabet());
        for (e, c) in &self.terms {
            let mut t = Element::scalar(p.alphabet(), c.clone());
            for (v, &k) in values.iter().zip(e) {
                if k > 0 {
                    t = p.mul(&t, &p.pow(v, k));
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Reads `e` commutatively: each word becomes the monomial of its letter
    /// counts over `vars`. Words using other letters are returned as errors.
    pub fn from_element(e: &Element, vars: &[Sym]) -> Result<Poly, Vec<Word>> {
        let mut out = Poly::zero(vars.len());
        let mut bad = Vec::new();
        for (w, c) in e.terms() {
            let mut exps = vec![0u32; vars.len()];
            let mut ok = true;
            for s in w.iter() {
                match vars.iter().position(|v| v == s) {
                    Some(i) => exps[i] += 1,
                    None => ok = false,
                }
            }
            if ok {
                out.add_term(exps, c.clone());
            } else {
                bad.push(w.clone());
            }
        }
        if bad.is_empty() {
            Ok(out)
        } else {
            Err(bad)
        }
    }

    /// The same polynomial as an element of the free algebra on `alphabet`
    /// (variable `i` is the symbol of rank `i`), with sorted words.
    pub fn to_element(&self, alphabet: &Arc<Alphabet>) -> Element {
        assert_eq!(alphabet.len(), self.nvars);
        Element::from_terms(
            alphabet,
            self.terms
                .iter()
                .map(|(e, c)| (Word::from_exponents(e), c.clone())),
        )
    }

    /// Parses with the shared expression grammar, reading products
    /// commutatively. `names` declares the variables (with `/`-aliases).
    pub fn parse(text: &str, vars: &Arc<Alphabet>) -> Result<Poly, ParseError> {
        let e = parse_element(text, vars)?;
        let syms: Vec<Sym> = vars.symbols().collect();
        Ok(Poly::from_element(&e, &syms).expect("every word is over the variables"))
    }

    pub fn to_text(&self, vars: &Arc<Alphabet>) -> String {
        self.to_element(vars).to_text()
    }
}

/// An alphabet of variable names such as `["ι/iota", "κ/kappa"]`.
pub fn variables(decls: &[&str]) -> Result<Arc<Alphabet>, TermError> {
    let split: Vec<(&str, Vec<&str>)> = decls
        .iter()
        .map(|d| {
            let mut it = d.split('/');
            (it.next().unwrap_or_default(), it.collect())
        })
        .collect();
    let refs: Vec<(&str, &[&str])> = split.iter().map(|(n, a)| (*n, a.as_slice())).collect();
    Ok(Arc::new(Alphabet::new(&refs)?))
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars, "polynomial arity mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, other: &Poly) -> Poly {
        self + &(-other)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Scalar::one())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars, "polynomial arity mismatch");
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let vars = variables(&refs).map_err(|_| fmt::Error)?;
        f.write_str(&self.to_text(&vars))
    }
}
