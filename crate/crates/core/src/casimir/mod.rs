//! Central elements: centrality tests, the Casimir class of the Racah
//! algebra, and Casimir elements written as polynomials in `ι, κ, λ, μ`.
//!
//! [`express_casimir`] maps an element through ζ, rewrites `Z` as
//! `ι - X - Y`, reduces in the rebased presentation, and reads the result as a
//! polynomial. Since `ι, κ, λ, μ` are algebraically independent, the
//! polynomial is unique when it exists.

mod rank;

pub use rank::{racah_monomials_by_weight, zeta_rank_check, MonomialReport, RankReport, ZETA_WEIGHTS};

use std::sync::{Arc, OnceLock};

use num_traits::Zero;

use crate::alphabet::{Alphabet, Sym};
use crate::element::Element;
use crate::error::{CasimirError, ParseError};
use crate::linalg::solve;
use crate::morphisms::zeta;
use crate::poly::{variables, Poly};
use crate::presentations::{bi_rebased, racah, rebase_from_iota, rebase_to_iota, Presentation};
use crate::scalar::Scalar;
use crate::word::Word;

/// Whether `[e, t]` reduces to zero for every tester `t`.
pub fn is_central(p: &Presentation, e: &Element, testers: &[Element]) -> bool {
    testers.iter().all(|t| p.commutator(e, t).is_zero())
}

/// [`is_central`] against all generators.
pub fn commutes_with_generators(p: &Presentation, e: &Element) -> bool {
    is_central(p, e, &p.generators())
}

fn casimir_variables() -> &'static Arc<Alphabet> {
    static V: OnceLock<Arc<Alphabet>> = OnceLock::new();
    V.get_or_init(|| variables(&["α/alpha", "β/beta", "γ/gamma", "δ/delta"]).expect("valid names"))
}

fn central_variables() -> &'static Arc<Alphabet> {
    static V: OnceLock<Arc<Alphabet>> = OnceLock::new();
    V.get_or_init(|| variables(&["ι/iota", "κ/kappa", "λ/lambda", "μ/mu"]).expect("valid names"))
}

/// A correction term `Q(α, β, γ, δ)` selecting a member of the Casimir class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CasimirSpec {
    pub correction: Poly,
}

impl CasimirSpec {
    pub fn zero() -> Self {
        CasimirSpec {
            correction: Poly::zero(4),
        }
    }

    /// Parses a polynomial in `α, β, γ, δ` (ASCII aliases accepted).
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        Ok(CasimirSpec {
            correction: Poly::parse(text, casimir_variables())?,
        })
    }

    pub fn to_text(&self) -> String {
        self.correction.to_text(casimir_variables())
    }

    /// `Q(α, β, γ, δ)` as a Racah element.
    pub fn evaluate(&self) -> Element {
        let r = racah();
        let values = ["α", "β", "γ", "δ"].map(|n| r.named(n));
        self.correction.evaluate(&r, &values)
    }
}

/// The base representative of the Casimir class, in normal form.
///
/// The last summand is `-B(δ + α)`; with `+B(δ - α)` instead the element
/// fails to commute with `A` and `C` (it differs by `2Bδ`). The representative
/// used here is central, fixed by σ, and equal to `Ω_C`.
pub fn casimir_base() -> &'static Element {
    static BASE: OnceLock<Element> = OnceLock::new();
    BASE.get_or_init(|| {
        racah()
            .parse(
                "D^2 + A^2 + B^2 + 1/2*((δ + 2)*{A, B} - {A^2, B} - {A, B^2}) \
                 + A*(β - δ) - B*(δ + α)",
            )
            .expect("base representative parses")
    })
}

/// Base representative plus the correction, in Racah normal form.
pub fn casimir_element(spec: &CasimirSpec) -> Element {
    &racah().normal_form(casimir_base()) + &spec.evaluate()
}

/// Finds `Q` with `omega = casimir_element(Q)`, written in `α, β, δ` only
/// (`γ = -α - β` makes the four variables dependent). `None` when `omega`
/// is not in the Casimir class.
pub fn casimir_class_correction(omega: &Element) -> Option<CasimirSpec> {
    let r = racah();
    let rest = &r.normal_form(omega) - casimir_base();
    let Some(deg) = rest.degree() else {
        return Some(CasimirSpec::zero());
    };
    let deg = deg as u32;
    // candidate monomials α^a β^b δ^d; the top-length part of a polynomial in
    // α, β, δ cannot cancel, so a + b + d ≤ deg suffices
    let mut candidates = Vec::new();
    for a in 0..=deg {
        for b in 0..=deg - a {
            for d in 0..=deg - a - b {
                candidates.push([a, b, 0, d]);
            }
        }
    }
    let images: Vec<Element> = candidates
        .iter()
        .map(|e| {
            CasimirSpec {
                correction: Poly::monomial(e.to_vec(), Scalar::from_integer(1.into())),
            }
            .evaluate()
        })
        .collect();
    let mut words: Vec<Word> = images
        .iter()
        .chain(std::iter::once(&rest))
        .flat_map(|e| e.terms().keys().cloned())
        .collect();
    words.sort();
    words.dedup();
    let a: Vec<Vec<Scalar>> = words
        .iter()
        .map(|w| images.iter().map(|img| img.coeff(w)).collect())
        .collect();
    let b: Vec<Scalar> = words.iter().map(|w| rest.coeff(w)).collect();
    let x = solve(&a, &b)?;
    let mut correction = Poly::zero(4);
    for (e, c) in candidates.iter().zip(x) {
        if !c.is_zero() {
            correction = &correction + &Poly::monomial(e.to_vec(), c);
        }
    }
    Some(CasimirSpec { correction })
}

/// A polynomial `P(ι, κ, λ, μ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralPolynomial(pub Poly);

impl CentralPolynomial {
    /// Parses a polynomial in `ι, κ, λ, μ` (ASCII aliases accepted).
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        Poly::parse(text, central_variables()).map(CentralPolynomial)
    }

    pub fn variables() -> &'static Arc<Alphabet> {
        central_variables()
    }

    pub fn poly(&self) -> &Poly {
        &self.0
    }

    pub fn to_text(&self) -> String {
        self.0.to_text(central_variables())
    }

    /// `P(ι, κ, λ, μ)` in the rebased presentation.
    pub fn to_rebased(&self) -> Element {
        let rb = bi_rebased();
        let values = ["ι", "κ", "λ", "μ"].map(|n| rb.named(n));
        self.0.evaluate(&rb, &values)
    }

    /// `P(ι, κ, λ, μ)` in the Bannai–Ito presentation.
    pub fn to_bannai_ito(&self) -> Element {
        rebase_from_iota(&self.to_rebased())
    }
}

/// `P(ι, κ, λ, μ)` with `ζ(Ω) = P(ι, κ, λ, μ)`.
pub fn express_casimir(omega: &Element) -> Result<CentralPolynomial, CasimirError> {
    let image = zeta().apply(omega)?;
    let rebased = rebase_to_iota(&image);
    let rb = bi_rebased();
    let vars: Vec<Sym> = ["ι", "κ", "λ", "μ"].iter().map(|n| rb.alphabet().get(n)).collect();
    Poly::from_element(&rebased, &vars)
        .map(CentralPolynomial)
        .map_err(|bad| {
            CasimirError::NotCentral(bad.iter().map(|w| w.to_text(rb.alphabet())).collect())
        })
}

/// The images `ζ(α), ζ(β), ζ(γ), ζ(δ)` as polynomials in `ι, κ, λ, μ`.
/// Substituting these into a correction `Q(α, β, γ, δ)` gives the polynomial
/// of `Q` under ζ.
pub fn zeta_substitution() -> &'static [CentralPolynomial; 4] {
    static S: OnceLock<[CentralPolynomial; 4]> = OnceLock::new();
    S.get_or_init(|| {
        [
            "1/64*(2*ι - κ - μ - 3)*(κ - μ)",
            "1/64*(2*ι - λ - κ - 3)*(λ - κ)",
            "1/64*(2*ι - μ - λ - 3)*(μ - λ)",
            "1/4*(ι^2 - 2*ι - κ - λ - μ) - 9/16",
        ]
        .map(|t| CentralPolynomial::parse(t).expect("substitution parses"))
    })
}

/// `Q̂ = Q(y1, y2, y3, y4)` with the [`zeta_substitution`] values.
pub fn substitute_correction(spec: &CasimirSpec) -> CentralPolynomial {
    let ys: Vec<Poly> = zeta_substitution().iter().map(|p| p.0.clone()).collect();
    CentralPolynomial(spec.correction.substitute(&ys))
}
