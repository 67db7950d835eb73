//! Exact noncommutative rewriting for the Racah algebra and the Bannai–Ito
//! algebra.
//!
//! Elements are finite linear combinations of words with rational
//! coefficients. A [`ReductionSystem`] turns a presentation into a terminating
//! rewriting system; when it is confluent, its irreducible words form a PBW
//! basis and [`ReductionSystem::normal_form`] is canonical.
//!
//! ```
//! use racah_bi::presentations::racah;
//!
//! let r = racah();
//! let e = r.parse("[A, B]").unwrap();
//! assert_eq!(e.to_text(), "2*D");
//! ```

pub mod alphabet;
pub mod casimir;
pub mod cli;
pub mod element;
pub mod error;
pub mod filtration;
pub mod linalg;
pub mod morphisms;
pub mod parse;
pub mod poly;
pub mod presentations;
pub mod rewrite;
pub mod scalar;
pub mod scope;
pub mod verify;
pub mod weight;
pub mod word;

pub use alphabet::{Alphabet, Sym};
pub use element::Element;
pub use casimir::{express_casimir, CasimirSpec, CentralPolynomial};
pub use error::{
    CasimirError, DefinitionError, FiltrationError, MapError, ParseError, RewriteError, TermError,
};
pub use filtration::Filtration;
pub use morphisms::{AlgebraMap, D6Action, D6Element, MapKind};
pub use presentations::{bannai_ito, bi_rebased, racah, Presentation, PresentationId};
pub use rewrite::{ReductionSystem, SystemBuilder, TermOrder};
pub use scalar::Scalar;
pub use weight::WeightVector;
pub use word::Word;
