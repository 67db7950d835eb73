//! Algebra homomorphisms and antihomomorphisms between presentations.
//!
//! A map stores the images of the source generators only; everything else is
//! mapped by expansion. Maps start unsealed and must pass
//! [`AlgebraMap::verify_on_relations`] before [`AlgebraMap::apply`] accepts them.
//!
//! Map definition text:
//!
//! ```text
//! map zeta : racah -> bi (homo)
//! A := 1/16*(2*X - 3)*(2*X + 1)
//! ...
//! ```

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::alphabet::Sym;
use crate::element::Element;
use crate::error::{DefinitionError, MapError, TermError};
use crate::parse::parse_element;
use crate::presentations::{self, Presentation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MapKind {
    Homomorphism,
    Antihomomorphism,
}

impl MapKind {
    /// Kind of `outer ∘ inner`.
    pub fn then(self, outer: MapKind) -> MapKind {
        if self == outer {
            MapKind::Homomorphism
        } else {
            MapKind::Antihomomorphism
        }
    }

    fn keyword(self) -> &'static str {
        match self {
            MapKind::Homomorphism => "homo",
            MapKind::Antihomomorphism => "anti",
        }
    }
}

/// A relation whose two sides have different images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationFailure {
    pub rule: usize,
    pub relation: String,
    /// `m(lhs) - m(rhs)` in target normal form.
    pub residue: Element,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub holds: bool,
    pub failures: Vec<RelationFailure>,
}

#[derive(Clone)]
pub struct AlgebraMap {
    name: String,
    source: Arc<Presentation>,
    target: Arc<Presentation>,
    images: Vec<Element>,
    kind: MapKind,
    sealed: bool,
}

impl fmt::Debug for AlgebraMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AlgebraMap")
            .field("name", &self.name)
            .field("source", self.source.id())
            .field("target", self.target.id())
            .field("kind", &self.kind)
            .field("sealed", &self.sealed)
            .finish()
    }
}

fn same(a: &Presentation, b: &Presentation) -> bool {
    std::ptr::eq(a, b) || (a.id() == b.id() && a.alphabet() == b.alphabet())
}

impl AlgebraMap {
    /// An unsealed map from generator images (given by generator name).
    pub fn new(
        name: &str,
        source: Arc<Presentation>,
        target: Arc<Presentation>,
        kind: MapKind,
        images: &[(&str, Element)],
    ) -> Result<Self, MapError> {
        let mut slots: Vec<Option<Element>> = vec![None; source.alphabet().len()];
        for (g, img) in images {
            let s = source
                .alphabet()
                .lookup(g)
                .ok_or_else(|| MapError::UnknownGenerator(g.to_string()))?;
            if !img.same_alphabet(&Element::zero(target.alphabet())) {
                return Err(TermError::AlphabetMismatch.into());
            }
            slots[s.rank()] = Some(target.normal_form(img));
        }
        let images = slots
            .into_iter()
            .enumerate()
            .map(|(i, img)| {
                img.ok_or_else(|| {
                    MapError::MissingImage(source.alphabet().name(Sym(i as u8)).to_string())
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(AlgebraMap {
            name: name.to_string(),
            source,
            target,
            images,
            kind,
            sealed: false,
        })
    }

    /// The identity homomorphism of a presentation (sealed).
    pub fn identity(p: Arc<Presentation>) -> Self {
        let images = p.generators();
        AlgebraMap {
            name: "id".into(),
            source: p.clone(),
            target: p,
            images,
            kind: MapKind::Homomorphism,
            sealed: true,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &Arc<Presentation> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Presentation> {
        &self.target
    }

    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn is_sealed(&self) -> bool {
        self.sealed
    }

    pub fn image(&self, s: Sym) -> &Element {
        &self.images[s.rank()]
    }

    /// Checks `m(lhs) = m(rhs)` in the target for every source rule.
    pub fn verify_on_relations(&self) -> RelationCheck {
        let mut failures = Vec::new();
        for (i, rule) in self.source.system().rules().iter().enumerate() {
            let lhs = Element::word(self.source.alphabet(), rule.lhs.clone());
            let residue = &self.apply_unchecked(&lhs) - &self.apply_unchecked(&rule.rhs);
            if !residue.is_zero() {
                failures.push(RelationFailure {
                    rule: i,
                    relation: rule.to_text(),
                    residue,
                });
            }
        }
        RelationCheck {
            holds: failures.is_empty(),
            failures,
        }
    }

    /// Verifies the map on all relations and marks it usable.
    pub fn seal(mut self) -> Result<Self, MapError> {
        let check = self.verify_on_relations();
        if !check.holds {
            return Err(MapError::RelationsViolated {
                name: self.name.clone(),
                failures: check.failures.iter().map(|f| f.relation.clone()).collect(),
            });
        }
        self.sealed = true;
        Ok(self)
    }

    /// Image of `e` in target normal form.
    pub fn apply(&self, e: &Element) -> Result<Element, MapError> {
        if !self.sealed {
            return Err(MapError::Unsealed(self.name.clone()));
        }
        if !e.same_alphabet(&Element::zero(self.source.alphabet())) {
            return Err(TermError::AlphabetMismatch.into());
        }
        Ok(self.apply_unchecked(e))
    }

    fn apply_unchecked(&self, e: &Element) -> Element {
        let target = &self.target;
        let mut acc = Element::zero(target.alphabet());
        for (w, c) in e.terms() {
            let mut img = Element::one(target.alphabet());
            let letters: Box<dyn Iterator<Item = &Sym>> = match self.kind {
                MapKind::Homomorphism => Box::new(w.iter()),
                MapKind::Antihomomorphism => Box::new(w.iter().rev()),
            };
            for &s in letters {
                img = target.mul(&img, self.image(s));
                if img.is_zero() {
                    break;
                }
            }
            acc = &acc + &img.scale(c);
        }
        acc
    }

    /// `outer ∘ inner`: apply `inner` first. Sealed when both parts are.
    pub fn compose(outer: &AlgebraMap, inner: &AlgebraMap) -> Result<AlgebraMap, MapError> {
        if !same(&inner.target, &outer.source) {
            return Err(MapError::NotComposable {
                outer: outer.name.clone(),
                inner: inner.name.clone(),
            });
        }
        let images = inner
            .images
            .iter()
            .map(|img| outer.apply_unchecked(img))
            .collect();
        Ok(AlgebraMap {
            name: format!("{}∘{}", outer.name, inner.name),
            source: inner.source.clone(),
            target: outer.target.clone(),
            images,
            kind: inner.kind.then(outer.kind),
            sealed: outer.sealed && inner.sealed,
        })
    }

    /// Same source, target, kind and generator images.
    pub fn agrees_with(&self, other: &AlgebraMap) -> bool {
        same(&self.source, &other.source)
            && same(&self.target, &other.target)
            && self.kind == other.kind
            && self.images == other.images
    }

    /// Whether the map fixes every generator (so source = target).
    pub fn is_identity_on_generators(&self) -> bool {
        same(&self.source, &self.target)
            && self
                .images
                .iter()
                .zip(self.source.generators())
                .all(|(img, g)| *img == g)
    }

    pub fn to_definition_text(&self) -> String {
        let mut out = format!(
            "map {} : {} -> {} ({})\n",
            self.name,
            self.source.id(),
            self.target.id(),
            self.kind.keyword()
        );
        for s in self.source.alphabet().symbols() {
            out.push_str(&format!(
                "{} := {}\n",
                self.source.alphabet().name(s),
                self.image(s).to_text()
            ));
        }
        out
    }
}

/// Parses a map definition. `resolve` turns presentation names into
/// presentations. The returned map is unsealed.
pub fn parse_map_definition(
    text: &str,
    resolve: impl Fn(&str) -> Option<Arc<Presentation>>,
) -> Result<AlgebraMap, DefinitionError> {
    let syntax = |line: usize, m: String| DefinitionError::Syntax { line, message: m };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines
        .next()
        .ok_or_else(|| syntax(1, "empty map definition".into()))?;
    let rest = header
        .strip_prefix("map ")
        .ok_or_else(|| syntax(hline, "expected `map NAME : SRC -> TGT (homo|anti)`".into()))?;
    let (name, sig) = rest
        .split_once(':')
        .ok_or_else(|| syntax(hline, "missing ':' after map name".into()))?;
    let (src, tail) = sig
        .split_once("->")
        .ok_or_else(|| syntax(hline, "missing '->' in map signature".into()))?;
    let tail = tail.trim();
    let (tgt, kind) = tail
        .strip_suffix(')')
        .and_then(|t| t.rsplit_once('('))
        .ok_or_else(|| syntax(hline, "missing (homo|anti) kind".into()))?;
    let kind = match kind.trim() {
        "homo" => MapKind::Homomorphism,
        "anti" => MapKind::Antihomomorphism,
        other => return Err(syntax(hline, format!("unknown map kind {other:?}"))),
    };
    let source = resolve(src.trim())
        .ok_or_else(|| syntax(hline, format!("unknown presentation {:?}", src.trim())))?;
    let target = resolve(tgt.trim())
        .ok_or_else(|| syntax(hline, format!("unknown presentation {:?}", tgt.trim())))?;
    let mut images: Vec<(String, Element)> = Vec::new();
    for (line, l) in lines {
        let (g, expr) = l
            .split_once(":=")
            .ok_or_else(|| syntax(line, "expected `generator := expression`".into()))?;
        let img = parse_element(expr.trim(), &*target)
            .map_err(|source| DefinitionError::Parse { line, source })?;
        images.push((g.trim().to_string(), img));
    }
    let refs: Vec<(&str, Element)> = images.iter().map(|(g, e)| (g.as_str(), e.clone())).collect();
    Ok(AlgebraMap::new(name.trim(), source, target, kind, &refs)?)
}

const ZETA: &str = "\
map zeta : racah -> bi (homo)
A := 1/16*(2*X - 3)*(2*X + 1)
B := 1/16*(2*Y - 3)*(2*Y + 1)
C := 1/16*(2*Z - 3)*(2*Z + 1)
D := 1/32*([X, Y] + [Y, Z] + [Z, X] + L)
α := 1/64*(2*ι - κ - μ - 3)*(κ - μ)
β := 1/64*(2*ι - λ - κ - 3)*(λ - κ)
";

const SIGMA_RACAH: &str = "\
map sigma : racah -> racah (anti)
A := B
B := A
C := C
D := D
α := -β
β := -α
";

const TAU_RACAH: &str = "\
map tau : racah -> racah (anti)
A := B
B := C
C := A
D := -D
α := β
β := γ
";

const SIGMA_BI: &str = "\
map sigma : bi -> bi (anti)
X := Y
Y := X
Z := Z
κ := κ
λ := μ
μ := λ
";

const TAU_BI: &str = "\
map tau : bi -> bi (anti)
X := Y
Y := Z
Z := X
κ := λ
λ := μ
μ := κ
";

const REBASE: &str = "\
map rebase : bi -> bi-rebased (homo)
X := X
Y := Y
Z := ι - X - Y
κ := κ
λ := λ
μ := μ
";

const UNREBASE: &str = "\
map unrebase : bi-rebased -> bi (homo)
X := X
Y := Y
ι := X + Y + Z
κ := κ
λ := λ
μ := μ
";

fn builtin(cell: &'static OnceLock<AlgebraMap>, text: &str) -> &'static AlgebraMap {
    cell.get_or_init(|| {
        parse_map_definition(text, presentations::builtin_by_name)
            .expect("built-in map parses")
            .seal()
            .expect("built-in map respects the relations")
    })
}

/// The homomorphism from the Racah algebra to the Bannai–Ito algebra.
pub fn zeta() -> &'static AlgebraMap {
    static CELL: OnceLock<AlgebraMap> = OnceLock::new();
    builtin(&CELL, ZETA)
}

pub fn sigma_racah() -> &'static AlgebraMap {
    static CELL: OnceLock<AlgebraMap> = OnceLock::new();
    builtin(&CELL, SIGMA_RACAH)
}

pub fn tau_racah() -> &'static AlgebraMap {
    static CELL: OnceLock<AlgebraMap> = OnceLock::new();
    builtin(&CELL, TAU_RACAH)
}

pub fn sigma_bi() -> &'static AlgebraMap {
    static CELL: OnceLock<AlgebraMap> = OnceLock::new();
    builtin(&CELL, SIGMA_BI)
}

pub fn tau_bi() -> &'static AlgebraMap {
    static CELL: OnceLock<AlgebraMap> = OnceLock::new();
    builtin(&CELL, TAU_BI)
}

/// `Z ↦ ι - X - Y` from the Bannai–Ito presentation to the rebased one.
pub fn rebase_map() -> &'static AlgebraMap {
    static CELL: OnceLock<AlgebraMap> = OnceLock::new();
    builtin(&CELL, REBASE)
}

/// `ι ↦ X + Y + Z`, inverse of [`rebase_map`].
pub fn unrebase_map() -> &'static AlgebraMap {
    static CELL: OnceLock<AlgebraMap> = OnceLock::new();
    builtin(&CELL, UNREBASE)
}

/// Uncompiled definition text of the built-in ζ.
pub fn zeta_definition_text() -> &'static str {
    ZETA
}

/// An element `σ^r τ^k` of the dihedral group of order 12, with
/// `σ² = τ⁶ = (στ)² = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct D6Element {
    reflection: bool,
    rotation: u8,
}

impl D6Element {
    pub const IDENTITY: D6Element = D6Element {
        reflection: false,
        rotation: 0,
    };
    pub const SIGMA: D6Element = D6Element {
        reflection: true,
        rotation: 0,
    };
    pub const TAU: D6Element = D6Element {
        reflection: false,
        rotation: 1,
    };

    pub fn all() -> Vec<D6Element> {
        (0..2)
            .flat_map(|r| {
                (0..6).map(move |k| D6Element {
                    reflection: r == 1,
                    rotation: k,
                })
            })
            .collect()
    }

    /// Group product; `τσ = στ⁻¹` moves rotations past reflections.
    pub fn mul(self, other: D6Element) -> D6Element {
        let k = if other.reflection {
            (6 - self.rotation) % 6
        } else {
            self.rotation
        };
        D6Element {
            reflection: self.reflection ^ other.reflection,
            rotation: (k + other.rotation) % 6,
        }
    }

    /// Parses a word in `σ`/`s`/`sigma` and `τ`/`t`/`tau`, read left to right.
    pub fn from_word(text: &str) -> Option<D6Element> {
        let mut g = D6Element::IDENTITY;
        let mut rest = text.trim();
        while !rest.is_empty() {
            rest = rest.trim_start_matches(|c: char| c.is_whitespace() || c == '*');
            let (h, len) = if rest.starts_with("sigma") {
                (D6Element::SIGMA, 5)
            } else if rest.starts_with("tau") {
                (D6Element::TAU, 3)
            } else if rest.starts_with('σ') {
                (D6Element::SIGMA, 'σ'.len_utf8())
            } else if rest.starts_with('τ') {
                (D6Element::TAU, 'τ'.len_utf8())
            } else if rest.starts_with('s') {
                (D6Element::SIGMA, 1)
            } else if rest.starts_with('t') {
                (D6Element::TAU, 1)
            } else if rest.is_empty() {
                break;
            } else {
                return None;
            };
            g = g.mul(h);
            rest = &rest[len..];
        }
        Some(g)
    }
}

impl fmt::Display for D6Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.reflection, self.rotation) {
            (false, 0) => f.write_str("1"),
            (true, 0) => f.write_str("σ"),
            (false, 1) => f.write_str("τ"),
            (false, k) => write!(f, "τ^{k}"),
            (true, 1) => f.write_str("στ"),
            (true, k) => write!(f, "στ^{k}"),
        }
    }
}

/// A D6 action given by the maps for `σ` and `τ`.
#[derive(Debug, Clone)]
pub struct D6Action {
    pub sigma: AlgebraMap,
    pub tau: AlgebraMap,
}

impl D6Action {
    pub fn racah() -> D6Action {
        D6Action {
            sigma: sigma_racah().clone(),
            tau: tau_racah().clone(),
        }
    }

    pub fn bannai_ito() -> D6Action {
        D6Action {
            sigma: sigma_bi().clone(),
            tau: tau_bi().clone(),
        }
    }

    /// The map by which `g = σ^r τ^k` acts: `σ^r ∘ τ^k`.
    pub fn map_for(&self, g: D6Element) -> AlgebraMap {
        let mut m = AlgebraMap::identity(self.sigma.source().clone());
        for _ in 0..g.rotation {
            m = AlgebraMap::compose(&self.tau, &m).expect("endomorphisms compose");
        }
        if g.reflection {
            m = AlgebraMap::compose(&self.sigma, &m).expect("endomorphisms compose");
        }
        m
    }
}

/// Whether `σ² = τ⁶ = (στ)² = 1` hold on generators.
pub fn check_d6_relations(sigma: &AlgebraMap, tau: &AlgebraMap) -> bool {
    let power = |m: &AlgebraMap, n: usize| -> Result<AlgebraMap, MapError> {
        let mut out = AlgebraMap::identity(m.source().clone());
        for _ in 0..n {
            out = AlgebraMap::compose(m, &out)?;
        }
        Ok(out)
    };
    let check = || -> Result<bool, MapError> {
        let st = AlgebraMap::compose(sigma, tau)?;
        Ok(power(sigma, 2)?.is_identity_on_generators()
            && power(tau, 6)?.is_identity_on_generators()
            && power(&st, 2)?.is_identity_on_generators())
    };
    check().unwrap_or(false)
}

/// Whether `g ∘ ζ = ζ ∘ g` on every source generator.
pub fn check_equivariance(
    zeta: &AlgebraMap,
    source_action: &D6Action,
    target_action: &D6Action,
    g: D6Element,
) -> Result<bool, MapError> {
    let g_src = source_action.map_for(g);
    let g_tgt = target_action.map_for(g);
    for u in zeta.source().generators() {
        let lhs = g_tgt.apply(&zeta.apply(&u)?)?;
        let rhs = zeta.apply(&g_src.apply(&u)?)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{bannai_ito, racah};

    #[test]
    fn d6_group_law() {
        let s = D6Element::SIGMA;
        let t = D6Element::TAU;
        assert_eq!(s.mul(s), D6Element::IDENTITY);
        let mut p = D6Element::IDENTITY;
        for _ in 0..6 {
            p = p.mul(t);
        }
        assert_eq!(p, D6Element::IDENTITY);
        assert_eq!(s.mul(t).mul(s).mul(t), D6Element::IDENTITY);
        assert_eq!(D6Element::from_word("στ"), Some(s.mul(t)));
        assert_eq!(D6Element::from_word("tts"), Some(t.mul(t).mul(s)));
        assert_eq!(D6Element::from_word("x"), None);
        assert_eq!(D6Element::all().len(), 12);
    }

    #[test]
    fn zeta_images() {
        let z = zeta();
        let r = racah();
        let b = bannai_ito();
        assert_eq!(
            z.apply(&r.named("A")).unwrap(),
            b.parse("1/16*(4X^2 - 4X - 3)").unwrap()
        );
        let half_bracket = b
            .commutator(&z.apply(&r.named("A")).unwrap(), &z.apply(&r.named("B")).unwrap())
            .scale(&crate::scalar::ratio(1, 2));
        assert_eq!(z.apply(&r.named("D")).unwrap(), half_bracket);
    }

    #[test]
    fn table_values() {
        let r = racah();
        let b = bannai_ito();
        assert_eq!(tau_racah().apply(&r.named("D")).unwrap(), r.parse("-D").unwrap());
        assert_eq!(sigma_bi().apply(&b.named("λ")).unwrap(), b.named("μ"));
        assert_eq!(sigma_racah().apply(&r.named("γ")).unwrap(), r.parse("-γ").unwrap());
        assert_eq!(tau_racah().apply(&r.named("γ")).unwrap(), r.named("α"));
        assert_eq!(sigma_bi().apply(&b.named("ι")).unwrap(), b.named("ι"));
    }

    #[test]
    fn unsealed_map_refuses_to_apply() {
        let r = racah();
        let b = bannai_ito();
        let imgs: Vec<(&str, Element)> = ["A", "B", "C", "D", "α", "β"]
            .iter()
            .map(|g| (*g, Element::zero(b.alphabet())))
            .collect();
        let m = AlgebraMap::new("zero", r.clone(), b, MapKind::Homomorphism, &imgs).unwrap();
        assert!(matches!(m.apply(&r.named("A")), Err(MapError::Unsealed(_))));
        // the zero map kills every relation, so it seals
        assert!(m.seal().is_ok());
    }

    #[test]
    fn corrupted_zeta_fails_verification() {
        let text = ZETA.replace("A := 1/16*(2*X - 3)*(2*X + 1)", "A := X");
        let m = parse_map_definition(&text, presentations::builtin_by_name).unwrap();
        let check = m.verify_on_relations();
        assert!(!check.holds);
        assert!(check.failures.iter().any(|f| f.relation.starts_with("B*A")));
        assert!(matches!(m.seal(), Err(MapError::RelationsViolated { .. })));
    }

    #[test]
    fn missing_and_unknown_generators() {
        let text = "map bad : racah -> bi (homo)\nA := X\n";
        let err = parse_map_definition(text, presentations::builtin_by_name).unwrap_err();
        assert!(matches!(err, DefinitionError::Map(MapError::MissingImage(_))));
        let text = "map bad : racah -> bi (homo)\nQ := X\n";
        let err = parse_map_definition(text, presentations::builtin_by_name).unwrap_err();
        assert!(matches!(err, DefinitionError::Map(MapError::UnknownGenerator(_))));
    }

    #[test]
    fn composition_rules() {
        let st = AlgebraMap::compose(sigma_racah(), tau_racah()).unwrap();
        assert_eq!(st.kind(), MapKind::Homomorphism);
        assert!(st.is_sealed());
        let err = AlgebraMap::compose(sigma_racah(), zeta()).unwrap_err();
        assert!(matches!(err, MapError::NotComposable { .. }));
        let zs = AlgebraMap::compose(zeta(), sigma_racah()).unwrap();
        assert_eq!(zs.kind(), MapKind::Antihomomorphism);
    }

    #[test]
    fn definition_text_round_trip() {
        let text = zeta().to_definition_text();
        let again = parse_map_definition(&text, presentations::builtin_by_name)
            .unwrap()
            .seal()
            .unwrap();
        assert!(again.agrees_with(zeta()));
    }
}
