//! The verification suite behind `racah-bi verify all`: an identity corpus
//! plus structural checks (confluence, PBW scans, D6 relations, filtration
//! sweeps, Casimir expressions, the truncated rank check).

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::binomial;
use serde::Serialize;

use crate::casimir::{
    casimir_element, casimir_class_correction, express_casimir, substitute_correction,
    zeta_rank_check, CasimirSpec,
};
use crate::element::Element;
use crate::error::DefinitionError;
use crate::filtration::{is_filtration, Filtration};
use crate::morphisms::{
    check_d6_relations, check_equivariance, sigma_bi, sigma_racah, tau_bi, tau_racah, zeta,
    AlgebraMap, D6Action, D6Element,
};
use crate::parse::parse_element;
use crate::presentations::{bannai_ito, bi_rebased, builtin_by_name, racah, rebase_to_iota, Presentation};
use crate::scalar::{format_scalar, pow_scalar, ratio, Scalar};
use crate::weight::WeightVector;

const CORPUS: &str = include_str!("../data/identities.txt");

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub group: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(group: &str, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckResult {
            group: group.to_string(),
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} [{}] {}", self.group, self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub enum Context {
    In(Arc<Presentation>),
    Zeta,
    ZetaRebased,
    Action(&'static AlgebraMap),
    Congruence {
        through_zeta: bool,
        weights: WeightVector,
        level: i64,
    },
}

#[derive(Debug, Clone)]
pub struct Identity {
    pub line: usize,
    pub label: String,
    pub context: Context,
    pub lhs: String,
    pub rhs: String,
}

fn parse_context(text: &str, line: usize) -> Result<Context, DefinitionError> {
    let bad = |m: String| DefinitionError::Syntax { line, message: m };
    let toks: Vec<&str> = text.split_whitespace().collect();
    Ok(match toks.as_slice() {
        ["zeta"] => Context::Zeta,
        ["zeta>rebased"] => Context::ZetaRebased,
        [name] => Context::In(
            builtin_by_name(name).ok_or_else(|| bad(format!("unknown presentation {name:?}")))?,
        ),
        [g @ ("sigma" | "tau"), alg] => Context::Action(match (*g, *alg) {
            ("sigma", "racah") => sigma_racah(),
            ("tau", "racah") => tau_racah(),
            ("sigma", "bi") => sigma_bi(),
            ("tau", "bi") => tau_bi(),
            _ => return Err(bad(format!("no D6 action on {alg:?}"))),
        }),
        [src @ ("bi" | "zeta"), "mod", w, n] => Context::Congruence {
            through_zeta: *src == "zeta",
            weights: WeightVector::parse(w).ok_or_else(|| bad(format!("bad weights {w:?}")))?,
            level: n.parse().map_err(|_| bad(format!("bad level {n:?}")))?,
        },
        _ => return Err(bad(format!("unknown context {text:?}"))),
    })
}

/// Parses `label | context | lhs | rhs` lines; `#` starts a comment.
pub fn parse_corpus(text: &str) -> Result<Vec<Identity>, DefinitionError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = content.split('|').map(str::trim).collect();
        let [label, ctx, lhs, rhs] = fields.as_slice() else {
            return Err(DefinitionError::Syntax {
                line,
                message: "expected `label | context | lhs | rhs`".into(),
            });
        };
        out.push(Identity {
            line,
            label: label.to_string(),
            context: parse_context(ctx, line)?,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }
    Ok(out)
}

/// The built-in corpus text.
pub fn builtin_corpus() -> &'static str {
    CORPUS
}

impl Identity {
    fn sides(&self) -> Result<(Element, Element), String> {
        let err = |e: &dyn fmt::Display| e.to_string();
        let racah_side = || racah().parse(&self.lhs).map_err(|e| err(&e));
        Ok(match &self.context {
            Context::In(p) => (
                p.parse(&self.lhs).map_err(|e| err(&e))?,
                p.parse(&self.rhs).map_err(|e| err(&e))?,
            ),
            Context::Zeta => (
                zeta().apply(&racah_side()?).map_err(|e| err(&e))?,
                bannai_ito().parse(&self.rhs).map_err(|e| err(&e))?,
            ),
            Context::ZetaRebased => (
                rebase_to_iota(&zeta().apply(&racah_side()?).map_err(|e| err(&e))?),
                bi_rebased().parse(&self.rhs).map_err(|e| err(&e))?,
            ),
            Context::Action(m) => {
                let p = m.source();
                let l = p.parse(&self.lhs).map_err(|e| err(&e))?;
                (
                    m.apply(&l).map_err(|e| err(&e))?,
                    p.parse(&self.rhs).map_err(|e| err(&e))?,
                )
            }
            Context::Congruence { through_zeta, .. } => {
                let l = if *through_zeta {
                    zeta().apply(&racah_side()?).map_err(|e| err(&e))?
                } else {
                    bannai_ito().parse(&self.lhs).map_err(|e| err(&e))?
                };
                (l, bannai_ito().parse(&self.rhs).map_err(|e| err(&e))?)
            }
        })
    }

    pub fn check(&self) -> CheckResult {
        let name = format!("{} (line {})", self.label, self.line);
        let (l, r) = match self.sides() {
            Ok(s) => s,
            Err(e) => return CheckResult::new("corpus", name, false, e),
        };
        let (passed, detail) = match &self.context {
            Context::Congruence { weights, level, .. } => {
                let f = Filtration::bannai_ito(weights.clone()).expect("six weights");
                let diff = &l - &r;
                let d = f.weighted_degree(&diff).expect("normal forms");
                (d <= *level, format!("difference has weighted degree {d}, bound {level}"))
            }
            _ => {
                let diff = &l - &r;
                (diff.is_zero(), format!("lhs - rhs = {}", diff.to_text()))
            }
        };
        CheckResult::new("corpus", name, passed, if passed { String::new() } else { detail })
    }
}

pub fn check_corpus() -> Vec<CheckResult> {
    match parse_corpus(CORPUS) {
        Ok(ids) => ids.iter().map(Identity::check).collect(),
        Err(e) => vec![CheckResult::new("corpus", "parse", false, e.to_string())],
    }
}

const RACAH_COMPLETIONS: [(&str, &str); 4] = [
    ("C*B*A", "A*B*C + 2*A*B - 2*B*C - 2*A*D + 2*B*D - 2*C*D - 2*β"),
    (
        "D*B*A",
        "A*B*D - 2*D^2 + A^2*B - A*B^2 - 2*A*D + 2*B*D + 2*A*B - 2*B*C - A*β - B*α - 2*β",
    ),
    (
        "D*C*B",
        "B*C*D - 2*D^2 + B^2*C - B*C^2 - 2*B*D + 2*C*D - 2*A*C + 2*B*C + B*α + B*β - C*β - 4*D + 2*α + 2*β",
    ),
    (
        "D*C*A",
        "A*C*D + 2*D^2 - A^2*C + A*C^2 - 2*A*D - 2*A*C + 2*B*C + 2*C*D + A*α + A*β - C*α - 4*D + 2*α + 2*β",
    ),
];

/// Confluence of the three presentations and the four known Racah
/// completions, compared as unreduced expressions.
pub fn check_confluence() -> Vec<CheckResult> {
    let g = "confluence";
    let mut out = Vec::new();
    for p in [racah(), bannai_ito(), bi_rebased()] {
        let reports = p.system().check_confluence();
        let bad: Vec<String> = reports
            .iter()
            .filter(|r| !r.resolvable)
            .map(|r| r.word.to_text(p.alphabet()))
            .collect();
        out.push(CheckResult::new(
            g,
            format!("{}: {} ambiguities resolvable", p.id(), reports.len()),
            bad.is_empty(),
            bad.join(", "),
        ));
    }
    let r = racah();
    let reports = r.system().check_confluence();
    let mut nontrivial: Vec<String> = reports
        .iter()
        .filter(|o| !o.involves_commutation)
        .map(|o| o.word.to_text(r.alphabet()))
        .collect();
    nontrivial.sort();
    let expected = ["C*B*A", "D*B*A", "D*C*A", "D*C*B"];
    out.push(CheckResult::new(
        g,
        "racah: nontrivial overlaps are CBA, DBA, DCB, DCA",
        nontrivial == expected,
        nontrivial.join(", "),
    ));
    for (word, completion) in RACAH_COMPLETIONS {
        let report = reports
            .iter()
            .find(|o| o.word.to_text(r.alphabet()) == word);
        let shown = parse_element(completion, &*r).expect("completion parses");
        let ok = report.is_some_and(|o| o.left_result == shown && o.right_result == shown);
        out.push(CheckResult::new(
            g,
            format!("racah: completion of {word}"),
            ok,
            report.map(|o| o.left_result.to_text()).unwrap_or_default(),
        ));
    }
    out
}

/// Irreducible words up to length 6 are exactly the sorted words.
pub fn check_pbw_scans() -> Vec<CheckResult> {
    [racah(), bannai_ito(), bi_rebased()]
        .iter()
        .map(|p| {
            let words = p.system().irreducible_words(6);
            let n = p.alphabet().len();
            // sorted words of length ≤ 6 over n letters: C(n + 6, 6)
            let expected = binomial(BigInt::from(n + 6), BigInt::from(6));
            let ok = words.iter().all(|w| w.is_sorted()) && BigInt::from(words.len()) == expected;
            CheckResult::new(
                "pbw",
                format!("{}: irreducible words up to length 6 are the ordered monomials", p.id()),
                ok,
                format!("{} words", words.len()),
            )
        })
        .collect()
}

pub fn check_d6() -> Vec<CheckResult> {
    let g = "d6";
    let mut out = vec![
        CheckResult::new(
            g,
            "racah: σ² = τ⁶ = (στ)² = 1",
            check_d6_relations(sigma_racah(), tau_racah()),
            "",
        ),
        CheckResult::new(
            g,
            "bi: σ² = τ⁶ = (στ)² = 1",
            check_d6_relations(sigma_bi(), tau_bi()),
            "",
        ),
    ];
    let (ra, ba) = (D6Action::racah(), D6Action::bannai_ito());
    for elem in D6Element::all() {
        let ok = check_equivariance(zeta(), &ra, &ba, elem).unwrap_or(false);
        out.push(CheckResult::new(g, format!("ζ commutes with {elem}"), ok, ""));
    }
    let t3 = ba.map_for(D6Element::from_word("τττ").expect("valid word"));
    let b = bannai_ito();
    let fixes = ["X", "Y", "Z"]
        .iter()
        .all(|n| t3.apply(&b.named(n)).ok() == Some(b.named(n)));
    out.push(CheckResult::new(
        g,
        "bi: τ³ is an antiautomorphism fixing X, Y, Z",
        fixes && t3.kind() == crate::morphisms::MapKind::Antihomomorphism,
        "",
    ));
    out
}

/// Inequalities versus the rule criterion on every vector with entries ≤ 4,
/// and the product check on an evenly spaced sample of 50 of them.
pub fn check_filtration_sweep() -> Vec<CheckResult> {
    let g = "filtration";
    let mut disagreements = Vec::new();
    let mut all = Vec::new();
    for code in 0..5u32.pow(6) {
        let ws: Vec<u32> = (0..6).map(|i| code / 5u32.pow(i) % 5).collect();
        let w = WeightVector::new(ws);
        let f = Filtration::bannai_ito(w.clone()).expect("six weights");
        if is_filtration(&w).expect("six weights") != f.rules_respect_weights() {
            disagreements.push(w.to_string());
        }
        all.push(w);
    }
    let mut out = vec![CheckResult::new(
        g,
        format!("inequalities agree with the rule criterion on {} vectors", all.len()),
        disagreements.is_empty(),
        disagreements.join(" "),
    )];
    let step = all.len() / 50;
    let mut mismatches = Vec::new();
    for w in all.iter().step_by(step).take(50) {
        let f = Filtration::bannai_ito(w.clone()).expect("six weights");
        let products_ok = f.check_product(8, 2).is_ok();
        if products_ok != is_filtration(w).expect("six weights") {
            mismatches.push(w.to_string());
        }
    }
    out.push(CheckResult::new(
        g,
        "product check at degree 8 agrees with the inequalities on 50 vectors",
        mismatches.is_empty(),
        mismatches.join(" "),
    ));
    let f = Filtration::bannai_ito(WeightVector::new(vec![0, 0, 1, 0, 0, 0])).expect("six weights");
    let witness = f.check_product(3, 2).err();
    out.push(CheckResult::new(
        g,
        "(0,0,1,0,0,0) fails with witness Y·X = -XY + Z + κ",
        witness.is_some_and(|w| w.product == bannai_ito().parse("-X*Y + Z + κ").expect("parses")),
        "",
    ));
    for (w, deg, len) in [("4,4,6,8,9,9", 20, 5), ("1,1,2,0,0,0", 8, 3)] {
        let f = Filtration::bannai_ito(WeightVector::parse(w).expect("weights")).expect("six weights");
        out.push(CheckResult::new(
            g,
            format!("({w}) products respect levels up to degree {deg}"),
            f.check_product(deg, len).is_ok(),
            "",
        ));
    }
    out
}

fn poly_text(coeff: &Scalar, factors: &[(&str, u32)]) -> String {
    let mut s = format_scalar(coeff);
    for (name, e) in factors {
        if *e > 0 {
            s.push_str(&format!("*{name}^{e}"));
        }
    }
    s
}

/// Congruences modulo filtration levels: sign laws, power laws for the
/// images of the Racah generators, and `ιⁿ ≡ Zⁿ`.
pub fn congruence_families() -> Vec<Identity> {
    let w = "4,4,6,8,9,9";
    let mut out = Vec::new();
    let mut push = |label: String, ctx: String, lhs: String, rhs: String| {
        out.push(Identity {
            line: 0,
            context: parse_context(&ctx, 0).expect("generated context"),
            label,
            lhs,
            rhs,
        })
    };
    for n in 0..=5u32 {
        let m = n.saturating_sub(1);
        let laws: [(&str, &str, u32); 6] = if n % 2 == 0 {
            [
                ("Y^{n}*X", "X*Y^{n}", 4 * n + 3),
                ("X^{n}*Y", "Y*X^{n}", 4 * n + 3),
                ("Z^{n}*Y", "Y*Z^{n}", 6 * n + 3),
                ("Y^{n}*Z", "Z*Y^{n}", 4 * n + 5),
                ("X^{n}*Z", "Z*X^{n}", 4 * n + 5),
                ("Z^{n}*X", "X*Z^{n}", 6 * n + 3),
            ]
        } else {
            [
                ("Y^{n}*X", "-X*Y^{n} + κ*Y^{m}", 4 * n + 3),
                ("X^{n}*Y", "-Y*X^{n} + κ*X^{m}", 4 * n + 3),
                ("Y^{n}*Z", "-Z*Y^{n}", 4 * n + 5),
                ("Z^{n}*Y", "-Y*Z^{n}", 6 * n + 3),
                ("X^{n}*Z", "-Z*X^{n}", 4 * n + 5),
                ("Z^{n}*X", "-X*Z^{n}", 6 * n + 3),
            ]
        };
        for (l, r, level) in laws {
            let l = l.replace("{n}", &n.to_string());
            let r = r.replace("{n}", &n.to_string()).replace("{m}", &m.to_string());
            push(format!("sign law {l}"), format!("bi mod {w} {level}"), l, r);
        }
    }
    for n in 0..=4u32 {
        let e = 2 * n;
        let c = |num: i64, den: i64| format_scalar(&pow_scalar(&ratio(num, den), e as i64));
        let sign = if n % 2 == 0 { "" } else { "-" };
        let powers = [
            ("A", format!("{}*X^{e}", c(1, 2)), 8 * n),
            ("B", format!("{}*Y^{e}", c(1, 2)), 8 * n),
            ("C", format!("{}*Z^{e}", c(1, 2)), 12 * n),
            ("α", format!("{}*μ^{e}", c(1, 8)), 18 * n),
            ("β", format!("{sign}{}*λ^{e}", c(1, 8)), 18 * n),
        ];
        for (g, rhs, top) in powers {
            push(
                format!("power law {g}^{n}"),
                format!("zeta mod {w} {}", top as i64 - 1),
                format!("{g}^{n}"),
                rhs,
            );
        }
        // binomial formula for the image of D^n
        let half = n / 2;
        let scale = pow_scalar(&ratio(1, 16), n as i64);
        let mut terms = Vec::new();
        for i in 0..=half {
            let b = Scalar::from_integer(binomial(BigInt::from(half), BigInt::from(i)));
            let c = &scale * &b * pow_scalar(&ratio(-4, 1), i as i64);
            terms.push(poly_text(
                &c,
                &[("X", 2 * i), ("Y", 2 * i), ("κ", n - 2 * i), ("Z", n)],
            ));
            if n % 2 == 1 {
                terms.push(poly_text(
                    &(&c * ratio(-2, 1)),
                    &[("X", 2 * i + 1), ("Y", 2 * i + 1), ("κ", n - 2 * i - 1), ("Z", n)],
                ));
            }
        }
        push(
            format!("binomial law D^{n}"),
            format!("zeta mod {w} {}", 14 * n as i64 - 1),
            format!("D^{n}"),
            terms.join(" + ").replace("+ -", "- "),
        );
    }
    for n in 0..=5i64 {
        push(
            format!("iota^{n} vs Z^{n}"),
            format!("bi mod 1,1,2,0,0,0 {}", 2 * n - 1),
            format!("ι^{n}"),
            format!("Z^{n}"),
        );
    }
    out
}

pub fn check_congruence_families() -> Vec<CheckResult> {
    congruence_families()
        .iter()
        .map(|id| {
            let mut r = id.check();
            r.group = "congruence".into();
            r.name = id.label.clone();
            r
        })
        .collect()
}

/// Casimir elements: distinctness, class membership, expression round trips
/// for a fixed family of corrections.
pub fn check_casimirs() -> Vec<CheckResult> {
    let g = "casimir";
    let r = racah();
    let omegas = ["Ω_A", "Ω_B", "Ω_C"].map(|n| r.named(n));
    let mut out = vec![CheckResult::new(
        g,
        "Ω_A, Ω_B, Ω_C pairwise distinct",
        omegas[0] != omegas[1] && omegas[1] != omegas[2] && omegas[0] != omegas[2],
        "",
    )];
    for (name, om) in ["Ω_A", "Ω_B", "Ω_C"].iter().zip(&omegas) {
        let in_class = casimir_class_correction(om).is_some();
        out.push(CheckResult::new(g, format!("{name} lies in the Casimir class"), in_class, ""));
        let ok = express_casimir(om)
            .map(|p| p.to_bannai_ito() == zeta().apply(om).expect("sealed"))
            .unwrap_or(false);
        out.push(CheckResult::new(g, format!("{name} round trip through P"), ok, ""));
    }
    let base = express_casimir(&omegas[0]).expect("Ω_A is expressible");
    let corrections = [
        "0", "1", "α", "β", "γ", "δ", "α^2", "α*β", "β*γ", "γ*δ", "δ^2", "α*δ - 3*β",
        "1/2*α^2 - γ*δ + 7", "β^2 + γ^2", "-δ + 2/3*α*γ", "γ", "γ^2 - 5/4*δ",
        "-2*α*β + β*δ", "3 - α - β - δ", "4/9*δ^2 + γ",
    ];
    for text in corrections {
        let spec = CasimirSpec::parse(text).expect("correction parses");
        let omega = &omegas[0] + &spec.evaluate();
        let ok = match express_casimir(&omega) {
            Ok(p) => {
                let expected = &base.0 + &substitute_correction(&spec).0;
                p.0 == expected && p.to_bannai_ito() == zeta().apply(&omega).expect("sealed")
            }
            Err(_) => false,
        };
        out.push(CheckResult::new(g, format!("Ω_A + ({text}) expressed and round-tripped"), ok, ""));
    }
    let spec = CasimirSpec::parse("δ^2").expect("parses");
    let elem = casimir_element(&spec);
    out.push(CheckResult::new(
        g,
        "casimir_element(δ²) is central",
        crate::casimir::commutes_with_generators(&r, &elem),
        "",
    ));
    out
}

pub fn check_rank(max_weight: u32) -> Vec<CheckResult> {
    let rep = zeta_rank_check(max_weight);
    let bad: Vec<String> = rep
        .monomials
        .iter()
        .filter(|m| !m.matches)
        .map(|m| format!("{:?}: expected {}, got {}", m.exponents, m.expected, m.computed))
        .collect();
    vec![
        CheckResult::new(
            "injectivity",
            format!("leading coefficients of {} monomials up to weight {max_weight}", rep.dimension_source),
            rep.coefficients_match,
            bad.join("; "),
        ),
        CheckResult::new(
            "injectivity",
            format!("rank {} of {} at weight {max_weight}", rep.dimension_image, rep.dimension_source),
            rep.full_rank,
            "",
        ),
        CheckResult::new(
            "injectivity",
            "leading-tuple map is injective",
            rep.leading_map_injective,
            "",
        ),
    ]
}

pub fn check_zeta_relations() -> Vec<CheckResult> {
    let check = zeta().verify_on_relations();
    vec![CheckResult::new(
        "zeta",
        format!("ζ respects all {} Racah relations", racah().system().rules().len()),
        check.holds,
        check
            .failures
            .iter()
            .map(|f| f.relation.clone())
            .collect::<Vec<_>>()
            .join("; "),
    )]
}

/// Every check, in a fixed order.
pub fn run_all() -> Vec<CheckResult> {
    let mut out = Vec::new();
    out.extend(check_confluence());
    out.extend(check_pbw_scans());
    out.extend(check_zeta_relations());
    out.extend(check_d6());
    out.extend(check_filtration_sweep());
    out.extend(check_congruence_families());
    out.extend(check_casimirs());
    out.extend(check_rank(40));
    out.extend(check_corpus());
    out
}
