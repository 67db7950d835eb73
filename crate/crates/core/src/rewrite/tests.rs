use std::sync::Arc;

use super::*;
use crate::alphabet::Alphabet;
use crate::element::Element;
use crate::error::RewriteError;
use crate::parse::parse_element;
use crate::weight::WeightVector;
use crate::word::Word;

fn xy() -> Arc<Alphabet> {
    Arc::new(Alphabet::from_names(&["X", "Y"]).unwrap())
}

fn word(a: &Arc<Alphabet>, s: &str) -> Word {
    s.chars().map(|c| a.get(&c.to_string())).collect()
}

#[test]
fn single_rule_has_no_ambiguities() {
    let a = xy();
    let mut b = SystemBuilder::new(a.clone(), TermOrder::deglex(&a));
    b.rule(word(&a, "YX"), Element::word(&a, word(&a, "XY"))).unwrap();
    let sys = b.build().unwrap();
    assert!(sys.check_confluence().is_empty());
    assert!(sys.is_confluent());
    let e = parse_element("Y*X*Y*X", &a).unwrap();
    assert_eq!(sys.normal_form(&e).to_text(), "X^2*Y^2");
}

#[test]
fn swap_cycle_is_not_terminating() {
    let a = xy();
    let mut b = SystemBuilder::new(a.clone(), TermOrder::deglex(&a));
    b.rule(word(&a, "XY"), Element::word(&a, word(&a, "YX"))).unwrap();
    b.rule(word(&a, "YX"), Element::word(&a, word(&a, "XY"))).unwrap();
    let report = b.check_termination();
    assert!(!report.terminating);
    assert_eq!(report.violations.len(), 1);
    assert_eq!(report.violations[0].rule, 0);
    assert!(matches!(b.build(), Err(RewriteError::NonTerminating(_))));
}

#[test]
fn builder_rejects_bad_rules() {
    let a = xy();
    let mut b = SystemBuilder::new(a.clone(), TermOrder::deglex(&a));
    assert!(matches!(
        b.rule(word(&a, "X"), Element::one(&a)),
        Err(RewriteError::ShortLhs(_))
    ));
    b.rule(word(&a, "YX"), Element::word(&a, word(&a, "XY"))).unwrap();
    assert!(matches!(
        b.rule(word(&a, "YX"), Element::zero(&a)),
        Err(RewriteError::DuplicateLhs(_))
    ));
}

#[test]
fn unit_is_irreducible() {
    let a = xy();
    let mut b = SystemBuilder::new(a.clone(), TermOrder::deglex(&a));
    b.rule(word(&a, "YX"), Element::word(&a, word(&a, "XY"))).unwrap();
    let sys = b.build().unwrap();
    assert_eq!(sys.normal_form(&Element::one(&a)), Element::one(&a));
}

#[test]
fn nonconfluent_system_is_detected() {
    // XYX -> 0 and YX -> X overlap on XYX in a way that does not resolve:
    // left: 0, right: X*X.
    let a = xy();
    let mut b = SystemBuilder::new(a.clone(), TermOrder::deglex(&a));
    b.rule(word(&a, "XYX"), Element::zero(&a)).unwrap();
    b.rule(word(&a, "YX"), Element::generator(&a, a.get("X"))).unwrap();
    let sys = b.build().unwrap();
    let reports = sys.check_confluence();
    assert!(reports.iter().any(|r| r.kind == AmbiguityKind::Inclusion && !r.resolvable));
    assert!(!sys.is_confluent());
}

#[test]
fn longer_lhs_uses_rewriting_route() {
    // a free algebra modulo Y^3 = 1 and YX = XY: commutative with Y of order 3
    let a = xy();
    let mut b = SystemBuilder::new(a.clone(), TermOrder::deglex(&a));
    b.rule(word(&a, "YYY"), Element::one(&a)).unwrap();
    b.rule(word(&a, "YX"), Element::word(&a, word(&a, "XY"))).unwrap();
    let sys = b.build().unwrap();
    assert!(sys.is_confluent());
    let e = parse_element("(Y*X)^4", &a).unwrap();
    assert_eq!(sys.normal_form(&e).to_text(), "X^4*Y");
}

#[test]
fn definition_text_round_trip() {
    let text = "\
# two generators
alphabet: X Y/y
weights: 1 2
tiebreak: lex
Y*X -> X*Y + 1/2*X
define S := X + y
";
    let def = parse_system_definition(text).unwrap();
    assert_eq!(def.system.rules().len(), 1);
    assert_eq!(def.system.order().weight, WeightVector::new(vec![1, 2]));
    assert_eq!(def.scope.get("S").unwrap().value.to_text(), "X + Y");
    let exported = def.system.to_definition_text();
    let again = parse_system_definition(&exported).unwrap();
    assert_eq!(again.system.rules(), def.system.rules());
    assert_eq!(again.system.order(), def.system.order());
}

#[test]
fn definition_errors_report_lines() {
    let err = parse_system_definition("alphabet: X Y\nY*X -> X*Q\n").unwrap_err();
    assert!(err.to_string().starts_with("line 2:"), "{err}");
    let err = parse_system_definition("alphabet: X Y\n2*Y*X -> X*Y\n").unwrap_err();
    assert!(err.to_string().contains("single word"), "{err}");
    let err = parse_system_definition("Y*X -> X*Y\n").unwrap_err();
    assert!(err.to_string().contains("alphabet"), "{err}");
}
