use std::sync::Arc;

use proptest::prelude::*;
use racah_bi::casimir::{casimir_element, substitute_correction};
use racah_bi::filtration::{is_filtration, Filtration};
use racah_bi::morphisms::{sigma_bi, sigma_racah, tau_bi, tau_racah, zeta};
use racah_bi::presentations::{bannai_ito, bi_rebased, racah, rebase_from_iota, rebase_to_iota};
use racah_bi::scalar::ratio;
use racah_bi::{express_casimir, Alphabet, CasimirSpec, Element, Presentation, WeightVector, Word};

type RawTerm = (Vec<usize>, i64, i64);

fn raw_terms(max_len: usize, max_terms: usize) -> impl Strategy<Value = Vec<RawTerm>> {
    prop::collection::vec(
        (prop::collection::vec(0usize..6, 0..=max_len), -6i64..=6, 1i64..=4),
        0..=max_terms,
    )
}

fn build(alphabet: &Arc<Alphabet>, raw: &[RawTerm]) -> Element {
    Element::from_terms(
        alphabet,
        raw.iter().map(|(letters, n, d)| {
            let w: Word = letters.iter().map(|&r| alphabet.sym(r).unwrap()).collect();
            (w, ratio(*n, *d))
        }),
    )
}

fn presentation(which: u8) -> Arc<Presentation> {
    match which % 3 {
        0 => racah(),
        1 => bannai_ito(),
        _ => bi_rebased(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quotient_is_an_associative_ring(which in 0u8..3, a in raw_terms(3, 3), b in raw_terms(3, 3), c in raw_terms(2, 3)) {
        let p = presentation(which);
        let (a, b, c) = (build(p.alphabet(), &a), build(p.alphabet(), &b), build(p.alphabet(), &c));
        prop_assert_eq!(p.mul(&p.mul(&a, &b), &c), p.mul(&a, &p.mul(&b, &c)));
        prop_assert_eq!(p.mul(&a, &(&b + &c)), &p.mul(&a, &b) + &p.mul(&a, &c));
        prop_assert_eq!(p.mul(&(&a + &b), &c), &p.mul(&a, &c) + &p.mul(&b, &c));
        let one = Element::one(p.alphabet());
        prop_assert_eq!(p.mul(&one, &a), p.normal_form(&a));
    }

    #[test]
    fn free_product_adds_degrees(a in raw_terms(4, 3), b in raw_terms(4, 3)) {
        let alph = racah().alphabet().clone();
        let (a, b) = (build(&alph, &a), build(&alph, &b));
        let ab = &a * &b;
        match (a.degree(), b.degree()) {
            (Some(da), Some(db)) => prop_assert_eq!(ab.degree(), Some(da + db)),
            _ => prop_assert!(ab.is_zero()),
        }
    }

    #[test]
    fn normal_form_is_idempotent_and_multiplicative(which in 0u8..3, a in raw_terms(4, 3), b in raw_terms(4, 3)) {
        let p = presentation(which);
        let (a, b) = (build(p.alphabet(), &a), build(p.alphabet(), &b));
        let na = p.normal_form(&a);
        prop_assert_eq!(p.normal_form(&na), na.clone());
        prop_assert!(na.terms().keys().all(|w| p.system().is_irreducible_word(w)));
        prop_assert_eq!(p.normal_form(&(&a * &b)), p.mul(&na, &p.normal_form(&b)));
    }

    #[test]
    fn fast_route_agrees_with_plain_rewriting(which in 0u8..3, a in raw_terms(4, 4)) {
        let p = presentation(which);
        let a = build(p.alphabet(), &a);
        prop_assert_eq!(p.system().normal_form(&a), p.system().normal_form_by_rewriting(&a));
    }

    #[test]
    fn zeta_is_multiplicative(a in raw_terms(2, 2), b in raw_terms(2, 2)) {
        let r = racah();
        let bi = bannai_ito();
        let (a, b) = (build(r.alphabet(), &a), build(r.alphabet(), &b));
        let z = zeta();
        prop_assert_eq!(
            z.apply(&r.mul(&a, &b)).unwrap(),
            bi.mul(&z.apply(&a).unwrap(), &z.apply(&b).unwrap())
        );
    }

    #[test]
    fn d6_maps_reverse_products(a in raw_terms(3, 3), b in raw_terms(3, 3)) {
        let r = racah();
        let bi = bannai_ito();
        let (ra, rb) = (build(r.alphabet(), &a), build(r.alphabet(), &b));
        for m in [sigma_racah(), tau_racah()] {
            prop_assert_eq!(
                m.apply(&r.mul(&ra, &rb)).unwrap(),
                r.mul(&m.apply(&rb).unwrap(), &m.apply(&ra).unwrap())
            );
        }
        let (ba, bb) = (build(bi.alphabet(), &a), build(bi.alphabet(), &b));
        for m in [sigma_bi(), tau_bi()] {
            prop_assert_eq!(
                m.apply(&bi.mul(&ba, &bb)).unwrap(),
                bi.mul(&m.apply(&bb).unwrap(), &m.apply(&ba).unwrap())
            );
        }
    }

    #[test]
    fn printed_text_parses_back(which in 0u8..3, a in raw_terms(5, 5)) {
        let p = presentation(which);
        let nf = p.normal_form(&build(p.alphabet(), &a));
        let text = nf.to_text();
        let again = p.parse(&text).unwrap();
        prop_assert_eq!(&again, &nf);
        prop_assert_eq!(again.to_text(), text);
        let json = nf.to_json();
        prop_assert_eq!(Element::from_json(p.alphabet(), &json).unwrap(), nf);
    }

    #[test]
    fn filtration_levels_multiply(
        w in prop::collection::vec(0u32..5, 6),
        a in raw_terms(3, 3),
        b in raw_terms(3, 3),
    ) {
        let weights = WeightVector::new(w);
        prop_assume!(is_filtration(&weights).unwrap());
        let f = Filtration::bannai_ito(weights).unwrap();
        let p = f.presentation().clone();
        let a = p.normal_form(&build(p.alphabet(), &a));
        let b = p.normal_form(&build(p.alphabet(), &b));
        let (da, db) = (f.weighted_degree(&a).unwrap(), f.weighted_degree(&b).unwrap());
        let dab = f.weighted_degree(&p.mul(&a, &b)).unwrap();
        if da >= 0 && db >= 0 {
            prop_assert!(dab <= da + db);
        }
        // dropping more levels never adds terms
        let n = da.max(0) as u64;
        let lead = f.leading_form(&a, n);
        let lead_next = f.leading_form(&a, n + 1);
        prop_assert!(lead_next.terms().keys().all(|w| lead.terms().contains_key(w)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn rebasing_round_trips(a in raw_terms(4, 4)) {
        let b = bannai_ito();
        let e = build(b.alphabet(), &a);
        prop_assert_eq!(rebase_from_iota(&rebase_to_iota(&e)), b.normal_form(&e));
    }
}

fn correction() -> impl Strategy<Value = CasimirSpec> {
    let names = ["1", "α", "β", "γ", "δ"];
    prop::collection::vec((0usize..5, 0usize..5, -4i64..=4, 1i64..=3), 0..4).prop_map(move |ts| {
        let text: Vec<String> = ts
            .iter()
            .map(|(i, j, n, d)| format!("({n}/{d})*{}*{}", names[*i], names[*j]))
            .collect();
        let text = if text.is_empty() { "0".to_string() } else { text.join(" + ") };
        CasimirSpec::parse(&text).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn casimir_polynomial_is_determined_by_the_element(q1 in correction(), q2 in correction()) {
        let (o1, o2) = (casimir_element(&q1), casimir_element(&q2));
        let (p1, p2) = (express_casimir(&o1).unwrap(), express_casimir(&o2).unwrap());
        prop_assert_eq!(p1.to_bannai_ito(), zeta().apply(&o1).unwrap());
        prop_assert_eq!(&p1.0 - &p2.0, &substitute_correction(&q1).0 - &substitute_correction(&q2).0);
        // ζ is injective on these elements, so equal polynomials force equal elements
        prop_assert_eq!(p1 == p2, o1 == o2);
    }
}
