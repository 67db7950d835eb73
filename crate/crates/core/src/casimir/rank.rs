//! Truncated injectivity check for ζ.
//!
//! Racah basis monomials `A^i B^j C^k D^l α^r β^s` are graded by
//! `8i + 8j + 12k + 14l + 18r + 18s`. Their ζ-images should be linearly
//! independent, and each image should carry the coefficient
//! `(-1)^s 4^(-i-j-k-2l-3r-3s)` at `X^2i Y^2j Z^(2k+l) κ^l λ^2s μ^2r`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::Zero;
use serde::Serialize;

use crate::element::Element;
use crate::linalg::{integer_rows, rank_fraction_free};
use crate::morphisms::zeta;
use crate::presentations::{bannai_ito, racah};
use crate::scalar::{format_scalar, pow_scalar, ratio, Scalar};
use crate::word::Word;

/// Grading weights of `A, B, C, D, α, β`.
pub const ZETA_WEIGHTS: [u32; 6] = [8, 8, 12, 14, 18, 18];

#[derive(Debug, Clone, Serialize)]
pub struct MonomialReport {
    /// `(i, j, k, l, r, s)`.
    pub exponents: [u32; 6],
    pub weight: u32,
    pub leading_word: String,
    pub expected: String,
    pub computed: String,
    pub matches: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct RankReport {
    pub max_weight: u32,
    pub dimension_source: usize,
    pub dimension_image: usize,
    pub full_rank: bool,
    pub leading_map_injective: bool,
    pub coefficients_match: bool,
    pub monomials: Vec<MonomialReport>,
    pub pass: bool,
}

/// All exponent tuples of graded weight at most `max_weight`.
pub fn racah_monomials_by_weight(max_weight: u32) -> Vec<[u32; 6]> {
    fn go(pos: usize, left: u32, cur: &mut [u32; 6], out: &mut Vec<[u32; 6]>) {
        if pos == 6 {
            out.push(*cur);
            return;
        }
        let w = ZETA_WEIGHTS[pos];
        for e in 0..=left / w {
            cur[pos] = e;
            go(pos + 1, left - e * w, cur, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    go(0, max_weight, &mut [0; 6], &mut out);
    out
}

fn expected_coefficient(e: &[u32; 6]) -> Scalar {
    let [i, j, k, l, r, s] = *e;
    let mut c = pow_scalar(&ratio(1, 4), (i + j + k + 2 * l + 3 * r + 3 * s) as i64);
    if s % 2 == 1 {
        c = -c;
    }
    c
}

fn leading_exponents(e: &[u32; 6]) -> [u32; 6] {
    let [i, j, k, l, r, s] = *e;
    [2 * i, 2 * j, 2 * k + l, l, 2 * s, 2 * r]
}

pub fn zeta_rank_check(max_weight: u32) -> RankReport {
    let r = racah();
    let b = bannai_ito();
    let z = zeta();
    let tuples = racah_monomials_by_weight(max_weight);
    let gens: Vec<Element> = ["A", "B", "C", "D", "α", "β"]
        .iter()
        .map(|g| z.apply(&r.named(g)).expect("ζ is sealed"))
        .collect();
    let mut powers: HashMap<(usize, u32), Element> = HashMap::new();
    let mut power = |g: usize, n: u32| -> Element {
        if let Some(p) = powers.get(&(g, n)) {
            return p.clone();
        }
        let p = b.pow(&gens[g], n);
        powers.insert((g, n), p.clone());
        p
    };

    let mut images = Vec::with_capacity(tuples.len());
    let mut monomials = Vec::with_capacity(tuples.len());
    for t in &tuples {
        let mut img = Element::one(b.alphabet());
        for (g, &n) in t.iter().enumerate() {
            if n > 0 {
                img = b.mul(&img, &power(g, n));
            }
        }
        let lead = Word::from_exponents(&leading_exponents(t));
        let expected = expected_coefficient(t);
        let computed = img.coeff(&lead);
        monomials.push(MonomialReport {
            exponents: *t,
            weight: t.iter().zip(ZETA_WEIGHTS).map(|(e, w)| e * w).sum(),
            leading_word: lead.to_text(b.alphabet()),
            expected: format_scalar(&expected),
            computed: format_scalar(&computed),
            matches: expected == computed,
        });
        images.push(img);
    }

    let columns: BTreeMap<&Word, usize> = images
        .iter()
        .flat_map(|e| e.terms().keys())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .enumerate()
        .map(|(i, w)| (w, i))
        .collect();
    let rows: Vec<Vec<Scalar>> = images
        .iter()
        .map(|e| {
            let mut row = vec![Scalar::zero(); columns.len()];
            for (w, c) in e.terms() {
                row[columns[w]] = c.clone();
            }
            row
        })
        .collect();
    let rank = rank_fraction_free(integer_rows(&rows));

    let leads: BTreeSet<[u32; 6]> = tuples.iter().map(leading_exponents).collect();
    let full_rank = rank == tuples.len();
    let leading_map_injective = leads.len() == tuples.len();
    let coefficients_match = monomials.iter().all(|m| m.matches);
    RankReport {
        max_weight,
        dimension_source: tuples.len(),
        dimension_image: rank,
        full_rank,
        leading_map_injective,
        coefficients_match,
        monomials,
        pass: full_rank && leading_map_injective && coefficients_match,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_zero_is_the_unit() {
        let rep = zeta_rank_check(0);
        assert_eq!(rep.dimension_source, 1);
        assert!(rep.pass);
    }

    #[test]
    fn d_at_weight_fourteen() {
        let rep = zeta_rank_check(14);
        let d = rep
            .monomials
            .iter()
            .find(|m| m.exponents == [0, 0, 0, 1, 0, 0])
            .unwrap();
        assert_eq!(d.leading_word, "Z*κ");
        assert_eq!(d.computed, "1/16");
        assert!(rep.pass);
    }

    #[test]
    fn enumeration_counts() {
        // weights 8, 8, 12, 14 fit below 16: 1, A, B, C, D, A^2, AB, B^2
        assert_eq!(racah_monomials_by_weight(16).len(), 8);
    }
}
