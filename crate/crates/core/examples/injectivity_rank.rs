//! Truncated injectivity check: ζ-images of Racah basis monomials up to a
//! graded weight are linearly independent, with predictable leading terms.

use racah_bi::casimir::zeta_rank_check;

fn main() {
    let max_weight = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(40);
    let report = zeta_rank_check(max_weight);
    for m in &report.monomials {
        println!(
            "{:?} weight {:>2}: {} coefficient {} (expected {})",
            m.exponents, m.weight, m.leading_word, m.computed, m.expected
        );
    }
    println!(
        "rank {} of {}, leading map injective: {}, pass: {}",
        report.dimension_image, report.dimension_source, report.leading_map_injective, report.pass
    );
}
