//! Overlap ambiguities of each presentation and how they resolve.

use racah_bi::presentations::{bannai_ito, bi_rebased, racah};

fn main() {
    for p in [racah(), bannai_ito(), bi_rebased()] {
        let reports = p.system().check_confluence();
        println!("{}: {} ambiguities", p.id(), reports.len());
        for r in reports.iter().filter(|r| !r.involves_commutation) {
            println!("  {} -> {}", r.word.to_text(p.alphabet()), r.left_result.to_text());
        }
        let resolved = reports.iter().filter(|r| r.resolvable).count();
        println!("  resolvable: {resolved}/{}", reports.len());
        let basis = p.system().irreducible_words(3);
        println!("  irreducible words of length <= 3: {}", basis.len());
    }
}
