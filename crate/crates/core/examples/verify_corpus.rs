//! Runs the identity corpus and prints the failures, if any.

use racah_bi::verify::{check_corpus, parse_corpus};

fn main() {
    let results = check_corpus();
    let failed: Vec<_> = results.iter().filter(|r| !r.passed).collect();
    for r in &failed {
        println!("{r}");
    }
    println!("{} identities, {} failed", results.len(), failed.len());

    let custom = parse_corpus("my check | bi | {X, Y} - Z | κ\n").unwrap();
    println!("{}", custom[0].check());
}
