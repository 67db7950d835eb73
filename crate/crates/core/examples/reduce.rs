//! Normal forms in the three built-in presentations.

use racah_bi::presentations::{bannai_ito, bi_rebased, racah};

fn main() {
    let r = racah();
    for expr in ["[A, B]", "C*B*A", "D*A", "γ", "Ω_A - Ω_B"] {
        println!("racah  {expr:>10} = {}", r.parse(expr).unwrap().to_text());
    }

    let b = bannai_ito();
    for expr in ["{X, Y} - Z", "Y*X", "X^2*Y - Y*X^2", "L"] {
        println!("bi     {expr:>10} = {}", b.parse(expr).unwrap().to_text());
    }

    // Z is a defined element once ι replaces it as a generator
    let rb = bi_rebased();
    println!("rebased {:>9} = {}", "Y*X", rb.parse("Y*X").unwrap().to_text());
    println!("rebased {:>9} = {}", "Z", rb.parse("Z").unwrap().to_text());
}
