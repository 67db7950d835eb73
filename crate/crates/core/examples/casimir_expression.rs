//! Casimir elements of the Racah algebra as polynomials in the central
//! elements ι, κ, λ, μ of the Bannai–Ito algebra.

use racah_bi::casimir::{casimir_class_correction, casimir_element, substitute_correction};
use racah_bi::presentations::racah;
use racah_bi::{express_casimir, CasimirSpec};

fn main() {
    let r = racah();
    for name in ["Ω_A", "Ω_B", "Ω_C"] {
        let omega = r.named(name);
        let q = casimir_class_correction(&omega).unwrap();
        println!("{name} = base + ({})", q.to_text());
        println!("  P = {}", express_casimir(&omega).unwrap().to_text());
    }

    // changing the representative shifts P by Q evaluated at the images of α, β, γ, δ
    let spec = CasimirSpec::parse("δ^2 - 3*α").unwrap();
    let omega = casimir_element(&spec);
    let p = express_casimir(&omega).unwrap();
    println!("base + ({}) -> P = {}", spec.to_text(), p.to_text());
    println!("Q̂ = {}", substitute_correction(&spec).to_text());

    match express_casimir(&r.named("A")) {
        Ok(_) => unreachable!(),
        Err(e) => println!("A: {e}"),
    }
}
