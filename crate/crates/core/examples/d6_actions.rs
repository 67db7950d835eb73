//! The dihedral group of order 12 acting by antiautomorphisms, and ζ
//! intertwining the two actions.

use racah_bi::morphisms::{check_d6_relations, check_equivariance, sigma_bi, sigma_racah, tau_bi, tau_racah, zeta};
use racah_bi::presentations::racah;
use racah_bi::{D6Action, D6Element};

fn main() {
    println!("racah relations hold: {}", check_d6_relations(sigma_racah(), tau_racah()));
    println!("bi relations hold:    {}", check_d6_relations(sigma_bi(), tau_bi()));

    let r = racah();
    let action = D6Action::racah();
    for g in D6Element::all() {
        let m = action.map_for(g);
        let images: Vec<String> = ["Ω_A", "Ω_B", "Ω_C"]
            .iter()
            .map(|n| m.apply(&r.named(n)).unwrap())
            .map(|e| {
                ["Ω_A", "Ω_B", "Ω_C"]
                    .into_iter()
                    .find(|n| r.named(n) == e)
                    .unwrap_or("?")
                    .to_string()
            })
            .collect();
        let equivariant = check_equivariance(zeta(), &action, &D6Action::bannai_ito(), g).unwrap();
        println!("{g:>8}: Ω_A, Ω_B, Ω_C -> {}   ζ-equivariant: {equivariant}", images.join(", "));
    }
}
