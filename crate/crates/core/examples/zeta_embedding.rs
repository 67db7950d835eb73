//! The homomorphism ζ from the Racah algebra into the Bannai–Ito algebra.

use racah_bi::morphisms::zeta;
use racah_bi::presentations::{bannai_ito, racah, rebase_to_iota};

fn main() {
    let z = zeta();
    let check = z.verify_on_relations();
    println!("ζ respects the Racah relations: {}", check.holds);

    let r = racah();
    for g in ["A", "B", "C", "D", "α", "β"] {
        let image = z.apply(&r.named(g)).unwrap();
        println!("ζ({g}) = {}", image.to_text());
    }

    // images of central elements only involve ι, κ, λ, μ after rebasing
    let delta = z.apply(&r.named("δ")).unwrap();
    println!("ζ(δ) rebased = {}", rebase_to_iota(&delta).to_text());

    let b = bannai_ito();
    let a = z.apply(&r.named("A")).unwrap();
    let bb = z.apply(&r.named("B")).unwrap();
    let d = z.apply(&r.named("D")).unwrap();
    let half_bracket = b.commutator(&a, &bb).scale(&racah_bi::scalar::ratio(1, 2));
    println!("ζ(D) = [ζ(A), ζ(B)]/2: {}", half_bracket == d);
}
