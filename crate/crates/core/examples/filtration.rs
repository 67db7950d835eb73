//! Weight vectors on the Bannai–Ito generators and the leading forms they
//! pick out.

use racah_bi::filtration::{is_filtration, Filtration};
use racah_bi::morphisms::zeta;
use racah_bi::presentations::racah;
use racah_bi::WeightVector;

fn main() {
    for w in ["4,4,6,8,9,9", "1,1,2,0,0,0", "1,1,1,1,1,1", "0,0,1,0,0,0"] {
        let weights = WeightVector::parse(w).unwrap();
        let f = Filtration::bannai_ito(weights.clone()).unwrap();
        print!("{weights}: filtration {}", is_filtration(&weights).unwrap());
        match f.check_product(4, 2) {
            Ok(()) => println!(),
            Err(witness) => println!(
                "  (product {} has weight {} > {})",
                witness.product.to_text(),
                witness.degree,
                witness.bound
            ),
        }
    }

    let f = Filtration::bannai_ito(WeightVector::parse("4,4,6,8,9,9").unwrap()).unwrap();
    let r = racah();
    let d = zeta().apply(&r.named("D")).unwrap();
    let d2 = zeta().apply(&r.parse("D^2").unwrap()).unwrap();
    println!("lead_14 ζ(D)  = {}", f.leading_form(&d, 14).to_text());
    println!("lead_28 ζ(D²) = {}", f.leading_form(&d2, 28).to_text());
}
