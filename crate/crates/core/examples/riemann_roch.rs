//! Orbifold Riemann–Roch: plurigenera of the index-2 example and the
//! monomial-count check on weighted projective spaces.
//!
//! `cargo run --example riemann_roch`

use std::error::Error;

use qfano::rational::frac;
use qfano::wps::{monomial_counts, wps_invariants, CLASSIFIED_WPS};
use qfano::{NumericalFano, WeightSystem};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let x = NumericalFano::new(2, frac(10, 3), "3,1".parse()?)?;
    println!("q = 2, A^3 = 10/3, basket [{}]", x.basket());
    for t in -3..=4 {
        println!("  chi({t:>2}A) = {}", x.chi(t));
    }
    println!(
        "  dim|A| = {}, genus = {}",
        x.chi_integer(1)? - 1,
        x.genus()?
    );
    println!("  h0(mA), m <= 10: {}", x.hilbert_coeffs(10)?);

    println!("weighted projective spaces, Riemann-Roch vs monomial count (m <= 60):");
    for w in CLASSIFIED_WPS {
        let ws = WeightSystem::new(w.to_vec())?;
        let (q, a3, basket) = wps_invariants(&ws)?;
        let nf = NumericalFano::new(q, a3, basket)?;
        let counts = monomial_counts(&ws, 60);
        let rr = nf.hilbert_coeffs(60)?;
        let same = rr.values() == counts.as_slice();
        println!(
            "  P({ws}): q = {q}, A^3 = {a3}, basket [{}]: {}",
            nf.basket(),
            if same { "equal" } else { "DIFFERENT" }
        );
        if !same {
            return Err(format!("Riemann-Roch disagrees with monomial count for P({ws})").into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
