//! `(-K)³` along the link from the smooth quadric to the index-2 threefold,
//! and Δ-genus values.
//!
//! `cargo run --example sarkisov_chain`

use std::error::Error;

use qfano::ledger::{delta_genus, delta_genus_del_pezzo, verify_paper_chain};
use qfano::rational::int;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let report = verify_paper_chain()?;
    let ledger = &report.ledger;
    println!("start (-K)^3 = {}", ledger.start_degree());
    for (step, deg) in ledger.steps().iter().zip(&ledger.degrees()[1..]) {
        println!("  {step:<28} -> {deg}");
    }
    println!(
        "endpoint {} = (2A)^3 with A^3 = 10/3: {}",
        ledger.final_degree(),
        report.endpoint_matches()
    );
    if !report.passed() {
        return Err("degree chain does not match".into());
    }
    println!("reversed: {}", ledger.reversed()?.trace());

    println!("delta genus:");
    println!("  (P3, O(1))              {}", delta_genus(3, int(1), 4)?);
    println!("  del Pezzo 3-fold, S^3=5 {}", delta_genus(3, int(5), 7)?);
    for lambda in 2..=4 {
        println!(
            "  lambda = {lambda}, K_S^2 = 8: {}",
            delta_genus_del_pezzo(int(lambda), 8)?
        );
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
