//! Index-2 search: basket filter `χ(-A) = 0`, then `A³` on the grid `k/r`.
//!
//! `cargo run --release --example index_two_search`

use std::error::Error;

use qfano::rational::frac;
use qfano::search::{search, Flag, SearchConfig, INDEX_TWO_REFERENCE_COUNT};
use qfano::Basket;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mut config = SearchConfig::new(2);
    config.partitions = 4;
    let records = search(&config)?;
    println!(
        "{} numerical Hilbert series (published count {INDEX_TWO_REFERENCE_COUNT})",
        records.len()
    );

    let third: Basket = "3,1".parse()?;
    for a3 in [frac(7, 3), frac(10, 3)] {
        let r = records
            .iter()
            .find(|r| r.basket == third && r.a3 == a3)
            .ok_or("family missing from the search")?;
        println!(
            "  [{}] A^3 = {a3}: genus {}, h0 = {:?}",
            r.basket, r.genus, r.h0
        );
    }

    let above = records
        .iter()
        .filter(|r| r.flags.contains(&Flag::AboveDimensionBound))
        .count();
    let empty_a = records
        .iter()
        .filter(|r| r.flags.contains(&Flag::ChiANonpositive))
        .count();
    let max_genus = records.iter().map(|r| r.genus).max().unwrap_or_default();
    println!("  non-Gorenstein with dim|A| >= 5: {above}");
    println!("  with |A| empty: {empty_a}");
    println!("  largest genus: {max_genus}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
