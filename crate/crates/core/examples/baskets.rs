//! Enumerate baskets of terminal quotient points under the Kawamata bound.
//!
//! `cargo run --example baskets`

use std::error::Error;

use qfano::rational::int;
use qfano::singularities::{admissible_types, enumerate_baskets};
use qfano::{Basket, SingularityType};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // the same germ written three ways
    let t: SingularityType = "1/3(1,1,2)".parse()?;
    assert_eq!(t, "1/3(2,2,1)".parse()?);
    assert_eq!(t, SingularityType::new(3, 2)?);
    println!("{t}: contribution {}", t.contribution());

    for q in [2, 19] {
        let types = admissible_types(int(24), Some(q));
        let count = enumerate_baskets(int(24), Some(q)).count();
        println!(
            "q = {q}: {} point types, {count} baskets with sum < 24",
            types.len()
        );
    }

    println!("baskets with sum < 3:");
    for b in enumerate_baskets(int(3), None) {
        println!("  [{b}]  sum = {}", b.contribution_sum());
    }

    let p3457: Basket = "3,1;4,1;5,2;7,2".parse()?;
    println!(
        "P(3,4,5,7): {p3457}, Gorenstein index {}, -K.c2 = {}",
        p3457.gorenstein_index(),
        qfano::orbifold_rr::kawamata_kc2(&p3457)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
