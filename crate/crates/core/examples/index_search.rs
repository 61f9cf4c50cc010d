//! Five-step candidate search for high Fano indices.
//!
//! `cargo run --release --example index_search`

use std::error::Error;

use qfano::search::{search, SearchConfig};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for q in [19, 17, 13, 11, 14] {
        let records = search(&SearchConfig::new(q))?;
        println!("q = {q}: {} candidate(s)", records.len());
        for r in &records {
            println!(
                "  A^3 = {:<6} genus = {:<3} basket [{}]",
                r.a3.to_string(),
                r.genus,
                r.basket
            );
        }
    }

    // the hypotheses "g > 4" for q = 13 and "g > 10" for q = 11
    for (q, g) in [(13, 5), (11, 11)] {
        let mut config = SearchConfig::new(q);
        config.genus_min = Some(g);
        let records = search(&config)?;
        println!("q = {q}, genus >= {g}: {}", records.len());
        if let Some(r) = records.first() {
            println!("  {}", r.to_json_line());
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
