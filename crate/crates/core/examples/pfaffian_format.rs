//! Hilbert series of graded formats, from degree data alone.
//!
//! `cargo run --example pfaffian_format`

use std::error::Error;

use qfano::wps::{
    format_fano_invariants, format_polynomial, format_series, gorenstein_symmetry_check,
    index_two_pfaffian, named_formats, series_coeffs,
};
use qfano::{HilbertSeries, NumericalFano};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let pf = index_two_pfaffian();
    let series = format_series(&pf);
    let k = pf.adjunction_number();
    println!("{pf}");
    println!(
        "  equation degrees {:?}, adjunction number {k}",
        pf.equation_degrees()
    );
    println!("  numerator {}", format_polynomial(series.numerator()));
    println!(
        "  Gorenstein symmetric: {}",
        gorenstein_symmetry_check(&series, k, 3)
    );

    let mut printed = series.numerator().to_vec();
    printed.truncate(9);
    printed.push(0);
    printed[8] = -1;
    let printed = HilbertSeries::new(printed, series.weights().to_vec());
    println!(
        "  variant {}: symmetric = {}",
        format_polynomial(printed.numerator()),
        gorenstein_symmetry_check(&printed, k, 3)
    );

    let (q, a3) = format_fano_invariants(&pf)?;
    println!("  q = {q}, A^3 = {a3}");
    println!("  h0(mA): {}", series_coeffs(&series, 12)?);

    println!("format series vs Riemann-Roch (order 40):");
    for named in named_formats() {
        let (q, a3) = format_fano_invariants(&named.format)?;
        let nf = NumericalFano::new(q as u32, a3, named.basket.clone())?;
        let agree = nf.hilbert_coeffs(40)? == series_coeffs(&format_series(&named.format), 40)?;
        println!(
            "  {:<32} [{}] {}",
            named.format.to_string(),
            named.basket,
            if agree { "equal" } else { "DIFFERENT" }
        );
        if !agree {
            return Err(format!("series mismatch for {}", named.format).into());
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
