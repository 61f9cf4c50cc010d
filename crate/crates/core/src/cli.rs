//! The `qfano` command line.
//!
//! Exit codes: `0` success (including empty search results), `1` verification
//! failure or internal inconsistency, `2` usage error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::ledger::{parse_chain, verify_paper_chain, LinkLedger};
use crate::rational::{self, frac, int};
use crate::search::{self, SearchConfig, INDEX_TWO_REFERENCE_COUNT};
use crate::wps::{self, format_polynomial, GradedFormat, WeightSystem};
use crate::{Basket, Error, NumericalFano};

/// Environment variable capping the number of search worker threads.
pub const THREADS_ENV: &str = "QFANO_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "qfano",
    version,
    about = "Exact numerics for Q-Fano threefolds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Search numerical candidates of Fano index q; writes one JSON record per line.
    Search {
        /// Fano index.
        #[arg(long)]
        q: u32,
        /// Keep only candidates of genus at least this value.
        #[arg(long)]
        genus_min: Option<i64>,
        /// Report plurigenera h0(mA) for m = 0..=terms.
        #[arg(long, default_value_t = 10)]
        terms: usize,
        /// Write records to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Split the basket enumeration into this many parallel partitions.
        #[arg(long, default_value_t = 1)]
        partitions: usize,
        /// Integrality is checked for -q < t <= q + max_terms * r.
        #[arg(long, default_value_t = 2)]
        max_terms: u32,
    },
    /// Print h0(mA) = chi(mA), m = 0..=terms, from orbifold Riemann-Roch.
    Hilbert {
        #[arg(long)]
        q: u32,
        /// A^3 as p/q.
        #[arg(long = "A3")]
        a3: String,
        /// Basket as "r,b,m;..." or "m*1/r(1,a,b);...".
        #[arg(long, default_value = "")]
        basket: String,
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
    /// Print q, A^3 and basket of a weighted projective 3-space, e.g. "3,4,5,7".
    Wps { weights: String },
    /// Print the Hilbert series of a graded format, e.g. "hyp:6@1,2,3,4,5".
    Format {
        spec: String,
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
    /// Print the (-K)^3 trace of a chain such as "blowpt, flop, contract:1/2(1,1,1)".
    Ledger {
        chain: String,
        /// Starting degree (-K)^3.
        #[arg(long)]
        start: String,
    },
    /// Re-run the checks of the index-2 example: degree chain, Riemann-Roch
    /// invariants and the Pfaffian series.
    VerifyExample,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidFormat(_) | Error::InvalidStep(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Verification(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Verification(format!("i/o error: {e}"))
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{rendered}");
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Verification(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn threads_from_env() -> Result<Option<usize>, Failure> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(Some)
            .map_err(|_| Failure::Usage(format!("{THREADS_ENV}={v:?} is not a count"))),
        Err(_) => Ok(None),
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Search {
            q,
            genus_min,
            terms,
            out: path,
            partitions,
            max_terms,
        } => {
            let config = SearchConfig {
                q,
                max_terms,
                emit_series_to: terms,
                genus_min,
                partitions,
                threads: threads_from_env()?,
            };
            if q < 2 {
                return Err(Failure::Usage(format!("search needs q >= 2, got {q}")));
            }
            let records = search::search(&config)?;
            match path {
                Some(p) => {
                    let mut w = BufWriter::new(File::create(&p)?);
                    for r in &records {
                        writeln!(w, "{}", r.to_json_line())?;
                    }
                    w.flush()?;
                }
                None => {
                    for r in &records {
                        writeln!(out, "{}", r.to_json_line())?;
                    }
                }
            }
            if q == 2 {
                writeln!(
                    err,
                    "q = 2: {} candidates (published bound {INDEX_TWO_REFERENCE_COUNT})",
                    records.len()
                )?;
            } else {
                writeln!(err, "q = {q}: {} candidates", records.len())?;
            }
        }
        Command::Hilbert {
            q,
            a3,
            basket,
            terms,
        } => {
            let a3 = rational::parse(&a3)?;
            let basket: Basket = basket.parse()?;
            let nf = NumericalFano::new(q, a3, basket)?;
            writeln!(out, "{}", nf.hilbert_coeffs(terms)?)?;
        }
        Command::Wps { weights } => {
            let w: WeightSystem = weights.parse()?;
            let (q, a3, basket) = wps::wps_invariants(&w)?;
            writeln!(out, "q = {q}")?;
            writeln!(out, "A3 = {a3}")?;
            writeln!(out, "basket = {basket}")?;
        }
        Command::Format { spec, terms } => {
            let f: GradedFormat = spec.parse()?;
            let series = wps::format_series(&f);
            let k = f.adjunction_number();
            writeln!(out, "format = {f}")?;
            writeln!(out, "numerator = {}", format_polynomial(series.numerator()))?;
            writeln!(out, "weights = {}", f.ambient())?;
            writeln!(out, "adjunction = {k}")?;
            writeln!(
                out,
                "gorenstein_symmetric = {}",
                wps::gorenstein_symmetry_check(&series, k, f.codimension())
            )?;
            if f.dimension() == 3 {
                let (q, a3) = wps::format_fano_invariants(&f)?;
                writeln!(out, "q = {q}")?;
                writeln!(out, "A3 = {a3}")?;
            }
            writeln!(
                out,
                "coefficients = {}",
                wps::series_coeffs(&series, terms)?
            )?;
        }
        Command::Ledger { chain, start } => {
            let start = rational::parse(&start)?;
            let ledger = LinkLedger::new(start, parse_chain(&chain)?)?;
            writeln!(out, "{}", ledger.trace())?;
        }
        Command::VerifyExample => verify_example(out)?,
    }
    Ok(())
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}

fn verify_example(out: &mut dyn Write) -> Result<(), Failure> {
    let mut all = true;

    let report = verify_paper_chain()?;
    writeln!(
        out,
        "chain: {} [{}]",
        report.ledger.trace(),
        verdict(report.trace_matches())
    )?;
    writeln!(
        out,
        "(-K)^3 = {} = 8*(10/3) [{}]",
        report.ledger.final_degree(),
        verdict(report.endpoint_matches())
    )?;
    all &= report.passed();

    let x = NumericalFano::new(2, frac(10, 3), "3,1".parse()?)?;
    let rr_ok = x.chi(1) == int(5) && x.chi(-1) == int(0);
    writeln!(
        out,
        "h0(A) = {}, chi(-A) = {} [{}]",
        x.chi(1),
        x.chi(-1),
        verdict(rr_ok)
    )?;
    let genus = x.genus()?;
    writeln!(out, "g = {genus}")?;
    all &= rr_ok && genus == 14;

    let pf = wps::index_two_pfaffian();
    let series = wps::format_series(&pf);
    let symmetric = wps::gorenstein_symmetry_check(&series, pf.adjunction_number(), 3);
    writeln!(
        out,
        "pfaffian numerator: {} [{}]",
        format_polynomial(series.numerator()),
        verdict(symmetric)
    )?;
    let (q, a3) = wps::format_fano_invariants(&pf)?;
    let inv_ok = q == 2 && a3 == frac(7, 3);
    writeln!(out, "pfaffian q = {q}, A3 = {a3} [{}]", verdict(inv_ok))?;
    let y = NumericalFano::new(2, a3, "3,1".parse()?)?;
    let agree = y.hilbert_coeffs(40)? == wps::series_coeffs(&series, 40)?;
    writeln!(
        out,
        "pfaffian series = Riemann-Roch series to order 40 [{}]",
        verdict(agree)
    )?;
    all &= symmetric && inv_ok && agree;

    if all {
        Ok(())
    } else {
        Err(Failure::Verification("example verification failed".into()))
    }
}
