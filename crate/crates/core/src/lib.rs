//! Exact numerics for ℚ-Fano threefolds.
//!
//! The crate covers the arithmetic side of the classification of ℚ-Fano
//! threefolds of rank one:
//!
//! * [`singularities`]: terminal cyclic quotient types `1/r(1,a,r-a)`, baskets
//!   and their exhaustive enumeration under the Kawamata bound.
//! * [`orbifold_rr`]: local correction terms and the orbifold Riemann–Roch
//!   Euler characteristic `χ(tA)`, genus and plurigenera.
//! * [`search`]: the five-step numerical candidate search for a fixed Fano
//!   index, including the index-2 regime where `A³` is scanned on a grid.
//! * [`wps`]: weight systems, graded formats (weighted projective spaces,
//!   hypersurfaces, complete intersections, 5×5 Pfaffians) and the monomial
//!   counting oracle that pins every convention above.
//! * [`ledger`]: `(-K)³` bookkeeping along Sarkisov links and Δ-genus helpers.
//! * [`cli`]: the `qfano` command line front end.
//!
//! All arithmetic is exact; see [`Rational`].

pub mod cli;
pub mod error;
pub mod ledger;
pub mod orbifold_rr;
pub mod rational;
pub mod search;
pub mod singularities;
pub mod wps;

pub use error::{Error, Result};
pub use ledger::{LedgerStep, LinkLedger};
pub use orbifold_rr::{HilbertCoefficients, NumericalFano};
pub use rational::Rational;
pub use search::{CandidateRecord, Flag, SearchConfig};
pub use singularities::{Basket, SingularityType};
pub use wps::{FormatKind, GradedFormat, HilbertSeries, WeightSystem};
