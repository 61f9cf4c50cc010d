//! Exact rational numbers and their text form.
//!
//! Rationals print as `p/q` in lowest terms with `q > 0`, integers as `p`.

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Exact rational used throughout the crate.
///
/// `i128` leaves ample headroom: denominators stay bounded by small
/// multiples of `12 · lcm(r_P)²` and numerators by `t³` for the ranges
/// scanned here.
pub type Rational = Ratio<i128>;

pub fn int(n: i128) -> Rational {
    Rational::from_integer(n)
}

pub fn frac(n: i128, d: i128) -> Rational {
    Rational::new(n, d)
}

/// Parses `p`, `-p`, `p/q`.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i128 = n.trim().parse().map_err(|_| bad())?;
            let d: i128 = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(int(s.parse().map_err(|_| bad())?)),
    }
}

/// Returns the value as an integer when the denominator is one.
pub fn as_integer(x: &Rational) -> Option<i128> {
    x.denom().is_one().then(|| *x.numer())
}

/// Serde adapter writing a [`Rational`] as its canonical string.
pub mod as_string {
    use serde::{de, Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(x)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse(&s).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_is_lowest_terms() {
        assert_eq!(frac(6, -4).to_string(), "-3/2");
        assert_eq!(frac(8, 4).to_string(), "2");
        assert_eq!(int(0).to_string(), "0");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse("10/3").unwrap(), frac(10, 3));
        assert_eq!(parse(" -7 ").unwrap(), int(-7));
        assert_eq!(parse("4/6").unwrap().to_string(), "2/3");
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }
}
