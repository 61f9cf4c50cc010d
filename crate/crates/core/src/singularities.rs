//! Terminal cyclic quotient singularities and baskets.
//!
//! A point of type `1/r(1,a,r-a)` is stored as `(r, b)` with `b` the smaller
//! of `a` and `r - a`; those two weights describe the same germ (swap the last
//! two coordinates). Baskets are multisets of such types kept in sorted
//! order so that equality, hashing and text encoding are canonical.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::rational::{frac, int};
use crate::{Error, Rational, Result};

/// Largest total contribution a basket of a Fano threefold can have:
/// `-K·c₂ = 24 - Σ (r - 1/r)` must stay positive.
pub const KAWAMATA_BOUND: i128 = 24;

/// Multiplicative inverse of `x` modulo `m`, if it exists.
pub fn mod_inverse(x: i64, m: i64) -> Option<i64> {
    let g = x.rem_euclid(m).extended_gcd(&m);
    (g.gcd == 1).then(|| g.x.rem_euclid(m))
}

/// A terminal cyclic quotient point `1/r(1, r-b, b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SingularityType {
    r: u32,
    b: u32,
}

impl SingularityType {
    /// Validates and canonicalizes `1/r(1, r-b, b)`.
    pub fn new(r: i64, b: i64) -> Result<Self> {
        if r < 2 || b < 1 || b >= r {
            return Err(Error::WeightOutOfRange { r, b });
        }
        let g = b.gcd(&r);
        if g != 1 {
            return Err(Error::NotTerminal { r, b, g });
        }
        let b = b.min(r - b);
        Ok(Self {
            r: r as u32,
            b: b as u32,
        })
    }

    /// Reads an arbitrary weight triple `1/r(w1,w2,w3)` of a terminal cyclic
    /// quotient: two weights must sum to zero mod `r` and all must be units.
    pub fn from_weights(r: i64, w: [i64; 3]) -> Result<Self> {
        if r < 2 {
            return Err(Error::WeightOutOfRange { r, b: w[0] });
        }
        for &x in &w {
            let g = x.rem_euclid(r).gcd(&r);
            if g != 1 {
                return Err(Error::NotTerminal {
                    r,
                    b: x.rem_euclid(r),
                    g,
                });
            }
        }
        for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
            if (w[i] + w[j]).rem_euclid(r) == 0 {
                // units checked above
                let inv = mod_inverse(w[k], r).expect("unit");
                return Self::new(r, (w[i] * inv).rem_euclid(r));
            }
        }
        Err(Error::Parse(format!(
            "1/{r}({},{},{}) has no pair of weights summing to 0 mod {r}",
            w[0], w[1], w[2]
        )))
    }

    /// Local index `r`.
    pub fn r(&self) -> u32 {
        self.r
    }

    /// Canonical pair weight, `1 <= b <= r/2`.
    pub fn b(&self) -> u32 {
        self.b
    }

    /// The middle weight `r - b` of the printed form `1/r(1, r-b, b)`.
    pub fn a(&self) -> u32 {
        self.r - self.b
    }

    /// `b⁻¹ mod r`, reduced into `1..=r/2`.
    ///
    /// Rescaling `1/r(1,-b,b)` by `b⁻¹` gives `1/r(b⁻¹,-b⁻¹,1)`: this is the
    /// weight that steps through the local class group in the correction term.
    pub fn inverse_weight(&self) -> u32 {
        let inv = mod_inverse(self.b as i64, self.r as i64).expect("b is a unit") as u32;
        inv.min(self.r - inv)
    }

    /// The two pair weights describing this germ, `{b, r-b}`.
    pub fn orbit(&self) -> [u32; 2] {
        [self.b, self.r - self.b]
    }

    /// `r - 1/r`, the point's share of the Kawamata identity.
    pub fn contribution(&self) -> Rational {
        int(self.r as i128) - frac(1, self.r as i128)
    }
}

impl fmt::Display for SingularityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/{}(1,{},{})", self.r, self.a(), self.b)
    }
}

impl FromStr for SingularityType {
    type Err = Error;

    /// Accepts `1/r(w1,w2,w3)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a singularity type: {s:?}"));
        let s = s.trim();
        let rest = s.strip_prefix("1/").ok_or_else(bad)?;
        let (r, rest) = rest.split_once('(').ok_or_else(bad)?;
        let inner = rest.strip_suffix(')').ok_or_else(bad)?;
        let r: i64 = r.trim().parse().map_err(|_| bad())?;
        let w: Vec<i64> = inner
            .split(',')
            .map(|x| x.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let w: [i64; 3] = w.try_into().map_err(|_| bad())?;
        Self::from_weights(r, w)
    }
}

/// A finite multiset of singularity types.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Basket {
    entries: Vec<(SingularityType, u32)>,
}

impl Basket {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a basket from individual points.
    pub fn new(points: impl IntoIterator<Item = SingularityType>) -> Result<Self> {
        Self::from_entries(points.into_iter().map(|t| (t, 1)))
    }

    /// Builds a basket from `(type, multiplicity)` pairs; repeated types are
    /// merged and zero multiplicities dropped.
    pub fn from_entries(entries: impl IntoIterator<Item = (SingularityType, u32)>) -> Result<Self> {
        let mut v: Vec<(SingularityType, u32)> = entries.into_iter().filter(|e| e.1 > 0).collect();
        v.sort();
        let mut merged: Vec<(SingularityType, u32)> = Vec::with_capacity(v.len());
        for (t, m) in v {
            match merged.last_mut() {
                Some((u, n)) if *u == t => *n += m,
                _ => merged.push((t, m)),
            }
        }
        let basket = Self { entries: merged };
        let kc2 = int(KAWAMATA_BOUND) - basket.contribution_sum();
        if kc2 <= int(0) {
            return Err(Error::NonPositiveKc2(kc2));
        }
        Ok(basket)
    }

    /// Sorted `(type, multiplicity)` pairs.
    pub fn entries(&self) -> &[(SingularityType, u32)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of points counted with multiplicity.
    pub fn num_points(&self) -> u32 {
        self.entries.iter().map(|e| e.1).sum()
    }

    /// Points with multiplicity, in canonical order.
    pub fn points(&self) -> impl Iterator<Item = SingularityType> + '_ {
        self.entries
            .iter()
            .flat_map(|&(t, m)| std::iter::repeat_n(t, m as usize))
    }

    /// `Σ m_P (r_P - 1/r_P)`.
    pub fn contribution_sum(&self) -> Rational {
        self.entries
            .iter()
            .map(|(t, m)| t.contribution() * int(*m as i128))
            .sum()
    }

    /// Gorenstein index: lcm of the local indices, 1 for the empty basket.
    pub fn gorenstein_index(&self) -> u64 {
        self.entries
            .iter()
            .fold(1u64, |acc, (t, _)| acc.lcm(&(t.r as u64)))
    }

    /// `[r, b, m]` triples used by the JSON records.
    pub fn to_triples(&self) -> Vec<[u32; 3]> {
        self.entries.iter().map(|(t, m)| [t.r, t.b, *m]).collect()
    }

    pub fn from_triples(triples: &[[u32; 3]]) -> Result<Self> {
        triples
            .iter()
            .map(|&[r, b, m]| Ok((SingularityType::new(r as i64, b as i64)?, m)))
            .collect::<Result<Vec<_>>>()
            .and_then(Self::from_entries)
    }
}

impl fmt::Display for Basket {
    /// `m*1/r(1,a,b)` terms joined by `;`; the empty basket prints as nothing.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (t, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{m}*{t}")?;
        }
        Ok(())
    }
}

impl FromStr for Basket {
    type Err = Error;

    /// Parses either the canonical `m*1/r(1,a,b);…` encoding or the compact
    /// `r,b,m;…` form. Empty input is the empty basket.
    fn from_str(s: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for term in s.split(';').map(str::trim).filter(|t| !t.is_empty()) {
            let bad = || Error::Parse(format!("bad basket term {term:?}"));
            if term.contains('(') {
                let (m, t) = match term.split_once('*') {
                    Some((m, t)) => (m.trim().parse::<u32>().map_err(|_| bad())?, t),
                    None => (1, term),
                };
                entries.push((t.parse::<SingularityType>()?, m));
            } else {
                let nums: Vec<i64> = term
                    .split(',')
                    .map(|x| x.trim().parse().map_err(|_| bad()))
                    .collect::<Result<_>>()?;
                let (r, b, m) = match nums[..] {
                    [r, b] => (r, b, 1),
                    [r, b, m] if m >= 0 => (r, b, m),
                    _ => return Err(bad()),
                };
                entries.push((SingularityType::new(r, b)?, m as u32));
            }
        }
        Self::from_entries(entries)
    }
}

/// Canonical types with contribution below `max_sum`, optionally restricted
/// to indices coprime to `coprime_to`, in `(r, b)` order.
pub fn admissible_types(max_sum: Rational, coprime_to: Option<u32>) -> Vec<SingularityType> {
    let mut out = Vec::new();
    let mut r: i64 = 2;
    loop {
        let c = int(r as i128) - frac(1, r as i128);
        if c >= max_sum {
            break;
        }
        if coprime_to.is_none_or(|q| (q as i64).gcd(&r) == 1) {
            out.extend((1..=r / 2).filter_map(|b| SingularityType::new(r, b).ok()));
        }
        r += 1;
    }
    out
}

/// Stream of baskets in canonical order, see [`enumerate_baskets`].
pub type BasketStream = std::vec::IntoIter<Basket>;

/// Every basket of canonical types with `Σ (r - 1/r) < max_sum`, each once.
///
/// `max_sum` is capped at 24. With `index_coprime_to = Some(q)` only indices
/// coprime to `q` occur. The order is the derived [`Basket`] order:
/// lexicographic on the sorted `(r, b, m)` entry list, the empty basket first.
pub fn enumerate_baskets(max_sum: Rational, index_coprime_to: Option<u32>) -> BasketStream {
    let mut all: Vec<Basket> = enumerate_partitioned(max_sum, index_coprime_to, 1)
        .into_iter()
        .flatten()
        .collect();
    all.sort();
    all.into_iter()
}

/// Splits the enumeration into `partitions` disjoint parts by the position of
/// the basket's first type (the empty basket goes to part 0). Each part is
/// sorted; concatenating and re-sorting reproduces [`enumerate_baskets`].
pub fn enumerate_partitioned(
    max_sum: Rational,
    index_coprime_to: Option<u32>,
    partitions: usize,
) -> Vec<Vec<Basket>> {
    let partitions = partitions.max(1);
    let max_sum = max_sum.min(int(KAWAMATA_BOUND));
    let types = admissible_types(max_sum, index_coprime_to);
    let contributions: Vec<Rational> = types.iter().map(SingularityType::contribution).collect();

    let mut parts: Vec<Vec<Basket>> = vec![Vec::new(); partitions];
    if max_sum > int(0) {
        parts[0].push(Basket::empty());
    }
    let mut walker = Walker {
        types: &types,
        contributions: &contributions,
        current: Vec::new(),
        out: Vec::new(),
    };
    for first in 0..types.len() {
        if contributions[first] >= max_sum {
            continue;
        }
        walker.current.clear();
        walker.push(first, max_sum);
        parts[first % partitions].append(&mut walker.out);
    }
    for p in &mut parts {
        p.sort();
    }
    parts
}

struct Walker<'a> {
    types: &'a [SingularityType],
    contributions: &'a [Rational],
    current: Vec<usize>,
    out: Vec<Basket>,
}

impl Walker<'_> {
    /// Appends type `idx` to the current non-decreasing index sequence, emits
    /// it and recurses on every extension by an index `>= idx`.
    fn push(&mut self, idx: usize, remaining: Rational) {
        let remaining = remaining - self.contributions[idx];
        self.current.push(idx);
        let basket = Basket {
            entries: group(self.current.iter().map(|&i| self.types[i])),
        };
        self.out.push(basket);
        for next in idx..self.types.len() {
            if self.contributions[next] < remaining {
                self.push(next, remaining);
            }
        }
        self.current.pop();
    }
}

/// Run-length groups an already sorted point sequence.
fn group(points: impl Iterator<Item = SingularityType>) -> Vec<(SingularityType, u32)> {
    let mut v: Vec<(SingularityType, u32)> = Vec::new();
    for t in points {
        match v.last_mut() {
            Some((u, m)) if *u == t => *m += 1,
            _ => v.push((t, 1)),
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(r: i64, b: i64) -> SingularityType {
        SingularityType::new(r, b).unwrap()
    }

    #[test]
    fn make_type_examples() {
        assert_eq!(t(3, 2), t(3, 1));
        assert_eq!((t(3, 2).r(), t(3, 2).b()), (3, 1));
        assert_eq!((t(5, 3).r(), t(5, 3).b()), (5, 2));
        assert!(matches!(
            SingularityType::new(4, 2),
            Err(Error::NotTerminal { .. })
        ));
    }

    #[test]
    fn range_errors_are_distinct_from_terminality() {
        for (r, b) in [(1, 1), (5, 0), (5, 5), (5, 7), (0, 0)] {
            assert!(matches!(
                SingularityType::new(r, b),
                Err(Error::WeightOutOfRange { .. })
            ));
        }
    }

    #[test]
    fn contributions() {
        assert_eq!(t(2, 1).contribution(), frac(3, 2));
        assert_eq!(t(3, 1).contribution(), frac(8, 3));
        assert_eq!(t(7, 2).contribution(), frac(48, 7));
    }

    #[test]
    fn weights_parse_to_same_germ() {
        assert_eq!("1/3(1,1,2)".parse::<SingularityType>().unwrap(), t(3, 1));
        assert_eq!("1/2(1,1,1)".parse::<SingularityType>().unwrap(), t(2, 1));
        // vertex of P(3,4,5,7) of index 7: weights 3,4,5
        assert_eq!("1/7(3,4,5)".parse::<SingularityType>().unwrap(), t(7, 2));
        assert!("1/7(1,2,3)".parse::<SingularityType>().is_err());
        assert!("1/4(1,2,2)".parse::<SingularityType>().is_err());
    }

    #[test]
    fn inverse_weight() {
        assert_eq!(t(7, 2).inverse_weight(), 3);
        assert_eq!(t(5, 2).inverse_weight(), 2);
        assert_eq!(t(3, 1).inverse_weight(), 1);
    }

    #[test]
    fn basket_text() {
        let b: Basket = "3,1,1".parse().unwrap();
        assert_eq!(b.to_string(), "1*1/3(1,2,1)");
        let b: Basket = "5,3,2;2,1".parse().unwrap();
        assert_eq!(b.to_string(), "1*1/2(1,1,1);2*1/5(1,3,2)");
        assert_eq!(b.to_string().parse::<Basket>().unwrap(), b);
        assert_eq!("".parse::<Basket>().unwrap(), Basket::empty());
        assert!("13,1,2".parse::<Basket>().is_err());
    }

    #[test]
    fn basket_invariants() {
        let b = Basket::new([t(5, 2), t(2, 1), t(4, 1), t(2, 1)]).unwrap();
        assert_eq!(b.entries()[0], (t(2, 1), 2));
        assert_eq!(b.gorenstein_index(), 20);
        assert_eq!(b.num_points(), 4);
        assert_eq!(Basket::empty().gorenstein_index(), 1);
    }

    #[test]
    fn enumeration_examples() {
        let small: Vec<Basket> = enumerate_baskets(int(2), None).collect();
        assert_eq!(
            small,
            vec![Basket::empty(), Basket::new([t(2, 1)]).unwrap()]
        );

        let three: Vec<Basket> = enumerate_baskets(int(3), None).collect();
        assert_eq!(
            three,
            vec![
                Basket::empty(),
                Basket::new([t(2, 1)]).unwrap(),
                Basket::new([t(3, 1)]).unwrap()
            ]
        );

        let odd: Vec<Basket> = enumerate_baskets(int(3), Some(2)).collect();
        assert_eq!(odd, vec![Basket::empty(), Basket::new([t(3, 1)]).unwrap()]);
    }

    #[test]
    fn partitions_merge_to_full_stream() {
        let full: Vec<Basket> = enumerate_baskets(int(12), Some(5)).collect();
        for k in [2, 3, 7] {
            let mut merged: Vec<Basket> = enumerate_partitioned(int(12), Some(5), k)
                .into_iter()
                .flatten()
                .collect();
            merged.sort();
            assert_eq!(merged, full);
        }
    }
}
