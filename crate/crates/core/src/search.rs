//! Numerical candidate search for ℚ-Fano threefolds of a fixed index.
//!
//! For `q ≥ 3` every basket with `Σ (r - 1/r) < 24` and indices coprime to
//! `q` determines `A³` through Riemann–Roch; the candidate survives when
//!
//! 1. `-K·c₂ > 0` (Kawamata),
//! 2. every `r_P` is coprime to `q`,
//! 3. `A³ > 0` and `r·A³ ∈ ℤ`,
//! 4. `(4q² - 3q)·A³ ≤ 4(-K·c₂)` (Bogomolov–Miyaoka),
//! 5. `χ(tA) = 0` for `-q < t < 0` (Kawamata–Viehweg),
//!
//! and `χ(tA)` is integral on a full period past the cubic part.
//!
//! For `q = 2` the `t = -1` condition no longer involves `A³`, so it filters
//! baskets alone and `A³` is scanned on the grid `k / r` up to the
//! Bogomolov–Miyaoka bound.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::orbifold_rr::{chi_with, kawamata_kc2, volume_grid_step, LocalCorrections};
use crate::rational::{self, as_integer, frac, int};
use crate::singularities::{enumerate_partitioned, KAWAMATA_BOUND};
use crate::{Basket, Error, NumericalFano, Rational, Result};

/// Indices a ℚ-Fano threefold can have.
pub const FANO_INDICES: [u32; 14] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 17, 19];

/// Number of numerical Hilbert series Brown and Suzuki report for `q = 2`.
pub const INDEX_TWO_REFERENCE_COUNT: usize = 1492;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub q: u32,
    /// The χ-integrality scan covers `-q < t ≤ q + max_terms · r`.
    pub max_terms: u32,
    /// Plurigenera are reported for `m = 0..=emit_series_to`.
    pub emit_series_to: usize,
    /// Keep only records with `genus ≥ genus_min`.
    pub genus_min: Option<i64>,
    /// Number of deterministic basket partitions searched in parallel.
    pub partitions: usize,
    /// Cap on worker threads; `None` uses the rayon default.
    pub threads: Option<usize>,
}

impl SearchConfig {
    pub fn new(q: u32) -> Self {
        Self {
            q,
            max_terms: 2,
            emit_series_to: 10,
            genus_min: None,
            partitions: 1,
            threads: None,
        }
    }
}

/// Filters a record passed, plus annotations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flag {
    /// `-K·c₂ > 0`.
    Kawamata,
    /// Every local index coprime to `q`.
    Coprime,
    /// `A³ > 0` and `r·A³ ∈ ℤ`.
    VolumeIntegral,
    BogomolovMiyaoka,
    /// `χ(tA) = 0` for `-q < t < 0`.
    Vanishing,
    /// `χ(tA) ∈ ℤ` on the scan range.
    ChiIntegral,
    /// Annotation: `χ(A) ≤ 0`, so `|A|` is empty.
    ChiANonpositive,
    /// Annotation: index 2, non-Gorenstein and `dim|A| ≥ 5`. Such numerical
    /// candidates are not excluded by the five steps; the bound `dim|A| ≤ 4`
    /// is a geometric statement.
    AboveDimensionBound,
}

/// One numerical candidate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "RecordWire", try_from = "RecordWire")]
pub struct CandidateRecord {
    pub q: u32,
    pub basket: Basket,
    pub a3: Rational,
    pub kc2: Rational,
    pub genus: i64,
    /// `h⁰(mA) = χ(mA)` for `m = 0..=N`.
    pub h0: Vec<i64>,
    pub flags: BTreeSet<Flag>,
}

#[derive(Serialize, Deserialize)]
struct RecordWire {
    q: u32,
    basket: Vec<[u32; 3]>,
    #[serde(rename = "A3", with = "rational::as_string")]
    a3: Rational,
    #[serde(rename = "KC2", with = "rational::as_string")]
    kc2: Rational,
    genus: i64,
    h0: Vec<String>,
    flags: BTreeSet<Flag>,
}

impl From<CandidateRecord> for RecordWire {
    fn from(r: CandidateRecord) -> Self {
        Self {
            q: r.q,
            basket: r.basket.to_triples(),
            a3: r.a3,
            kc2: r.kc2,
            genus: r.genus,
            h0: r.h0.iter().map(i64::to_string).collect(),
            flags: r.flags,
        }
    }
}

impl TryFrom<RecordWire> for CandidateRecord {
    type Error = Error;

    fn try_from(w: RecordWire) -> Result<Self> {
        let h0 =
            w.h0.iter()
                .map(|s| {
                    s.parse()
                        .map_err(|_| Error::Parse(format!("bad h0 entry {s:?}")))
                })
                .collect::<Result<_>>()?;
        Ok(Self {
            q: w.q,
            basket: Basket::from_triples(&w.basket)?,
            a3: w.a3,
            kc2: w.kc2,
            genus: w.genus,
            h0,
            flags: w.flags,
        })
    }
}

impl CandidateRecord {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    pub fn from_json_line(line: &str) -> Result<Self> {
        serde_json::from_str(line).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn numerical_fano(&self) -> Result<NumericalFano> {
        NumericalFano::new(self.q, self.a3, self.basket.clone())
    }

    /// `dim|A| = χ(A) - 1`, when the series reaches `m = 1`.
    pub fn dim_a(&self) -> Option<i64> {
        self.h0.get(1).map(|h| h - 1)
    }
}

/// `A³` from the index formula
/// `A³ = 12/((q-1)(q-2)) · (1 - A·c₂/12 + Σ_P c_P(-A))`, `A·c₂ = (-K·c₂)/q`.
pub fn suzuki_a3(q: u32, basket: &Basket) -> Result<Rational> {
    if q < 3 {
        return Err(Error::IndexTooSmall(q));
    }
    let local = LocalCorrections::new(q, basket)?;
    let qq = q as i128;
    let ac2 = kawamata_kc2(basket) / int(qq);
    Ok(frac(12, (qq - 1) * (qq - 2)) * (int(1) - ac2 / int(12) + local.at(-1)))
}

/// The unique `A³` making `χ(-A) = 0`, found by solving the affine equation
/// in `A³` that Riemann–Roch gives at `t = -1`.
pub fn a3_by_vanishing(q: u32, basket: &Basket) -> Result<Rational> {
    if q < 3 {
        return Err(Error::IndexTooSmall(q));
    }
    let local = LocalCorrections::new(q, basket)?;
    let kc2 = kawamata_kc2(basket);
    let at_zero = chi_with(q, int(0), kc2, &local, -1);
    let slope = chi_with(q, int(1), kc2, &local, -1) - at_zero;
    Ok(-at_zero / slope)
}

/// `(4q² - 3q)·A³ ≤ 4·(-K·c₂)`.
pub fn bm_check(q: u32, a3: Rational, kc2: Rational) -> bool {
    let q = q as i128;
    int(4 * q * q - 3 * q) * a3 <= int(4) * kc2
}

/// `r·A³ ∈ ℤ` and `χ(tA) ∈ ℤ` for every `t` in `range`.
pub fn integrality_check(nf: &NumericalFano, range: RangeInclusive<i64>) -> bool {
    let r = nf.basket().gorenstein_index() as i128;
    (nf.a3() * int(r)).is_integer() && range.into_iter().all(|t| nf.chi(t).is_integer())
}

/// `χ(tA) = 0` for `-q < t < 0`.
pub fn vanishing_check(nf: &NumericalFano) -> bool {
    (1 - nf.q() as i64..0).all(|t| nf.chi(t).is_zero())
}

/// `-q < t ≤ q + max_terms · r`: a full period of the corrections past the
/// cubic part, which certifies integrality for every `t`.
pub fn scan_range(q: u32, gorenstein_index: u64, max_terms: u32) -> RangeInclusive<i64> {
    let q = q as i64;
    (1 - q)..=(q + max_terms as i64 * gorenstein_index as i64)
}

/// Runs the search for `config.q`, dispatching to [`search_q`] or
/// [`search_q2`].
pub fn search(config: &SearchConfig) -> Result<Vec<CandidateRecord>> {
    match config.q {
        0 | 1 => Err(Error::IndexTooSmall(config.q)),
        2 => search_q2(config),
        _ => search_q(config),
    }
}

/// Five-step search for `q ≥ 3`. Fails only on an internal inconsistency
/// between the two `A³` formulas.
pub fn search_q(config: &SearchConfig) -> Result<Vec<CandidateRecord>> {
    if config.q < 3 {
        return Err(Error::IndexTooSmall(config.q));
    }
    run_partitioned(config, examine_basket)
}

/// Index-2 search: basket filter `χ(-A) = 0`, then the `A³` grid.
pub fn search_q2(config: &SearchConfig) -> Result<Vec<CandidateRecord>> {
    if config.q != 2 {
        return Err(Error::InvalidFormat(format!(
            "search_q2 called with q = {}",
            config.q
        )));
    }
    run_partitioned(config, examine_basket_q2)
}

fn run_partitioned(
    config: &SearchConfig,
    examine: fn(&SearchConfig, &Basket) -> Result<Vec<CandidateRecord>>,
) -> Result<Vec<CandidateRecord>> {
    let parts = enumerate_partitioned(int(KAWAMATA_BOUND), Some(config.q), config.partitions);
    let work = |part: &Vec<Basket>| -> Result<Vec<CandidateRecord>> {
        let mut out = Vec::new();
        for basket in part {
            out.extend(examine(config, basket)?);
        }
        Ok(out)
    };
    let results: Vec<Result<Vec<CandidateRecord>>> = if parts.len() == 1 {
        parts.iter().map(work).collect()
    } else {
        let threads = config.threads.unwrap_or(0).min(parts.len());
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool");
        pool.install(|| parts.par_iter().map(work).collect())
    };
    let mut records = Vec::new();
    for r in results {
        records.extend(r?);
    }
    records.sort_by(|x, y| (&x.basket, x.a3).cmp(&(&y.basket, y.a3)));
    Ok(records)
}

fn base_flags() -> BTreeSet<Flag> {
    [Flag::Kawamata, Flag::Coprime].into_iter().collect()
}

fn examine_basket(config: &SearchConfig, basket: &Basket) -> Result<Vec<CandidateRecord>> {
    let q = config.q;
    let a3 = suzuki_a3(q, basket)?;
    let check = a3_by_vanishing(q, basket)?;
    if a3 != check {
        return Err(Error::FormulaMismatch {
            suzuki: a3,
            vanishing: check,
        });
    }
    let mut flags = base_flags();
    let r = basket.gorenstein_index() as i128;
    if a3 <= int(0) || !(a3 * int(r)).is_integer() {
        return Ok(vec![]);
    }
    flags.insert(Flag::VolumeIntegral);
    let kc2 = kawamata_kc2(basket);
    if !bm_check(q, a3, kc2) {
        return Ok(vec![]);
    }
    flags.insert(Flag::BogomolovMiyaoka);
    let nf = NumericalFano::new(q, a3, basket.clone())?;
    if !vanishing_check(&nf) {
        return Ok(vec![]);
    }
    flags.insert(Flag::Vanishing);
    Ok(finish(config, nf, flags).into_iter().collect())
}

fn examine_basket_q2(config: &SearchConfig, basket: &Basket) -> Result<Vec<CandidateRecord>> {
    let q = config.q;
    let local = LocalCorrections::new(q, basket)?;
    let kc2 = kawamata_kc2(basket);
    // the cubic term t(t+2)(2t+2) vanishes at t = -1
    if !chi_with(q, int(0), kc2, &local, -1).is_zero() {
        return Ok(vec![]);
    }
    let step = volume_grid_step(basket);
    let mut out = Vec::new();
    let mut k = 1;
    loop {
        let a3 = step * int(k);
        if !bm_check(q, a3, kc2) {
            break;
        }
        let mut flags = base_flags();
        flags.extend([
            Flag::VolumeIntegral,
            Flag::BogomolovMiyaoka,
            Flag::Vanishing,
        ]);
        let nf = NumericalFano::new(q, a3, basket.clone())?;
        out.extend(finish(config, nf, flags));
        k += 1;
    }
    Ok(out)
}

/// χ-integrality scan, genus filter, plurigenera and annotations.
fn finish(
    config: &SearchConfig,
    nf: NumericalFano,
    mut flags: BTreeSet<Flag>,
) -> Option<CandidateRecord> {
    let range = scan_range(nf.q(), nf.basket().gorenstein_index(), config.max_terms);
    if !range.into_iter().all(|t| nf.chi(t).is_integer()) {
        return None;
    }
    flags.insert(Flag::ChiIntegral);

    let chi = |t: i64| as_integer(&nf.chi(t)).expect("integral after scan") as i64;
    let genus = chi(nf.q() as i64) - 2;
    if config.genus_min.is_some_and(|g| genus < g) {
        return None;
    }
    let h0: Vec<i64> = (0..=config.emit_series_to as i64).map(chi).collect();
    let chi_a = chi(1);
    if chi_a <= 0 {
        flags.insert(Flag::ChiANonpositive);
    }
    // dim|A| = χ(A) - 1 ≤ 4 is known for non-Gorenstein index-2 threefolds
    let dim_a = chi_a - 1;
    if nf.q() == 2 && !nf.basket().is_empty() && dim_a >= 5 {
        flags.insert(Flag::AboveDimensionBound);
    }
    Some(CandidateRecord {
        q: nf.q(),
        basket: nf.basket().clone(),
        a3: nf.a3(),
        kc2: nf.kc2(),
        genus,
        h0,
        flags,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basket(s: &str) -> Basket {
        s.parse().unwrap()
    }

    #[test]
    fn suzuki_examples() {
        assert_eq!(suzuki_a3(4, &Basket::empty()).unwrap(), int(1));
        assert_eq!(
            suzuki_a3(19, &basket("3,1;4,1;5,2;7,2")).unwrap(),
            frac(1, 420)
        );
        assert_eq!(suzuki_a3(9, &basket("2,1;4,1;5,2")).unwrap(), frac(1, 20));
        assert_eq!(suzuki_a3(2, &Basket::empty()), Err(Error::IndexTooSmall(2)));
    }

    #[test]
    fn vanishing_examples() {
        assert_eq!(a3_by_vanishing(4, &Basket::empty()).unwrap(), int(1));
        assert_eq!(
            a3_by_vanishing(19, &basket("3,1;4,1;5,2;7,2")).unwrap(),
            frac(1, 420)
        );
        assert_eq!(a3_by_vanishing(3, &Basket::empty()).unwrap(), int(2));
    }

    #[test]
    fn bm_examples() {
        assert!(bm_check(2, frac(10, 3), frac(64, 3)));
        assert!(bm_check(19, frac(1, 420), frac(2489, 420)));
        assert!(!bm_check(19, int(1), frac(2489, 420)));
    }

    #[test]
    fn integrality_examples() {
        let x = NumericalFano::new(2, frac(10, 3), basket("3,1")).unwrap();
        assert!(integrality_check(&x, scan_range(2, 3, 2)));

        let small = NumericalFano::new(2, frac(1, 3), basket("3,1")).unwrap();
        assert_eq!(small.chi(1), int(2));
        // χ(2A) = 1 + 4/3·1/3·... evaluated directly
        let direct = (-1..=8).all(|t| small.chi(t).is_integer());
        assert_eq!(integrality_check(&small, scan_range(2, 3, 2)), direct);

        let gorenstein = NumericalFano::new(2, frac(10, 3), Basket::empty()).unwrap();
        assert!(!integrality_check(&gorenstein, scan_range(2, 1, 2)));
    }

    #[test]
    fn index_19_is_p3457() {
        let records = search(&SearchConfig::new(19)).unwrap();
        assert_eq!(records.len(), 1);
        assert_eq!(records[0].basket, basket("3,1;4,1;5,2;7,2"));
        assert_eq!(records[0].a3, frac(1, 420));
        assert_eq!(records[0].kc2, frac(2489, 420));
    }

    #[test]
    fn index_14_is_empty() {
        assert!(search(&SearchConfig::new(14)).unwrap().is_empty());
    }

    #[test]
    fn genus_min_filters() {
        let mut cfg = SearchConfig::new(13);
        let all = search(&cfg).unwrap();
        cfg.genus_min = Some(5);
        let high = search(&cfg).unwrap();
        assert!(high.len() < all.len());
        assert!(high.iter().all(|r| r.genus >= 5));
        // P(1,3,4,5) has genus 18
        assert!(high.iter().any(|r| r.a3 == frac(1, 60)));
    }

    #[test]
    fn small_index_rejected() {
        assert!(search(&SearchConfig::new(1)).is_err());
        assert!(search_q(&SearchConfig::new(2)).is_err());
        assert!(search_q2(&SearchConfig::new(3)).is_err());
    }

    #[test]
    fn record_json_round_trip() {
        let rec = search(&SearchConfig::new(19)).unwrap().remove(0);
        let line = rec.to_json_line();
        assert!(line.contains("\"A3\":\"1/420\""));
        assert!(line.contains("\"basket\":[[3,1,1],[4,1,1],[5,2,1],[7,2,1]]"));
        assert_eq!(CandidateRecord::from_json_line(&line).unwrap(), rec);
    }
}
