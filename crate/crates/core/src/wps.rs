//! Weight systems, graded formats and their Hilbert series.
//!
//! [`monomial_count`] is the ground truth: the number of monomials of weighted
//! degree `m` in variables of the given weights, i.e. `h⁰(P, O(m))`. Every
//! Riemann–Roch convention in the crate is checked against it.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::orbifold_rr::HilbertCoefficients;
use crate::rational::{frac, int};
use crate::{Basket, Error, Rational, Result, SingularityType};

/// Weights `a₁, …, a_n` of a weighted projective space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightSystem {
    weights: Vec<u32>,
}

impl WeightSystem {
    /// Requires positive weights, well formed: any `n - 1` of them coprime.
    pub fn new(weights: Vec<u32>) -> Result<Self> {
        if weights.is_empty() || weights.contains(&0) {
            return Err(Error::NotWellFormed(weights));
        }
        if weights.len() > 1 {
            for skip in 0..weights.len() {
                let g = weights
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != skip)
                    .fold(0u32, |g, (_, &w)| g.gcd(&w));
                if g != 1 {
                    return Err(Error::NotWellFormed(weights));
                }
            }
        }
        Ok(Self { weights })
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.weights.iter().map(|&w| w as i64).sum()
    }

    pub fn product(&self) -> i128 {
        self.weights.iter().map(|&w| w as i128).product()
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.weights)
    }
}

impl FromStr for WeightSystem {
    type Err = Error;

    /// Comma separated weights, e.g. `1,2,3,5`.
    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_list(s)?)
    }
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

fn parse_list(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad weight {x:?} in {s:?}")))
        })
        .collect()
}

/// Number of monomials of weighted degree `m`, by the coin-change recurrence.
pub fn monomial_count(w: &WeightSystem, m: i64) -> i64 {
    if m < 0 {
        return 0;
    }
    *monomial_counts(w, m as usize).last().expect("nonempty")
}

/// `monomial_count(w, m)` for `m = 0..=n`.
pub fn monomial_counts(w: &WeightSystem, n: usize) -> Vec<i64> {
    let mut ways = vec![0i64; n + 1];
    ways[0] = 1;
    for &a in w.weights() {
        let a = a as usize;
        for m in a..=n {
            ways[m] += ways[m - a];
        }
    }
    ways
}

/// `(q, A³, basket)` of a weighted projective 3-space with isolated
/// singularities: `q = Σ aᵢ`, `A³ = 1/∏ aᵢ`, one point per weight `aᵢ ≥ 2`
/// whose type is read from the other three weights.
pub fn wps_invariants(w: &WeightSystem) -> Result<(u32, Rational, Basket)> {
    let a = w.weights();
    if a.len() != 4 {
        return Err(Error::NonIsolated(a.to_vec()));
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if a[i].gcd(&a[j]) != 1 {
                return Err(Error::NonIsolated(a.to_vec()));
            }
        }
    }
    let mut points = Vec::new();
    for (i, &r) in a.iter().enumerate() {
        if r < 2 {
            continue;
        }
        let others: Vec<i64> = (0..4).filter(|&j| j != i).map(|j| a[j] as i64).collect();
        points.push(SingularityType::from_weights(
            r as i64,
            [others[0], others[1], others[2]],
        )?);
    }
    Ok((w.sum() as u32, frac(1, w.product()), Basket::new(points)?))
}

/// How the equations of a graded ring sit in its ambient weighted space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FormatKind {
    /// The weighted projective space itself.
    Wps,
    Hypersurface(u32),
    CompleteIntersection(Vec<u32>),
    /// Maximal Pfaffians of a 5×5 skew matrix with entry `(i, j)` of degree
    /// `bᵢ + bⱼ`; the weights are stored doubled, `2bᵢ`, since half-integers
    /// occur.
    Pfaffian {
        doubled: [i64; 5],
    },
}

/// A weight system together with a format of equations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedFormat {
    ambient: WeightSystem,
    kind: FormatKind,
}

impl GradedFormat {
    pub fn new(ambient: WeightSystem, kind: FormatKind) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidFormat(msg));
        match &kind {
            FormatKind::Wps => {}
            FormatKind::Hypersurface(d) if *d < 2 => {
                return invalid(format!("hypersurface degree {d} < 2"));
            }
            FormatKind::Hypersurface(_) => {}
            FormatKind::CompleteIntersection(ds) => {
                if ds.is_empty() || ds.iter().any(|&d| d < 2) {
                    return invalid(format!("complete intersection degrees {ds:?}"));
                }
            }
            FormatKind::Pfaffian { doubled } => {
                for i in 0..5 {
                    for j in i + 1..5 {
                        let e = doubled[i] + doubled[j];
                        if e <= 0 || e % 2 != 0 {
                            return invalid(format!(
                                "entry ({},{}) has degree {}/2",
                                i + 1,
                                j + 1,
                                e
                            ));
                        }
                    }
                }
                let sigma: i64 = doubled.iter().sum();
                for (i, b) in doubled.iter().enumerate() {
                    let d = sigma - b;
                    if d <= 0 || d % 2 != 0 {
                        return invalid(format!("Pfaffian {} has degree {}/2", i + 1, d));
                    }
                }
            }
        }
        let f = Self { ambient, kind };
        if f.codimension() >= f.ambient.len() {
            return invalid(format!("codimension {} too large", f.codimension()));
        }
        Ok(f)
    }

    pub fn wps(ambient: WeightSystem) -> Self {
        Self {
            ambient,
            kind: FormatKind::Wps,
        }
    }

    /// Pfaffian format read off a 5×5 skew matrix of entry degrees, given as
    /// the upper triangle row by row: `m12 m13 m14 m15 / m23 m24 m25 / m34 m35 / m45`.
    pub fn pfaffian_from_entry_degrees(ambient: WeightSystem, rows: [&[i64]; 4]) -> Result<Self> {
        let mut m = [[0i64; 5]; 5];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != 4 - i {
                return Err(Error::InvalidFormat(format!(
                    "row {} of the degree matrix has {} entries",
                    i + 1,
                    row.len()
                )));
            }
            for (k, &d) in row.iter().enumerate() {
                let j = i + 1 + k;
                m[i][j] = d;
                m[j][i] = d;
            }
        }
        // 2bᵢ = m_ij + m_ik - m_jk for any distinct j, k ≠ i
        let mut doubled = [0i64; 5];
        for (i, b) in doubled.iter_mut().enumerate() {
            let others: Vec<usize> = (0..5).filter(|&j| j != i).collect();
            *b = m[i][others[0]] + m[i][others[1]] - m[others[0]][others[1]];
        }
        for i in 0..5 {
            for j in i + 1..5 {
                if doubled[i] + doubled[j] != 2 * m[i][j] {
                    return Err(Error::InvalidFormat(format!(
                        "entry ({},{}) of degree {} is not of the form bᵢ + bⱼ",
                        i + 1,
                        j + 1,
                        m[i][j]
                    )));
                }
            }
        }
        Self::new(ambient, FormatKind::Pfaffian { doubled })
    }

    pub fn ambient(&self) -> &WeightSystem {
        &self.ambient
    }

    pub fn kind(&self) -> &FormatKind {
        &self.kind
    }

    pub fn codimension(&self) -> usize {
        match &self.kind {
            FormatKind::Wps => 0,
            FormatKind::Hypersurface(_) => 1,
            FormatKind::CompleteIntersection(ds) => ds.len(),
            FormatKind::Pfaffian { .. } => 3,
        }
    }

    /// Degrees of the defining equations.
    pub fn equation_degrees(&self) -> Vec<i64> {
        match &self.kind {
            FormatKind::Wps => vec![],
            FormatKind::Hypersurface(d) => vec![*d as i64],
            FormatKind::CompleteIntersection(ds) => ds.iter().map(|&d| d as i64).collect(),
            FormatKind::Pfaffian { doubled } => {
                let sigma: i64 = doubled.iter().sum();
                doubled.iter().map(|b| (sigma - b) / 2).collect()
            }
        }
    }

    /// Adjunction number `k`: `ω = O(k - Σ aⱼ)`.
    pub fn adjunction_number(&self) -> i64 {
        match &self.kind {
            FormatKind::Pfaffian { doubled } => doubled.iter().sum(),
            _ => self.equation_degrees().iter().sum(),
        }
    }

    /// `q = Σ aⱼ - k`.
    pub fn fano_index(&self) -> i64 {
        self.ambient.sum() - self.adjunction_number()
    }

    /// Dimension of the projective variety cut out.
    pub fn dimension(&self) -> i64 {
        self.ambient.len() as i64 - self.codimension() as i64 - 1
    }
}

impl fmt::Display for GradedFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            FormatKind::Wps => write!(f, "wps:{}", self.ambient),
            FormatKind::Hypersurface(d) => write!(f, "hyp:{d}@{}", self.ambient),
            FormatKind::CompleteIntersection(ds) => {
                f.write_str("ci:")?;
                write_list(f, ds)?;
                write!(f, "@{}", self.ambient)
            }
            FormatKind::Pfaffian { doubled } => {
                let halves: Vec<Rational> = doubled.iter().map(|&b| frac(b as i128, 2)).collect();
                f.write_str("pf:")?;
                write_list(f, &halves)?;
                write!(f, "@{}", self.ambient)
            }
        }
    }
}

impl FromStr for GradedFormat {
    type Err = Error;

    /// `wps:1,2,3,5`, `hyp:6@1,2,3,4,5`, `ci:2,2@1,1,1,1,1,1`,
    /// `pf:1/2,1/2,1/2,3/2,3/2@1,1,1,1,2,2,3`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a graded format: {s:?}"));
        let (tag, body) = s.trim().split_once(':').ok_or_else(bad)?;
        if tag == "wps" {
            return Ok(Self::wps(body.parse()?));
        }
        let (params, weights) = body.split_once('@').ok_or_else(bad)?;
        let ambient: WeightSystem = weights.parse()?;
        let kind = match tag {
            "hyp" => FormatKind::Hypersurface(params.trim().parse().map_err(|_| bad())?),
            "ci" => FormatKind::CompleteIntersection(parse_list(params)?),
            "pf" => {
                let doubled: Vec<i64> = params
                    .split(',')
                    .map(|x| {
                        let b = crate::rational::parse(x)?;
                        let twice = b * int(2);
                        if !twice.is_integer() {
                            return Err(Error::InvalidFormat(format!("{b} is not a half-integer")));
                        }
                        Ok(twice.to_integer() as i64)
                    })
                    .collect::<Result<_>>()?;
                FormatKind::Pfaffian {
                    doubled: doubled.try_into().map_err(|_| bad())?,
                }
            }
            _ => return Err(bad()),
        };
        Self::new(ambient, kind)
    }
}

/// `numerator(t) / ∏ (1 - t^{aⱼ})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertSeries {
    numerator: Vec<i64>,
    weights: Vec<u32>,
}

impl HilbertSeries {
    /// Dense numerator coefficients (index = power of `t`), trailing zeros
    /// trimmed.
    pub fn new(mut numerator: Vec<i64>, weights: Vec<u32>) -> Self {
        while numerator.len() > 1 && numerator.last() == Some(&0) {
            numerator.pop();
        }
        Self { numerator, weights }
    }

    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / [", format_polynomial(&self.numerator))?;
        write_list(f, &self.weights)?;
        f.write_str("]")
    }
}

/// Writes `1 - 2t^3 + t^9` style text.
pub fn format_polynomial(coeffs: &[i64]) -> String {
    let mut s = String::new();
    for (e, &c) in coeffs.iter().enumerate().filter(|(_, c)| **c != 0) {
        let mag = c.unsigned_abs();
        if s.is_empty() {
            if c < 0 {
                s.push('-');
            }
        } else {
            s.push_str(if c < 0 { " - " } else { " + " });
        }
        let mono = match e {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{e}"),
        };
        if mag != 1 || e == 0 {
            s.push_str(&mag.to_string());
        }
        s.push_str(&mono);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn add_term(poly: &mut Vec<i64>, exp: i64, coeff: i64) {
    let e = usize::try_from(exp).expect("nonnegative exponent");
    if poly.len() <= e {
        poly.resize(e + 1, 0);
    }
    poly[e] += coeff;
}

/// Hilbert series of a format, derived from its degree data.
pub fn format_series(f: &GradedFormat) -> HilbertSeries {
    let mut num = vec![1i64];
    match f.kind() {
        FormatKind::Wps => {}
        FormatKind::Hypersurface(_) | FormatKind::CompleteIntersection(_) => {
            for d in f.equation_degrees() {
                let mut next = vec![0i64; num.len() + d as usize];
                for (e, &c) in num.iter().enumerate() {
                    next[e] += c;
                    next[e + d as usize] -= c;
                }
                num = next;
            }
        }
        FormatKind::Pfaffian { .. } => {
            let k = f.adjunction_number();
            for d in f.equation_degrees() {
                add_term(&mut num, d, -1);
                add_term(&mut num, k - d, 1);
            }
            add_term(&mut num, k, -1);
        }
    }
    HilbertSeries::new(num, f.ambient().weights().to_vec())
}

/// Power series coefficients up to `t^n`, by long division of the numerator
/// by the expanded denominator `∏ (1 - t^{aⱼ})`.
pub fn series_coeffs(s: &HilbertSeries, n: usize) -> Result<HilbertCoefficients> {
    let mut den = vec![1i64];
    for &a in s.weights() {
        let a = a as usize;
        let mut next = vec![0i64; den.len() + a];
        for (e, &c) in den.iter().enumerate() {
            next[e] += c;
            next[e + a] -= c;
        }
        den = next;
    }
    let mut out = vec![0i64; n + 1];
    for m in 0..=n {
        let mut c = s.numerator().get(m).copied().unwrap_or(0);
        for k in 1..=m.min(den.len() - 1) {
            c -= den[k] * out[m - k];
        }
        out[m] = c;
    }
    HilbertCoefficients::new(out)
}

/// `(q, A³)` of a format defining a threefold: `q = Σ aⱼ - k` and
/// `A³ = [n(t)/(1-t)^c]_{t=1} / ∏ aⱼ`, the `(1-t)` factors being divided out
/// exactly.
pub fn format_fano_invariants(f: &GradedFormat) -> Result<(i64, Rational)> {
    if f.dimension() != 3 {
        return Err(Error::InvalidFormat(format!(
            "{f} defines a variety of dimension {}, not 3",
            f.dimension()
        )));
    }
    let series = format_series(f);
    let c = f.codimension();
    let mut poly = series.numerator().to_vec();
    for _ in 0..c {
        poly = divide_by_one_minus_t(&poly).ok_or(Error::DimensionMismatch { expected: c })?;
    }
    let value: i64 = poly.iter().sum();
    Ok((f.fano_index(), frac(value as i128, f.ambient().product())))
}

/// Exact quotient `p(t) / (1 - t)` if `p(1) = 0`.
fn divide_by_one_minus_t(p: &[i64]) -> Option<Vec<i64>> {
    if p.iter().sum::<i64>() != 0 {
        return None;
    }
    // p = (1 - t) s  ⇒  s_k = Σ_{j ≤ k} p_j
    let mut s = Vec::with_capacity(p.len().saturating_sub(1));
    let mut acc = 0;
    for &c in &p[..p.len() - 1] {
        acc += c;
        s.push(acc);
    }
    Some(s)
}

/// Gorenstein symmetry `n(t) = (-1)^c · t^k · n(1/t)`.
pub fn gorenstein_symmetry_check(s: &HilbertSeries, k_adj: i64, codim: usize) -> bool {
    let n = s.numerator();
    if k_adj < 0 || n.len() as i64 > k_adj + 1 {
        return false;
    }
    let sign = if codim.is_multiple_of(2) { 1 } else { -1 };
    let coeff = |e: i64| n.get(e as usize).copied().unwrap_or(0);
    (0..=k_adj).all(|e| coeff(e) == sign * coeff(k_adj - e))
}

/// A format with a known basket, used for cross-checks.
#[derive(Clone, Debug)]
pub struct NamedFormat {
    pub name: &'static str,
    pub format: GradedFormat,
    pub basket: Basket,
}

/// Weighted projective spaces appearing in the high-index classification.
pub const CLASSIFIED_WPS: [[u32; 4]; 7] = [
    [1, 1, 1, 1],
    [1, 1, 1, 2],
    [1, 1, 2, 3],
    [1, 2, 3, 5],
    [1, 3, 4, 5],
    [2, 3, 5, 7],
    [3, 4, 5, 7],
];

/// The codimension-3 Pfaffian in `P(1⁴,2²,3)` with entry degrees
/// `1 1 2 2 / 1 2 2 / 2 2 / 3`.
pub fn index_two_pfaffian() -> GradedFormat {
    let ambient = WeightSystem::new(vec![1, 1, 1, 1, 2, 2, 3]).expect("well formed");
    GradedFormat::pfaffian_from_entry_degrees(ambient, [&[1, 1, 2, 2], &[1, 2, 2], &[2, 2], &[3]])
        .expect("valid degree matrix")
}

/// Formats with their baskets. Baskets of weighted projective spaces come
/// from [`wps_invariants`]; those of the hypersurfaces and the Pfaffian are
/// fixtures certified by agreement of the Riemann–Roch and format series.
pub fn named_formats() -> Vec<NamedFormat> {
    let mut out: Vec<NamedFormat> = CLASSIFIED_WPS
        .iter()
        .map(|w| {
            let ws = WeightSystem::new(w.to_vec()).expect("well formed");
            let (_, _, basket) = wps_invariants(&ws).expect("isolated");
            NamedFormat {
                name: "wps",
                format: GradedFormat::wps(ws),
                basket,
            }
        })
        .collect();
    let fixtures: [(&str, &str, &str); 5] = [
        ("X6 in P(1,2,3,4,5)", "hyp:6@1,2,3,4,5", "2,1;4,1;5,2"),
        ("X6 in P(1,1,2,3,5)", "hyp:6@1,1,2,3,5", "5,2"),
        ("X10 in P(1,2,3,5,7)", "hyp:10@1,2,3,5,7", "3,1;7,2"),
        ("X4 in P(1,1,2,2,3)", "hyp:4@1,1,2,2,3", "2,1,2;3,1"),
        ("X2 in P4", "hyp:2@1,1,1,1,1", ""),
    ];
    for (name, format, basket) in fixtures {
        out.push(NamedFormat {
            name,
            format: format.parse().expect("fixture format"),
            basket: basket.parse().expect("fixture basket"),
        });
    }
    out.push(NamedFormat {
        name: "Pfaffian in P(1,1,1,1,2,2,3)",
        format: index_two_pfaffian(),
        basket: "3,1".parse().expect("fixture basket"),
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ws(w: &[u32]) -> WeightSystem {
        WeightSystem::new(w.to_vec()).unwrap()
    }

    #[test]
    fn monomial_count_examples() {
        assert_eq!(monomial_count(&ws(&[1, 1, 1, 1]), 1), 4);
        assert_eq!(monomial_count(&ws(&[1, 2, 3, 5]), 5), 6);
        assert_eq!(monomial_count(&ws(&[3, 4, 5, 7]), 0), 1);
        assert_eq!(monomial_count(&ws(&[3, 4, 5, 7]), -2), 0);
    }

    #[test]
    fn well_formedness() {
        assert!(WeightSystem::new(vec![1, 2, 2, 2]).is_err());
        assert!(WeightSystem::new(vec![2, 4, 1]).is_err());
        assert!(WeightSystem::new(vec![1, 2, 2, 3]).is_ok());
        assert!(WeightSystem::new(vec![]).is_err());
    }

    #[test]
    fn wps_invariant_examples() {
        let (q, a3, basket) = wps_invariants(&ws(&[3, 4, 5, 7])).unwrap();
        assert_eq!((q, a3), (19, frac(1, 420)));
        assert_eq!(basket, "3,1;4,1;5,2;7,2".parse().unwrap());
        assert_eq!(basket.contribution_sum(), frac(7591, 420));

        let (q, a3, basket) = wps_invariants(&ws(&[1, 1, 1, 2])).unwrap();
        assert_eq!((q, a3), (5, frac(1, 2)));
        assert_eq!(basket, "2,1".parse().unwrap());

        assert!(matches!(
            wps_invariants(&ws(&[1, 2, 2, 3])),
            Err(Error::NonIsolated(_))
        ));
        // 1/3(1,1,1) is not terminal
        assert!(wps_invariants(&ws(&[1, 1, 1, 3])).is_err());
    }

    #[test]
    fn pfaffian_degrees() {
        let pf = index_two_pfaffian();
        assert_eq!(
            pf.kind(),
            &FormatKind::Pfaffian {
                doubled: [1, 1, 1, 3, 3]
            }
        );
        let mut d = pf.equation_degrees();
        d.sort();
        assert_eq!(d, vec![3, 3, 4, 4, 4]);
        assert_eq!(pf.adjunction_number(), 9);
        assert_eq!(pf.fano_index(), 2);
        assert_eq!(pf.to_string(), "pf:1/2,1/2,1/2,3/2,3/2@1,1,1,1,2,2,3");
        assert_eq!(pf.to_string().parse::<GradedFormat>().unwrap(), pf);
    }

    #[test]
    fn inconsistent_degree_matrix_rejected() {
        let ambient = ws(&[1, 1, 1, 1, 2, 2, 3]);
        assert!(GradedFormat::pfaffian_from_entry_degrees(
            ambient,
            [&[1, 1, 2, 2], &[1, 2, 2], &[2, 2], &[4]]
        )
        .is_err());
    }

    #[test]
    fn format_series_examples() {
        let pf = format_series(&index_two_pfaffian());
        assert_eq!(pf.numerator(), &[1, 0, 0, -2, -3, 3, 2, 0, 0, -1]);
        assert_eq!(
            format_polynomial(pf.numerator()),
            "1 - 2t^3 - 3t^4 + 3t^5 + 2t^6 - t^9"
        );
        let x6 = format_series(&"hyp:6@1,2,3,4,5".parse().unwrap());
        assert_eq!(x6.numerator(), &[1, 0, 0, 0, 0, 0, -1]);
        let p = format_series(&"wps:1,2,3,5".parse().unwrap());
        assert_eq!(p.numerator(), &[1]);
    }

    #[test]
    fn series_coeff_examples() {
        let pf = format_series(&index_two_pfaffian());
        assert_eq!(series_coeffs(&pf, 3).unwrap().values(), &[1, 4, 12, 27]);
        let x6 = format_series(&"hyp:6@1,2,3,4,5".parse().unwrap());
        assert_eq!(series_coeffs(&x6, 1).unwrap().values(), &[1, 1]);
        let p3 = format_series(&"wps:1,1,1,1".parse().unwrap());
        assert_eq!(series_coeffs(&p3, 2).unwrap().values(), &[1, 4, 10]);
    }

    #[test]
    fn fano_invariant_examples() {
        assert_eq!(
            format_fano_invariants(&index_two_pfaffian()).unwrap(),
            (2, frac(7, 3))
        );
        assert_eq!(
            format_fano_invariants(&"hyp:6@1,2,3,4,5".parse().unwrap()).unwrap(),
            (9, frac(1, 20))
        );
        assert_eq!(
            format_fano_invariants(&"hyp:2@1,1,1,1,1".parse().unwrap()).unwrap(),
            (3, int(2))
        );
        assert!(format_fano_invariants(&"wps:1,1,1".parse().unwrap()).is_err());
    }

    #[test]
    fn symmetry_examples() {
        let pf = format_series(&index_two_pfaffian());
        assert!(gorenstein_symmetry_check(&pf, 9, 3));
        let printed = HilbertSeries::new(vec![1, 0, 0, -2, -3, 3, 2, 0, -1], pf.weights().to_vec());
        assert!(!gorenstein_symmetry_check(&printed, 9, 3));
        assert!(!gorenstein_symmetry_check(&printed, 8, 3));
        let x6 = HilbertSeries::new(vec![1, 0, 0, 0, 0, 0, -1], vec![1, 2, 3, 4, 5]);
        assert!(gorenstein_symmetry_check(&x6, 6, 1));
        let ci = format_series(&"ci:2,2@1,1,1,1,1,1".parse().unwrap());
        assert!(gorenstein_symmetry_check(&ci, 4, 2));
    }

    #[test]
    fn format_text_round_trip() {
        for s in ["wps:1,2,3,5", "hyp:6@1,2,3,4,5", "ci:2,2@1,1,1,1,1,1"] {
            assert_eq!(s.parse::<GradedFormat>().unwrap().to_string(), s);
        }
        assert!("pf:1/3,1/2,1/2,3/2,3/2@1,1,1,1,2,2,3"
            .parse::<GradedFormat>()
            .is_err());
        assert!("hyp:1@1,1,1,1,1".parse::<GradedFormat>().is_err());
        assert!("foo:1".parse::<GradedFormat>().is_err());
    }
}
