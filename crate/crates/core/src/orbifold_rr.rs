//! Orbifold Riemann–Roch for a Weil divisor `A` with `-K = qA`.
//!
//! For `t ∈ ℤ`,
//!
//! ```text
//! χ(tA) = 1 + t(t+q)(2t+q)/12 · A³ + t/(12q) · (-K·c₂) + Σ_P c_P(t·i_P)
//! ```
//!
//! where `i_P` is the local class of `A` at `P` (`q·i_P ≡ -1 mod r_P`, the
//! local class group being generated by `K`) and `c_P` is the periodic
//! correction of the point.

use std::fmt;

use crate::rational::{as_integer, frac, int};
use crate::singularities::{mod_inverse, KAWAMATA_BOUND};
use crate::{Basket, Error, Rational, Result, SingularityType};

/// Local correction `c_P(iK)` of a point of type `t`.
///
/// With `ī = i mod r` and `β = b⁻¹ mod r`,
/// `c = -ī(r²-1)/(12r) + Σ_{j=1}^{ī-1} x_j(r-x_j)/(2r)`, `x_j = jβ mod r`.
pub fn correction(t: SingularityType, i: i64) -> Rational {
    let r = t.r() as i64;
    let step = t.inverse_weight() as i64;
    let i = i.rem_euclid(r);
    let mut c = frac(-(i as i128) * (r * r - 1) as i128, 12 * r as i128);
    for j in 1..i {
        let x = (j * step) % r;
        c += frac((x * (r - x)) as i128, 2 * r as i128);
    }
    c
}

/// The local class `i ∈ [0, r)` of `A` at a point of type `t`, solving
/// `q·i ≡ -1 (mod r)`.
pub fn local_class_of_a(q: u32, t: SingularityType) -> Result<u32> {
    let r = t.r() as i64;
    let inv = mod_inverse(q as i64, r).ok_or(Error::NotCoprime { q, r: t.r() })?;
    Ok((-inv).rem_euclid(r) as u32)
}

/// `-K·c₂ = 24 - Σ m_P (r_P - 1/r_P)`.
pub fn kawamata_kc2(basket: &Basket) -> Rational {
    int(KAWAMATA_BOUND) - basket.contribution_sum()
}

#[derive(Clone, Debug)]
struct LocalTerm {
    multiplicity: i128,
    r: i64,
    class: i64,
    // c_P(j·K) for j in 0..r
    table: Vec<Rational>,
}

/// Sum of the local corrections `Σ_P m_P c_P(t·i_P)` for fixed index and
/// basket, with each point's period tabulated once.
#[derive(Clone, Debug)]
pub struct LocalCorrections {
    terms: Vec<LocalTerm>,
}

impl LocalCorrections {
    pub fn new(q: u32, basket: &Basket) -> Result<Self> {
        let terms = basket
            .entries()
            .iter()
            .map(|&(t, m)| {
                let class = local_class_of_a(q, t)? as i64;
                let r = t.r() as i64;
                Ok(LocalTerm {
                    multiplicity: m as i128,
                    r,
                    class,
                    table: (0..r).map(|j| correction(t, j)).collect(),
                })
            })
            .collect::<Result<_>>()?;
        Ok(Self { terms })
    }

    /// `Σ_P m_P c_P(t·i_P)`.
    pub fn at(&self, t: i64) -> Rational {
        self.terms
            .iter()
            .map(|p| {
                let j = (t.rem_euclid(p.r) * p.class) % p.r;
                p.table[j as usize] * int(p.multiplicity)
            })
            .sum()
    }
}

/// Numerical data of a candidate ℚ-Fano threefold: index, `A³` and basket.
#[derive(Clone, Debug)]
pub struct NumericalFano {
    q: u32,
    a3: Rational,
    basket: Basket,
    kc2: Rational,
    local: LocalCorrections,
}

impl NumericalFano {
    /// Requires `q ≥ 1`, `A³ > 0` and every local index coprime to `q`.
    /// Integrality of `r·A³` is not enforced here; see
    /// [`crate::search::integrality_check`].
    pub fn new(q: u32, a3: Rational, basket: Basket) -> Result<Self> {
        if q == 0 {
            return Err(Error::IndexTooSmall(q));
        }
        if a3 <= int(0) {
            return Err(Error::NonPositiveVolume(a3));
        }
        let kc2 = kawamata_kc2(&basket);
        if kc2 <= int(0) {
            return Err(Error::NonPositiveKc2(kc2));
        }
        let local = LocalCorrections::new(q, &basket)?;
        Ok(Self {
            q,
            a3,
            basket,
            kc2,
            local,
        })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn a3(&self) -> Rational {
        self.a3
    }

    pub fn basket(&self) -> &Basket {
        &self.basket
    }

    /// `-K·c₂`.
    pub fn kc2(&self) -> Rational {
        self.kc2
    }

    /// `(-K)³ = q³A³`.
    pub fn anticanonical_degree(&self) -> Rational {
        self.a3 * int((self.q as i128).pow(3))
    }

    /// Local classes `i_P` in basket order, one per distinct type.
    pub fn local_classes(&self) -> Vec<u32> {
        self.local.terms.iter().map(|p| p.class as u32).collect()
    }

    /// `χ(tA)` for any integer `t`.
    pub fn chi(&self, t: i64) -> Rational {
        chi_with(self.q, self.a3, self.kc2, &self.local, t)
    }

    /// `χ(tA)` as an integer, or the reason it is not one.
    pub fn chi_integer(&self, t: i64) -> Result<i64> {
        let value = self.chi(t);
        as_integer(&value)
            .map(|v| v as i64)
            .ok_or(Error::NonIntegralChi { t, value })
    }

    /// `g = dim|-K| - 1 = χ(qA) - 2`.
    pub fn genus(&self) -> Result<i64> {
        let t = self.q as i64;
        let h0 = self.chi_integer(t)?;
        if h0 < 0 {
            return Err(Error::NegativeChi {
                t,
                value: self.chi(t),
            });
        }
        Ok(h0 - 2)
    }

    /// `h⁰(mA) = χ(mA)` for `m = 0..=n`.
    pub fn hilbert_coeffs(&self, n: usize) -> Result<HilbertCoefficients> {
        let values = (0..=n as i64)
            .map(|m| {
                let v = self.chi_integer(m)?;
                if v < 0 {
                    return Err(Error::NegativeChi {
                        t: m,
                        value: self.chi(m),
                    });
                }
                Ok(v)
            })
            .collect::<Result<Vec<_>>>()?;
        HilbertCoefficients::new(values)
    }
}

/// The Riemann–Roch expression with explicit `A³`, shared with the `A³`
/// solvers of the search.
pub(crate) fn chi_with(
    q: u32,
    a3: Rational,
    kc2: Rational,
    local: &LocalCorrections,
    t: i64,
) -> Rational {
    let q = q as i128;
    let t128 = t as i128;
    let cubic = frac(t128 * (t128 + q) * (2 * t128 + q), 12) * a3;
    let linear = frac(t128, 12 * q) * kc2;
    int(1) + cubic + linear + local.at(t)
}

/// Plurigenera `h⁰(mA)` for `m = 0..=N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertCoefficients {
    values: Vec<i64>,
}

impl HilbertCoefficients {
    /// Requires `values[0] = 1` and every value nonnegative.
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if values.first() != Some(&1) {
            return Err(Error::Parse(format!(
                "Hilbert coefficients must start with 1, got {values:?}"
            )));
        }
        if let Some((t, &v)) = values.iter().enumerate().find(|(_, v)| **v < 0) {
            return Err(Error::NegativeChi {
                t: t as i64,
                value: int(v as i128),
            });
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<i64> {
        self.values
    }
}

impl fmt::Display for HilbertCoefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Upper bound `t(t+d)/(2d)` for `dim|B|`, `B ≡ tΘ` on a Du Val del Pezzo
/// surface of degree `d` with `-K ~ dΘ`.
pub fn delpezzo_linear_bound(t: u32, d: u32) -> Result<Rational> {
    if !(1..=6).contains(&d) {
        return Err(Error::DegreeOutOfRange(d));
    }
    let (t, d) = (t as i128, d as i128);
    Ok(frac(t * (t + d), 2 * d))
}

/// Smallest positive `A³` step allowed by integrality of `r·A³`.
pub fn volume_grid_step(basket: &Basket) -> Rational {
    frac(1, basket.gorenstein_index() as i128)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(r: i64, b: i64) -> SingularityType {
        SingularityType::new(r, b).unwrap()
    }

    fn example_family() -> NumericalFano {
        NumericalFano::new(2, frac(10, 3), "3,1,1".parse().unwrap()).unwrap()
    }

    #[test]
    fn correction_examples() {
        assert_eq!(correction(t(3, 1), 0), int(0));
        assert_eq!(correction(t(3, 1), 1), frac(-2, 9));
        assert_eq!(correction(t(3, 1), 2), frac(-1, 9));
        assert_eq!(correction(t(5, 2), 4), frac(-1, 5));
        assert_eq!(correction(t(5, 2), -1), frac(-1, 5));
    }

    #[test]
    fn local_class_examples() {
        assert_eq!(local_class_of_a(2, t(3, 1)).unwrap(), 1);
        assert_eq!(local_class_of_a(19, t(7, 2)).unwrap(), 4);
        assert_eq!(
            local_class_of_a(2, t(2, 1)),
            Err(Error::NotCoprime { q: 2, r: 2 })
        );
    }

    #[test]
    fn kc2_examples() {
        assert_eq!(kawamata_kc2(&Basket::empty()), int(24));
        assert_eq!(kawamata_kc2(&"3,1".parse().unwrap()), frac(64, 3));
        let x6: Basket = "2,1;4,3;5,2".parse().unwrap();
        assert_eq!(kawamata_kc2(&x6), frac(279, 20));
    }

    #[test]
    fn chi_of_example_family() {
        let x = example_family();
        assert_eq!(x.chi(1), int(5));
        assert_eq!(x.chi(-1), int(0));
        assert_eq!(x.chi(0), int(1));
        assert_eq!(x.chi(2), int(16));
        assert_eq!(x.genus().unwrap(), 14);
        assert_eq!(x.hilbert_coeffs(2).unwrap().values(), &[1, 5, 16]);
        assert_eq!(x.anticanonical_degree(), frac(80, 3));
    }

    #[test]
    fn genus_examples() {
        let p3 = NumericalFano::new(4, int(1), Basket::empty()).unwrap();
        assert_eq!(p3.genus().unwrap(), 33);
        assert_eq!(p3.hilbert_coeffs(1).unwrap().values(), &[1, 4]);

        let y = NumericalFano::new(2, frac(7, 3), "3,1".parse().unwrap()).unwrap();
        assert_eq!(y.chi(2), int(12));
        assert_eq!(y.genus().unwrap(), 10);
        assert_eq!(y.hilbert_coeffs(3).unwrap().values(), &[1, 4, 12, 27]);
    }

    #[test]
    fn non_integral_chi_is_reported() {
        let bogus = NumericalFano::new(2, frac(1, 2), "3,1".parse().unwrap()).unwrap();
        assert!(matches!(
            bogus.hilbert_coeffs(3),
            Err(Error::NonIntegralChi { .. })
        ));
        assert!(bogus.genus().is_err());
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            NumericalFano::new(2, int(1), "2,1".parse().unwrap()),
            Err(Error::NotCoprime { .. })
        ));
        assert!(matches!(
            NumericalFano::new(2, int(0), Basket::empty()),
            Err(Error::NonPositiveVolume(_))
        ));
    }

    #[test]
    fn delpezzo_bound_examples() {
        assert_eq!(delpezzo_linear_bound(1, 1).unwrap(), int(1));
        assert_eq!(delpezzo_linear_bound(2, 1).unwrap(), int(3));
        assert_eq!(delpezzo_linear_bound(3, 2).unwrap(), frac(15, 4));
        assert_eq!(delpezzo_linear_bound(3, 7), Err(Error::DegreeOutOfRange(7)));
    }

    #[test]
    fn hilbert_coefficients_validate() {
        assert!(HilbertCoefficients::new(vec![]).is_err());
        assert!(HilbertCoefficients::new(vec![2, 3]).is_err());
        assert!(HilbertCoefficients::new(vec![1, -1]).is_err());
        assert_eq!(
            HilbertCoefficients::new(vec![1, 5, 16])
                .unwrap()
                .to_string(),
            "1 5 16"
        );
    }
}
