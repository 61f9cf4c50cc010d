//! Anticanonical degree bookkeeping along chains of birational maps, and
//! Δ-genus helpers.
//!
//! Only the arithmetic of `(-K)³` is tracked; whether a step exists
//! geometrically is the caller's business.

use std::fmt;
use std::str::FromStr;

use crate::rational::{frac, int};
use crate::{Error, Rational, Result, SingularityType};

/// `(-K)³` of the smooth quadric threefold: `(3H)³` with `H³ = 2`.
pub const SMOOTH_QUADRIC_DEGREE: i128 = 54;

/// Chain from the smooth quadric `Q ⊂ P⁴` to the index-2 threefold with a
/// single `1/3(1,1,2)` point: blow up a point, blow up the proper transform of
/// a rational quintic (`-K·Γ = 9`), flop, contract the `P²` to a `1/2(1,1,1)`
/// point, contract the `P(1,1,2)` to a `1/3(1,1,2)` point.
pub const QUADRIC_TO_INDEX_TWO_CHAIN: &str =
    "blowpt, blowcurve(g=0,kdeg=9), flop, contract:1/2(1,1,1), contract:1/3(1,1,2)";

/// A single step of a chain.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LedgerStep {
    /// Blowup of a smooth point: `-8`.
    BlowupPoint,
    /// Contraction of a `P²` with normal bundle `O(-1)` to a smooth point: `+8`.
    ContractToPoint,
    /// Blowup of a smooth curve of genus `genus` with `-K·Γ = kdeg`:
    /// `-3·kdeg + c₁(N)`, `c₁(N) = 2g - 2 + kdeg`.
    BlowupCurve {
        genus: u32,
        kdeg: Rational,
    },
    ContractToCurve {
        genus: u32,
        kdeg: Rational,
    },
    /// Kawamata blowup of `1/r(1,a,r-a)`: `-1/(r·a·(r-a))`.
    KawamataBlowup(SingularityType),
    ContractToQuotient(SingularityType),
    /// `K`-trivial surgery, degree unchanged.
    Flop,
}

impl LedgerStep {
    /// Curve step, rejecting a non-integral `c₁(N)`.
    pub fn blowup_curve(genus: u32, kdeg: Rational) -> Result<Self> {
        let step = Self::BlowupCurve { genus, kdeg };
        step.validate()?;
        Ok(step)
    }

    fn validate(&self) -> Result<()> {
        match self {
            Self::BlowupCurve { genus, kdeg } | Self::ContractToCurve { genus, kdeg } => {
                let c1 = int(2 * *genus as i128 - 2) + kdeg;
                if !c1.is_integer() {
                    return Err(Error::InvalidStep(format!(
                        "c1(N) = {c1} is not an integer for g = {genus}, -K.C = {kdeg}"
                    )));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    pub fn inverse(&self) -> Self {
        match self {
            Self::BlowupPoint => Self::ContractToPoint,
            Self::ContractToPoint => Self::BlowupPoint,
            Self::BlowupCurve { genus, kdeg } => Self::ContractToCurve {
                genus: *genus,
                kdeg: *kdeg,
            },
            Self::ContractToCurve { genus, kdeg } => Self::BlowupCurve {
                genus: *genus,
                kdeg: *kdeg,
            },
            Self::KawamataBlowup(t) => Self::ContractToQuotient(*t),
            Self::ContractToQuotient(t) => Self::KawamataBlowup(*t),
            Self::Flop => Self::Flop,
        }
    }

    /// Change of `(-K)³` caused by the step.
    pub fn increment(&self) -> Result<Rational> {
        self.validate()?;
        Ok(match self {
            Self::BlowupPoint => int(-8),
            Self::ContractToPoint => int(8),
            Self::BlowupCurve { genus, kdeg } => curve_increment(*genus, *kdeg),
            Self::ContractToCurve { genus, kdeg } => -curve_increment(*genus, *kdeg),
            Self::KawamataBlowup(t) => -kawamata_increment(*t),
            Self::ContractToQuotient(t) => kawamata_increment(*t),
            Self::Flop => int(0),
        })
    }
}

fn curve_increment(genus: u32, kdeg: Rational) -> Rational {
    let c1 = int(2 * genus as i128 - 2) + kdeg;
    c1 - int(3) * kdeg
}

/// `1/(r·a·(r-a))` for `1/r(1,a,r-a)`.
pub fn kawamata_increment(t: SingularityType) -> Rational {
    let (r, a) = (t.r() as i128, t.b() as i128);
    frac(1, r * a * (r - a))
}

/// `(-K)³` after `step`, starting from a positive degree.
pub fn apply_step(deg: Rational, step: &LedgerStep) -> Result<Rational> {
    if deg <= int(0) {
        return Err(Error::NonPositiveDegree(deg));
    }
    let next = deg + step.increment()?;
    if next <= int(0) {
        return Err(Error::NonPositiveDegree(next));
    }
    Ok(next)
}

impl fmt::Display for LedgerStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::BlowupPoint => f.write_str("blowpt"),
            Self::ContractToPoint => f.write_str("contractpt"),
            Self::BlowupCurve { genus, kdeg } => write!(f, "blowcurve(g={genus},kdeg={kdeg})"),
            Self::ContractToCurve { genus, kdeg } => {
                write!(f, "contractcurve(g={genus},kdeg={kdeg})")
            }
            Self::KawamataBlowup(t) => write!(f, "kawamata:{}", quotient_text(*t)),
            Self::ContractToQuotient(t) => write!(f, "contract:{}", quotient_text(*t)),
            Self::Flop => f.write_str("flop"),
        }
    }
}

/// `1/r(1,a,r-a)` with `a` the canonical pair weight.
fn quotient_text(t: SingularityType) -> String {
    format!("1/{}(1,{},{})", t.r(), t.b(), t.a())
}

impl FromStr for LedgerStep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidStep(s.to_string());
        let step = match s {
            "blowpt" => Self::BlowupPoint,
            "contractpt" => Self::ContractToPoint,
            "flop" => Self::Flop,
            _ => {
                if let Some(t) = s.strip_prefix("kawamata:") {
                    Self::KawamataBlowup(t.parse()?)
                } else if let Some(t) = s.strip_prefix("contract:") {
                    Self::ContractToQuotient(t.parse()?)
                } else if let Some(args) = s.strip_prefix("blowcurve") {
                    let (genus, kdeg) = curve_args(args).ok_or_else(bad)?;
                    Self::BlowupCurve { genus, kdeg }
                } else if let Some(args) = s.strip_prefix("contractcurve") {
                    let (genus, kdeg) = curve_args(args).ok_or_else(bad)?;
                    Self::ContractToCurve { genus, kdeg }
                } else {
                    return Err(bad());
                }
            }
        };
        step.validate()?;
        Ok(step)
    }
}

fn curve_args(s: &str) -> Option<(u32, Rational)> {
    let inner = s.trim().strip_prefix('(')?.strip_suffix(')')?;
    let (mut genus, mut kdeg) = (None, None);
    for kv in inner.split(',') {
        let (k, v) = kv.split_once('=')?;
        match k.trim() {
            "g" => genus = Some(v.trim().parse().ok()?),
            "kdeg" => kdeg = Some(crate::rational::parse(v).ok()?),
            _ => return None,
        }
    }
    Some((genus?, kdeg?))
}

/// Splits a chain description on commas outside parentheses.
pub fn parse_chain(s: &str) -> Result<Vec<LedgerStep>> {
    let mut steps = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                steps.push(s[start..i].parse()?);
                start = i + 1;
            }
            _ => {}
        }
    }
    if !s[start..].trim().is_empty() {
        steps.push(s[start..].parse()?);
    }
    Ok(steps)
}

/// A chain of steps with its degree trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkLedger {
    steps: Vec<LedgerStep>,
    degrees: Vec<Rational>,
}

impl LinkLedger {
    /// Runs the chain; every intermediate degree must stay positive.
    pub fn new(start_degree: Rational, steps: Vec<LedgerStep>) -> Result<Self> {
        let mut degrees = vec![start_degree];
        let mut deg = start_degree;
        for s in &steps {
            deg = apply_step(deg, s)?;
            degrees.push(deg);
        }
        Ok(Self { steps, degrees })
    }

    pub fn start_degree(&self) -> Rational {
        self.degrees[0]
    }

    pub fn final_degree(&self) -> Rational {
        *self.degrees.last().expect("start degree present")
    }

    pub fn steps(&self) -> &[LedgerStep] {
        &self.steps
    }

    /// Start degree followed by the degree after each step.
    pub fn degrees(&self) -> &[Rational] {
        &self.degrees
    }

    /// The same chain walked backwards with inverse steps.
    pub fn reversed(&self) -> Result<Self> {
        let steps = self.steps.iter().rev().map(LedgerStep::inverse).collect();
        Self::new(self.final_degree(), steps)
    }

    /// Comma separated degrees.
    pub fn trace(&self) -> String {
        self.degrees
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Outcome of [`verify_paper_chain`].
#[derive(Clone, Debug)]
pub struct ChainReport {
    pub ledger: LinkLedger,
    pub expected: Vec<Rational>,
    /// `(2A)³` for `A³ = 10/3`.
    pub endpoint_degree: Rational,
}

impl ChainReport {
    pub fn trace_matches(&self) -> bool {
        self.ledger.degrees() == self.expected.as_slice()
    }

    pub fn endpoint_matches(&self) -> bool {
        self.ledger.final_degree() == self.endpoint_degree
    }

    pub fn passed(&self) -> bool {
        self.trace_matches() && self.endpoint_matches()
    }
}

/// Expected trace of [`QUADRIC_TO_INDEX_TWO_CHAIN`].
pub fn quadric_chain_trace() -> Vec<Rational> {
    vec![int(54), int(46), int(26), int(26), frac(53, 2), frac(80, 3)]
}

/// Runs [`QUADRIC_TO_INDEX_TWO_CHAIN`] from `(-K_Q)³ = 54` and compares
/// against the quoted degrees and `(-K_X)³ = 8·A³`, `A³ = 10/3`.
pub fn verify_paper_chain() -> Result<ChainReport> {
    let steps = parse_chain(QUADRIC_TO_INDEX_TWO_CHAIN)?;
    let ledger = LinkLedger::new(int(SMOOTH_QUADRIC_DEGREE), steps)?;
    Ok(ChainReport {
        ledger,
        expected: quadric_chain_trace(),
        endpoint_degree: int(8) * frac(10, 3),
    })
}

/// `Δ(X, S) = dim X + S^{dim X} - h⁰(X, O(S))`.
pub fn delta_genus(dim: i64, deg_s: Rational, h0: i64) -> Result<Rational> {
    if h0 < 0 {
        return Err(Error::OutOfDomain(format!("h0 = {h0} is negative")));
    }
    Ok(int(dim as i128) + deg_s - int(h0 as i128))
}

/// Δ-genus of `(X, S)` when `-K_X = λS` and a surface section is a del Pezzo
/// surface of degree `K_S²`: `1 + (2-λ)K_S² / (2(λ-1)²)`.
pub fn delta_genus_del_pezzo(lambda: Rational, ks2: i64) -> Result<Rational> {
    if lambda <= int(1) {
        return Err(Error::OutOfDomain(format!(
            "lambda = {lambda} must exceed 1"
        )));
    }
    if !(1..=9).contains(&ks2) {
        return Err(Error::OutOfDomain(format!("K_S^2 = {ks2} outside 1..=9")));
    }
    let l1 = lambda - int(1);
    Ok(int(1) + (int(2) - lambda) * int(ks2 as i128) / (int(2) * l1 * l1))
}
