//! Exact solutions VIII–XIV of the unforced Duffing equation
//! `x'' + δx' + αx + βx³ = 0`.
//!
//! Each family is a strategy behind [`ExactSolution`] and is looked up by
//! name through [`registry`].

mod divergent;
mod exponential;
mod registry;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::leaf::{evaluator, EvalConfig, LeafConstants, LeafEvaluator};

pub use registry::{registry, Registry};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SolutionType {
    VIII,
    IX,
    X,
    XI,
    XII,
    XIII,
    XIV,
}

impl SolutionType {
    pub const ALL: [SolutionType; 7] = [
        SolutionType::VIII,
        SolutionType::IX,
        SolutionType::X,
        SolutionType::XI,
        SolutionType::XII,
        SolutionType::XIII,
        SolutionType::XIV,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SolutionType::VIII => "VIII",
            SolutionType::IX => "IX",
            SolutionType::X => "X",
            SolutionType::XI => "XI",
            SolutionType::XII => "XII",
            SolutionType::XIII => "XIII",
            SolutionType::XIV => "XIV",
        }
    }

    pub fn uses_b(self) -> bool {
        self >= SolutionType::XI
    }
}

impl fmt::Display for SolutionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SolutionType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let up = s.trim().to_ascii_uppercase();
        SolutionType::ALL
            .into_iter()
            .enumerate()
            .find(|(i, t)| t.name() == up || (i + 8).to_string() == up)
            .map(|(_, t)| t)
            .ok_or_else(|| Error::UnknownId(format!("solution type '{s}'")))
    }
}

/// A solution family together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolutionSpec {
    #[serde(rename = "type")]
    pub kind: SolutionType,
    #[serde(rename = "A")]
    pub a: f64,
    pub omega: f64,
    #[serde(default)]
    pub phi: f64,
    #[serde(rename = "B", default, skip_serializing_if = "Option::is_none")]
    pub b: Option<f64>,
}

impl SolutionSpec {
    pub fn new(kind: SolutionType, a: f64, omega: f64, phi: f64, b: Option<f64>) -> Self {
        SolutionSpec { kind, a, omega, phi, b }
    }

    /// A=1, ω=1, φ=0, B=π₂/2, the configuration used for periods and extrema.
    pub fn canonical(kind: SolutionType, consts: &LeafConstants) -> Self {
        SolutionSpec::new(kind, 1.0, 1.0, 0.0, Some(0.5 * consts.pi2))
    }

    pub fn validate(&self) -> Result<()> {
        let finite_nonzero = |name: &str, v: f64| {
            if v.is_finite() && v != 0.0 {
                Ok(())
            } else {
                Err(Error::InvalidSpec(format!("{name} must be finite and nonzero, got {v}")))
            }
        };
        finite_nonzero("A", self.a)?;
        finite_nonzero("omega", self.omega)?;
        if !self.phi.is_finite() {
            return Err(Error::InvalidSpec(format!("phi must be finite, got {}", self.phi)));
        }
        match (self.kind.uses_b(), self.b) {
            (true, None) => Err(Error::MissingB(self.kind.name())),
            (true, Some(b)) => finite_nonzero("B", b),
            (false, Some(_)) => Err(Error::InvalidSpec(format!("type {} takes no B", self.kind))),
            (false, None) => Ok(()),
        }
    }

    pub(crate) fn b_or_missing(&self) -> Result<f64> {
        self.b.ok_or(Error::MissingB(self.kind.name()))
    }
}

/// Coefficients of `x'' + δx' + αx + βx³ = F cos(ωt)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DuffingCoefficients {
    pub delta: f64,
    pub alpha: f64,
    pub beta: f64,
    #[serde(rename = "F")]
    pub forcing: f64,
}

impl DuffingCoefficients {
    pub fn residual(&self, jet: &Jet) -> f64 {
        jet.ddx + self.delta * jet.dx + self.alpha * jet.x + self.beta * jet.x.powi(3)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn contains(&self, t: f64) -> bool {
        t > self.lo && t < self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let end = |v: f64| {
            if v == f64::INFINITY {
                "+inf".to_string()
            } else if v == f64::NEG_INFINITY {
                "-inf".to_string()
            } else {
                format!("{v:.6}")
            }
        };
        write!(f, "({}, {})", end(self.lo), end(self.hi))
    }
}

/// Open intervals of t on which a solution is finite.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Domain {
    pub intervals: Vec<Interval>,
    pub poles: Vec<f64>,
}

impl Domain {
    pub fn real_line() -> Self {
        Domain { intervals: vec![Interval { lo: f64::NEG_INFINITY, hi: f64::INFINITY }], poles: Vec::new() }
    }

    pub fn contains(&self, t: f64) -> bool {
        self.intervals.iter().any(|i| i.contains(t))
    }

    fn with_pole_ends(intervals: Vec<Interval>) -> Self {
        let poles = intervals.iter().flat_map(|i| [i.lo, i.hi]).filter(|v| v.is_finite()).collect();
        Domain { intervals, poles }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return f.write_str("(empty)");
        }
        let parts: Vec<String> = self.intervals.iter().map(|i| i.to_string()).collect();
        f.write_str(&parts.join(" U "))
    }
}

/// Value with first and second time derivatives.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Jet {
    pub x: f64,
    pub dx: f64,
    pub ddx: f64,
}

pub trait ExactSolution: Send + Sync {
    fn tag(&self) -> SolutionType;

    fn coefficients(&self, spec: &SolutionSpec) -> Result<DuffingCoefficients>;

    fn domain(&self, spec: &SolutionSpec, consts: &LeafConstants) -> Result<Domain>;

    /// x, x' and x'' at `t`, from the analytic derivative formulas.
    fn jet(&self, spec: &SolutionSpec, t: f64, ev: &LeafEvaluator) -> Result<Jet>;

    /// Closed-form x(0) and x'(0).
    fn initial_state(&self, spec: &SolutionSpec, ev: &LeafEvaluator) -> Result<(f64, f64)>;
}

fn strategy(spec: &SolutionSpec) -> Result<&'static dyn ExactSolution> {
    spec.validate()?;
    registry().get(spec.kind)
}

impl LeafEvaluator {
    pub fn solution_jet(&self, spec: &SolutionSpec, t: f64) -> Result<Jet> {
        let s = strategy(spec)?;
        let domain = s.domain(spec, self.constants())?;
        if !domain.contains(t) {
            return Err(Error::OutsideDomain { t, domain: domain.to_string() });
        }
        s.jet(spec, t, self)
    }

    pub fn solution_domain(&self, spec: &SolutionSpec) -> Result<Domain> {
        strategy(spec)?.domain(spec, self.constants())
    }

    pub fn solution_initial_state(&self, spec: &SolutionSpec) -> Result<(f64, f64)> {
        let s = strategy(spec)?;
        let domain = s.domain(spec, self.constants())?;
        if !domain.contains(0.0) {
            return Err(Error::OutsideDomain { t: 0.0, domain: domain.to_string() });
        }
        s.initial_state(spec, self)
    }
}

pub fn evaluate(spec: &SolutionSpec, t: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(evaluator(cfg)?.solution_jet(spec, t)?.x)
}

pub fn derivative(spec: &SolutionSpec, t: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(evaluator(cfg)?.solution_jet(spec, t)?.dx)
}

pub fn second_derivative(spec: &SolutionSpec, t: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(evaluator(cfg)?.solution_jet(spec, t)?.ddx)
}

pub fn coefficients(spec: &SolutionSpec) -> Result<DuffingCoefficients> {
    strategy(spec)?.coefficients(spec)
}

pub fn initial_state(spec: &SolutionSpec, cfg: &EvalConfig) -> Result<(f64, f64)> {
    evaluator(cfg)?.solution_initial_state(spec)
}

pub fn domain(spec: &SolutionSpec) -> Result<Domain> {
    evaluator(&EvalConfig::default())?.solution_domain(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_roman_and_arabic() {
        assert_eq!("xiii".parse::<SolutionType>().unwrap(), SolutionType::XIII);
        assert_eq!("10".parse::<SolutionType>().unwrap(), SolutionType::X);
        assert!("VII".parse::<SolutionType>().is_err());
    }

    #[test]
    fn spec_validation() {
        let s = SolutionSpec::new(SolutionType::XI, 1.0, 1.0, -1.0, None);
        assert_eq!(s.validate(), Err(Error::MissingB("XI")));
        let s = SolutionSpec::new(SolutionType::VIII, 0.0, 1.0, 0.0, None);
        assert!(matches!(s.validate(), Err(Error::InvalidSpec(_))));
        let s = SolutionSpec::new(SolutionType::VIII, 1.0, 1.0, 0.0, Some(1.0));
        assert!(matches!(s.validate(), Err(Error::InvalidSpec(_))));
    }
}
