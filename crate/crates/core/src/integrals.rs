//! Integral functions SL₂, SLH₂ and CLH₂ (running integrals from 0 of
//! sleaf₂, sleafh₂ and cleafh₂).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::leaf::{evaluator, Basis, EvalConfig, LeafEvaluator, LeafKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IntegralKind {
    SL2,
    SLH2,
    CLH2,
}

impl IntegralKind {
    pub fn integrand(self) -> LeafKind {
        match self {
            IntegralKind::SL2 => LeafKind::Sleaf,
            IntegralKind::SLH2 => LeafKind::Sleafh,
            IntegralKind::CLH2 => LeafKind::Cleafh,
        }
    }
}

impl fmt::Display for IntegralKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IntegralKind::SL2 => "SL2",
            IntegralKind::SLH2 => "SLH2",
            IntegralKind::CLH2 => "CLH2",
        })
    }
}

impl FromStr for IntegralKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "SL2" => Ok(IntegralKind::SL2),
            "SLH2" => Ok(IntegralKind::SLH2),
            "CLH2" => Ok(IntegralKind::CLH2),
            other => Err(Error::UnknownId(format!("integral kind '{other}'"))),
        }
    }
}

impl LeafEvaluator {
    pub fn leaf_integral(&self, kind: IntegralKind, t: f64) -> Result<f64> {
        self.integral(kind.integrand(), Basis::TWO, t)
    }

    /// CLH₂ through ln(√(c²+1) + √(c²−1)) − ln√2 with c = cleafh₂(t), signed
    /// like t because CLH₂ is odd.
    pub fn clh2_closed_form(&self, t: f64) -> Result<f64> {
        let c = self.value(LeafKind::Cleafh, Basis::TWO, t)?;
        let c2 = c * c;
        let below = c2 - 1.0;
        if below < -1e-12 {
            return Err(Error::NegativeRadicand(format!("cleafh2({t})^2 - 1 = {below:e}")));
        }
        let magnitude = ((c2 + 1.0).sqrt() + below.max(0.0).sqrt()).ln() - std::f64::consts::SQRT_2.ln();
        Ok(magnitude.copysign(t))
    }
}

pub fn eval_integral(kind: IntegralKind, t: f64, cfg: &EvalConfig) -> Result<f64> {
    evaluator(cfg)?.leaf_integral(kind, t)
}

pub fn clh2_closed_form(t: f64, cfg: &EvalConfig) -> Result<f64> {
    evaluator(cfg)?.clh2_closed_form(t)
}
