use serde::Serialize;

use crate::error::{Error, Result};
use crate::solutions::SolutionType;

/// The m-th period of the canonical XIII/XIV wave, the time between phases
/// 2(m−1)π₂ and 2mπ₂ of the inner leaf function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PeriodRecord {
    pub m: u32,
    /// ln(m/(m−1)); infinite for m = 1.
    pub length: f64,
    /// [ln(4m−4), ln(4m)], with −∞ as the lower end for m = 1.
    pub window: (f64, f64),
}

pub fn periods(kind: SolutionType, count: u32) -> Result<Vec<PeriodRecord>> {
    if !matches!(kind, SolutionType::XIII | SolutionType::XIV) {
        return Err(Error::UnsupportedType(format!("periods are defined for XIII and XIV, not {kind}")));
    }
    if count == 0 {
        return Err(Error::InvalidSpec("period count must be at least 1".into()));
    }
    Ok((1..=count)
        .map(|m| {
            let mf = f64::from(m);
            let lo = (4.0 * mf - 4.0).ln();
            let hi = (4.0 * mf).ln();
            let length = if m == 1 { f64::INFINITY } else { (mf / (mf - 1.0)).ln() };
            PeriodRecord { m, length, window: (lo, hi) }
        })
        .collect())
}
