use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::leaf::{Basis, LeafEvaluator, LeafKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum IdentityId {
    A,
    B,
    C,
    D,
    E,
    F,
    /// CLH₂ from the logarithmic closed form against the integrated value.
    ClosedForm,
}

impl IdentityId {
    pub const ALL: [IdentityId; 7] = [
        IdentityId::A,
        IdentityId::B,
        IdentityId::C,
        IdentityId::D,
        IdentityId::E,
        IdentityId::F,
        IdentityId::ClosedForm,
    ];

    pub fn statement(self) -> &'static str {
        match self {
            IdentityId::A => "cleafh2(t)^2 = cosh(2 CLH2(t))",
            IdentityId::B => "sqrt(cleafh2(t)^4 - 1) = sinh(2 CLH2(t))",
            IdentityId::C => "sin(2 SL2(t)) = sleaf2(t)^2",
            IdentityId::D => "-s^2 + c^2 - s^2 c^2 = 1 with s = sleaf2, c = cleafh2",
            IdentityId::E => "(1 - sin 2SL2)(1 + cosh 2CLH2) = 2",
            IdentityId::F => "cosh(CLH2)(cos SL2 - sin SL2) = 1",
            IdentityId::ClosedForm => "CLH2 = ln(sqrt(c^2+1) + sqrt(c^2-1)) - ln sqrt2",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdentityId::A => "a",
            IdentityId::B => "b",
            IdentityId::C => "c",
            IdentityId::D => "d",
            IdentityId::E => "e",
            IdentityId::F => "f",
            IdentityId::ClosedForm => "clh2-closed-form",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub id: IdentityId,
    pub grid_size: usize,
    pub max_deviation: f64,
    pub worst_t: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn max_deviation(&self) -> f64 {
        self.checks.iter().map(|c| c.max_deviation).fold(0.0, f64::max)
    }

    pub fn get(&self, id: IdentityId) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.id == id)
    }
}

/// Left minus right of every identity, maximised over `grid`.
pub fn verify_identities(ev: &LeafEvaluator, grid: &[f64]) -> Result<IdentityReport> {
    let mut checks: Vec<IdentityCheck> = IdentityId::ALL
        .iter()
        .map(|&id| IdentityCheck { id, grid_size: grid.len(), max_deviation: 0.0, worst_t: f64::NAN })
        .collect();
    for &t in grid {
        let s = ev.state(LeafKind::Sleaf, Basis::TWO, t)?;
        let c = ev.state(LeafKind::Cleafh, Basis::TWO, t)?;
        let (sl, clh) = (s.integral, c.integral);
        let (sv, cv) = (s.value, c.value);
        // The radical carries the sign of the slope of cleafh₂, so (b) also
        // holds for t < 0.
        let radical = (cv.powi(4) - 1.0).max(0.0).sqrt().copysign(c.derivative);
        let deviations = [
            cv * cv - (2.0 * clh).cosh(),
            radical - (2.0 * clh).sinh(),
            (2.0 * sl).sin() - sv * sv,
            -sv * sv + cv * cv - sv * sv * cv * cv - 1.0,
            (1.0 - (2.0 * sl).sin()) * (1.0 + (2.0 * clh).cosh()) - 2.0,
            clh.cosh() * (sl.cos() - sl.sin()) - 1.0,
            ev.clh2_closed_form(t)? - clh,
        ];
        for (check, d) in checks.iter_mut().zip(deviations) {
            if check.worst_t.is_nan() || d.abs() > check.max_deviation {
                check.max_deviation = d.abs();
                check.worst_t = t;
            }
        }
    }
    Ok(IdentityReport { checks })
}
