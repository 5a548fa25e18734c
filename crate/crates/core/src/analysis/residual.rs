use serde::Serialize;

use crate::error::{Error, Result};
use crate::leaf::LeafEvaluator;
use crate::solutions::{Domain, SolutionSpec, SolutionType};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ResidualReport {
    pub spec: SolutionSpec,
    pub samples: usize,
    /// max |x'' + δx' + αx + βx³| / (1 + |x|³).
    pub max_normalized: f64,
    pub worst_t: f64,
}

/// `samples` cell-centred points in the first interval of `domain`.
///
/// Unbounded ends are cut to a window a few units of 1/|ω| long, so the
/// grid stays where the exponential factors are moderate.
pub fn interior_grid(domain: &Domain, omega: f64, samples: usize) -> Result<Vec<f64>> {
    let iv = domain.intervals.first().ok_or_else(|| Error::InvalidSpec("solution has an empty domain".into()))?;
    let scale = 1.0 / omega.abs();
    let (lo, hi) = match (iv.lo.is_finite(), iv.hi.is_finite()) {
        (true, true) => (iv.lo, iv.hi),
        (false, true) => (iv.hi - 4.0 * scale, iv.hi),
        (true, false) => (iv.lo, iv.lo + 4.0 * scale),
        (false, false) => (-2.0 * scale, 3.0 * scale),
    };
    let n = samples as f64;
    Ok((0..samples).map(|i| lo + (hi - lo) * (i as f64 + 0.5) / n).collect())
}

/// A ∈ {±1, ±2}, ω ∈ {±1, ±1.3}, φ ∈ {−2, 0, 1} and, where the family
/// takes one, B ∈ {1, 2}.
pub fn parameter_sweep(kind: SolutionType) -> Vec<SolutionSpec> {
    let bs: &[Option<f64>] = if kind.uses_b() { &[Some(1.0), Some(2.0)] } else { &[None] };
    let mut out = Vec::new();
    for a in [1.0, -1.0, 2.0, -2.0] {
        for omega in [1.0, -1.0, 1.3, -1.3] {
            for phi in [-2.0, 0.0, 1.0] {
                out.extend(bs.iter().map(|&b| SolutionSpec::new(kind, a, omega, phi, b)));
            }
        }
    }
    out
}

pub fn residual_sweep(spec: &SolutionSpec, samples: usize, ev: &LeafEvaluator) -> Result<ResidualReport> {
    if samples < 2 {
        return Err(Error::InvalidSpec(format!("residual sweep needs at least 2 samples, got {samples}")));
    }
    spec.validate()?;
    let coeffs = crate::solutions::coefficients(spec)?;
    let grid = interior_grid(&ev.solution_domain(spec)?, spec.omega, samples)?;
    let mut report = ResidualReport { spec: *spec, samples, max_normalized: 0.0, worst_t: f64::NAN };
    for t in grid {
        let jet = ev.solution_jet(spec, t)?;
        let r = coeffs.residual(&jet).abs() / (1.0 + jet.x.abs().powi(3));
        if report.worst_t.is_nan() || r > report.max_normalized {
            report.max_normalized = r;
            report.worst_t = t;
        }
    }
    Ok(report)
}
