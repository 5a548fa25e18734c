use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::leaf::LeafEvaluator;
use crate::solutions::{SolutionSpec, SolutionType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Convexity {
    /// Local maximum, x'' < 0.
    Upward,
    /// Local minimum, x'' > 0.
    Downward,
}

impl fmt::Display for Convexity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convexity::Upward => "U",
            Convexity::Downward => "D",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExtremumRecord {
    pub k: u32,
    pub kind: Convexity,
    pub t_exact: f64,
    pub x_exact: f64,
    /// Time at which the inner leaf function equals ±1.
    pub t_approx: f64,
    pub x_approx: f64,
    /// x'(t_exact) after polishing.
    pub slope: f64,
}

impl ExtremumRecord {
    pub fn label(&self) -> String {
        format!("({}{})", self.k, self.kind)
    }
}

const SUBDIVISIONS: usize = 64;

/// Extrema of XIII/XIV solutions, `k_max` of each convexity.
///
/// Work in the inner phase p = B·e^{ωt} + φ, where x = A·((p−φ)/B)·f(p).
/// dx/dp vanishes where f(p) + (p−φ)·f'(p) = 0, which has one root between
/// each anchor f(p) = ±1 and the neighbouring zero of f on the side away from
/// φ. That bracket is mapped back to t and searched with the analytic
/// derivative.
pub fn extrema(kind: SolutionType, spec: &SolutionSpec, k_max: u32, ev: &LeafEvaluator) -> Result<Vec<ExtremumRecord>> {
    if !matches!(kind, SolutionType::XIII | SolutionType::XIV) {
        return Err(Error::UnsupportedType(format!("extrema are defined for XIII and XIV, not {kind}")));
    }
    if spec.kind != kind {
        return Err(Error::InvalidSpec(format!("spec is type {} but extrema were requested for {kind}", spec.kind)));
    }
    spec.validate()?;
    if k_max == 0 {
        return Ok(Vec::new());
    }
    let b = spec.b_or_missing()?;
    let half = 0.5 * ev.constants().pi2;
    // Anchors sit at odd multiples of π₂/2 for sleaf₂ and even multiples for cleaf₂.
    let offset = if kind == SolutionType::XIII { 1.0 } else { 0.0 };
    let anchor = |j: i64| (2.0 * j as f64 + offset) * half;
    // sleaf₂((2j+1)π₂/2) = (−1)^j and cleaf₂(2jπ₂/2) = (−1)^j.
    let anchor_sign = |j: i64| if j.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let dir: i64 = if b > 0.0 { 1 } else { -1 };
    // First anchor strictly on the reachable side of φ.
    let mut j = ((spec.phi / half - offset) / 2.0).floor() as i64 - dir;
    while (anchor(j) - spec.phi) * b.signum() <= 0.0 {
        j += dir;
    }

    let mut up = Vec::new();
    let mut down = Vec::new();
    let t_of = |p: f64| ((p - spec.phi) / b).ln() / spec.omega;
    let mut guard = 0;
    while (up.len() as u32) < k_max || (down.len() as u32) < k_max {
        guard += 1;
        if guard > 4 * k_max as usize + 8 {
            return Err(Error::RootBracketFailure("anchor enumeration did not terminate".into()));
        }
        let pa = anchor(j);
        let pz = pa + dir as f64 * half;
        let leaf_sign = anchor_sign(j);
        let sign = leaf_sign * spec.a.signum();
        let kind_here = if sign > 0.0 { Convexity::Upward } else { Convexity::Downward };
        j += dir;
        let bucket = match kind_here {
            Convexity::Upward => &mut up,
            Convexity::Downward => &mut down,
        };
        if bucket.len() as u32 >= k_max {
            continue;
        }
        let (ta, tz) = (t_of(pa), t_of(pz));
        let slope = |t: f64| ev.solution_jet(spec, t).map(|jet| jet.dx);
        let t_exact = bracketed_root(&slope, ta.min(tz), ta.max(tz))?;
        let jet = ev.solution_jet(spec, t_exact)?;
        let e_a = (pa - spec.phi) / b;
        let k = bucket.len() as u32 + 1;
        bucket.push(ExtremumRecord {
            k,
            kind: if jet.ddx < 0.0 { Convexity::Upward } else { Convexity::Downward },
            t_exact,
            x_exact: jet.x,
            t_approx: e_a.ln() / spec.omega,
            x_approx: spec.a * e_a * leaf_sign,
            slope: jet.dx,
        });
    }
    let mut all: Vec<ExtremumRecord> = up.into_iter().chain(down).collect();
    all.sort_by(|a, b| a.t_exact.total_cmp(&b.t_exact));
    Ok(all)
}

/// Sign change search on a uniform subdivision of [lo, hi], then bisection
/// and a few secant steps kept inside the final bracket.
pub(crate) fn bracketed_root<F>(f: &F, lo: f64, hi: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let step = (hi - lo) / SUBDIVISIONS as f64;
    let mut a = lo;
    let mut fa = f(a)?;
    let mut bracket = None;
    for i in 1..=SUBDIVISIONS {
        let b = if i == SUBDIVISIONS { hi } else { lo + step * i as f64 };
        let fb = f(b)?;
        if fa == 0.0 {
            return Ok(a);
        }
        if fa.signum() != fb.signum() {
            bracket = Some((a, fa, b, fb));
            break;
        }
        a = b;
        fa = fb;
    }
    let (mut a, mut fa, mut b, mut fb) =
        bracket.ok_or_else(|| Error::RootBracketFailure(format!("no sign change of dx/dt on [{lo}, {hi}]")))?;
    while b - a > 1e-9 * (1.0 + a.abs()) {
        let m = 0.5 * (a + b);
        let fm = f(m)?;
        if fm == 0.0 {
            return Ok(m);
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
            fb = fm;
        }
    }
    for _ in 0..8 {
        if fb == fa {
            break;
        }
        let s = b - fb * (b - a) / (fb - fa);
        if !(s > a && s < b) {
            break;
        }
        let fs = f(s)?;
        if fs == 0.0 {
            return Ok(s);
        }
        if fs.signum() == fa.signum() {
            a = s;
            fa = fs;
        } else {
            b = s;
            fb = fs;
        }
        if b - a <= 4.0 * f64::EPSILON * (1.0 + a.abs()) {
            break;
        }
    }
    Ok(if fa.abs() < fb.abs() { a } else { b })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_of_cosine() {
        let r = bracketed_root(&|t: f64| Ok(t.cos()), 1.0, 2.0).unwrap();
        assert!((r - std::f64::consts::FRAC_PI_2).abs() < 1e-14);
    }

    #[test]
    fn missing_bracket() {
        assert!(matches!(bracketed_root(&|t: f64| Ok(t * t + 1.0), -1.0, 1.0), Err(Error::RootBracketFailure(_))));
    }
}
