//! Curve data behind the published figures, for external plotting.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::integrals::IntegralKind;
use crate::leaf::{Basis, LeafEvaluator, LeafKind};
use crate::solutions::{SolutionSpec, SolutionType};

pub const POINTS_PER_CURVE: usize = 400;
pub const FIGURE_COUNT: u8 = 30;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CurveSource {
    Leaf(LeafKind),
    Integral(IntegralKind),
    Solution(SolutionSpec),
    Cosh,
    Sinh,
    Exp,
    NegExp,
    /// √(1 + cleafh₂(t)²), the positive part of the type X decomposition.
    RootOnePlusCleafhSq,
    /// √(1 − sleaf₂(t)²), the bounded part of the type X decomposition.
    RootOneMinusSleafSq,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub label: String,
    pub source: CurveSource,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureSpec {
    pub id: u8,
    pub caption: &'static str,
    pub window: (f64, f64),
    pub curves: Vec<Curve>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurveSamples {
    pub label: String,
    pub t: Vec<f64>,
    pub x: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FigureData {
    pub id: u8,
    pub caption: String,
    pub curves: Vec<CurveSamples>,
}

fn curve(label: impl Into<String>, source: CurveSource) -> Curve {
    Curve { label: label.into(), source }
}

fn leaf(kind: LeafKind) -> Curve {
    curve(format!("{kind}2(t)"), CurveSource::Leaf(kind))
}

fn integral(kind: IntegralKind) -> Curve {
    curve(format!("{kind}(t)"), CurveSource::Integral(kind))
}

fn solution(kind: SolutionType, a: f64, omega: f64, phi: f64, b: Option<f64>) -> Curve {
    let spec = SolutionSpec::new(kind, a, omega, phi, b);
    let n = |v: f64| crate::format::number(v, 6);
    let mut label = format!("{kind} A={} omega={} phi={}", n(a), n(omega), n(phi));
    if let Some(b) = b {
        label.push_str(&format!(" B={}", n(b)));
    }
    curve(label, CurveSource::Solution(spec))
}

fn amplitude_sweep(kind: SolutionType, amps: &[f64], phi: f64, b: Option<f64>) -> Vec<Curve> {
    amps.iter().map(|&a| solution(kind, a, 1.0, phi, b)).collect()
}

fn omega_sweep(kind: SolutionType, omegas: &[f64], phi: f64, b: Option<f64>) -> Vec<Curve> {
    omegas.iter().map(|&w| solution(kind, 1.0, w, phi, b)).collect()
}

const PM123: [f64; 6] = [1.0, -1.0, 2.0, -2.0, 3.0, -3.0];
const PM_TENTHS: [f64; 6] = [1.1, -1.1, 1.2, -1.2, 1.3, -1.3];

impl FigureSpec {
    pub fn get(id: u8, half_pi2: f64) -> Result<FigureSpec> {
        use CurveSource::*;
        use SolutionType::*;
        let near = (-1.5, 1.5);
        let exp_window = (-3.0, 3.0);
        let (pos, neg) = ((-2.0, 3.2), (-3.2, 2.0));
        let q = Some(half_pi2);
        let (caption, window, curves) = match id {
            1 => (
                "hyperbolic leaf functions and their integrals",
                (-2.0, 2.0),
                vec![
                    leaf(LeafKind::Sleafh),
                    leaf(LeafKind::Cleafh),
                    integral(IntegralKind::SLH2),
                    integral(IntegralKind::CLH2),
                ],
            ),
            2 => (
                "type VIII with cosh(t), cleafh2(t) and CLH2(t)",
                near,
                vec![
                    solution(VIII, 1.0, 1.0, 0.0, None),
                    curve("cosh(t)", Cosh),
                    leaf(LeafKind::Cleafh),
                    integral(IntegralKind::CLH2),
                ],
            ),
            3 => ("type VIII, amplitude sweep", near, amplitude_sweep(VIII, &PM123, 0.0, None)),
            4 => ("type VIII, angular frequency sweep", near, omega_sweep(VIII, &PM123, 0.0, None)),
            5 => (
                "type IX with sinh(t), cleafh2(t) and CLH2(t)",
                near,
                vec![
                    solution(IX, 1.0, 1.0, 0.0, None),
                    curve("sinh(t)", Sinh),
                    leaf(LeafKind::Cleafh),
                    integral(IntegralKind::CLH2),
                ],
            ),
            6 => ("type IX, amplitude sweep", near, amplitude_sweep(IX, &PM123, 0.0, None)),
            7 => ("type IX, angular frequency sweep", near, omega_sweep(IX, &PM123, 0.0, None)),
            8 => (
                "type X with its two components",
                near,
                vec![
                    solution(X, 1.0, 1.0, 0.0, None),
                    curve("cosh(t)", Cosh),
                    leaf(LeafKind::Cleafh),
                    curve("sqrt(1+cleafh2(t)^2)", RootOnePlusCleafhSq),
                    curve("sqrt(1-sleaf2(t)^2)", RootOneMinusSleafSq),
                ],
            ),
            9 => ("type X, amplitude sweep", near, amplitude_sweep(X, &PM123, 0.0, None)),
            10 => ("type X, angular frequency sweep", near, omega_sweep(X, &PM123, 0.0, None)),
            11 => (
                "type XI with sinh(t) and sleafh2(t)",
                exp_window,
                vec![solution(XI, 1.0, 1.0, -1.0, Some(1.0)), curve("sinh(t)", Sinh), leaf(LeafKind::Sleafh)],
            ),
            12 => ("type XI, amplitude sweep, B=1, phi=-1", exp_window, amplitude_sweep(XI, &PM123, -1.0, Some(1.0))),
            13 => (
                "type XI, angular frequency sweep, B=1, phi=-1",
                exp_window,
                omega_sweep(XI, &PM_TENTHS, -1.0, Some(1.0)),
            ),
            14 => ("type XI, amplitude sweep, B=2, phi=-2", exp_window, amplitude_sweep(XI, &PM123, -2.0, Some(2.0))),
            15 => (
                "type XI, angular frequency sweep, B=2, phi=-2",
                exp_window,
                omega_sweep(XI, &PM_TENTHS, -2.0, Some(2.0)),
            ),
            16 => (
                "type XII with e^t and cleafh2(t)",
                exp_window,
                vec![solution(XII, 1.0, 1.0, -1.0, Some(1.0)), curve("e^t", Exp), leaf(LeafKind::Cleafh)],
            ),
            17 => ("type XII, amplitude sweep, B=1, phi=-1", exp_window, amplitude_sweep(XII, &PM123, -1.0, Some(1.0))),
            18 => (
                "type XII, angular frequency sweep, B=1, phi=-1",
                exp_window,
                omega_sweep(XII, &PM_TENTHS, -1.0, Some(1.0)),
            ),
            19 => ("type XII, amplitude sweep, B=2, phi=-2", exp_window, amplitude_sweep(XII, &PM123, -2.0, Some(2.0))),
            20 => (
                "type XII, angular frequency sweep, B=2, phi=-2",
                exp_window,
                omega_sweep(XII, &PM_TENTHS, -2.0, Some(2.0)),
            ),
            21 | 26 => {
                let kind = if id == 21 { XIII } else { XIV };
                (
                    if id == 21 { "type XIII with the envelope e^t" } else { "type XIV with the envelope e^t" },
                    pos,
                    vec![solution(kind, 1.0, 1.0, 0.0, q), curve("e^t", Exp), curve("-e^t", NegExp)],
                )
            }
            22 => ("type XIII, positive amplitudes", pos, amplitude_sweep(XIII, &[1.0, 2.0, 3.0], 0.0, q)),
            23 => ("type XIII, negative amplitudes", pos, amplitude_sweep(XIII, &[-1.0, -2.0, -3.0], 0.0, q)),
            24 => ("type XIII, positive angular frequencies", pos, omega_sweep(XIII, &[1.0, 1.1, 1.2], 0.0, q)),
            25 => ("type XIII, negative angular frequencies", neg, omega_sweep(XIII, &[-1.0, -1.1, -1.2], 0.0, q)),
            27 => ("type XIV, positive amplitudes", pos, amplitude_sweep(XIV, &[1.0, 2.0, 3.0], 0.0, q)),
            28 => ("type XIV, negative amplitudes", pos, amplitude_sweep(XIV, &[-1.0, -2.0, -3.0], 0.0, q)),
            29 => ("type XIV, positive angular frequencies", pos, omega_sweep(XIV, &[1.0, 1.1, 1.2], 0.0, q)),
            30 => ("type XIV, negative angular frequencies", neg, omega_sweep(XIV, &[-1.0, -1.1, -1.2], 0.0, q)),
            _ => return Err(Error::UnknownId(format!("figure {id}"))),
        };
        Ok(FigureSpec { id, caption, window, curves })
    }
}

fn sample(source: &CurveSource, t: f64, ev: &LeafEvaluator) -> Result<f64> {
    let two = Basis::TWO;
    Ok(match source {
        CurveSource::Leaf(kind) => ev.value(*kind, two, t)?,
        CurveSource::Integral(kind) => ev.leaf_integral(*kind, t)?,
        CurveSource::Solution(spec) => ev.solution_jet(spec, t)?.x,
        CurveSource::Cosh => t.cosh(),
        CurveSource::Sinh => t.sinh(),
        CurveSource::Exp => t.exp(),
        CurveSource::NegExp => -t.exp(),
        CurveSource::RootOnePlusCleafhSq => (1.0 + ev.value(LeafKind::Cleafh, two, t)?.powi(2)).sqrt(),
        CurveSource::RootOneMinusSleafSq => (1.0 - ev.value(LeafKind::Sleaf, two, t)?.powi(2)).max(0.0).sqrt(),
    })
}

/// Pulls `edge` toward `inside` until evaluation succeeds there.
fn last_good(source: &CurveSource, inside: f64, edge: f64, ev: &LeafEvaluator) -> f64 {
    if sample(source, edge, ev).is_ok() {
        return edge;
    }
    let (mut good, mut bad) = (inside, edge);
    for _ in 0..60 {
        let mid = 0.5 * (good + bad);
        if sample(source, mid, ev).is_ok() {
            good = mid;
        } else {
            bad = mid;
        }
    }
    good
}

/// The part of `window` on which the curve is finite, trimmed by the pole guard.
fn span(source: &CurveSource, window: (f64, f64), ev: &LeafEvaluator) -> Result<Option<(f64, f64)>> {
    let (mut lo, mut hi) = window;
    match source {
        CurveSource::Solution(spec) => {
            let domain = ev.solution_domain(spec)?;
            let Some(iv) = domain.intervals.iter().find(|iv| iv.lo < hi && iv.hi > lo) else {
                return Ok(None);
            };
            lo = lo.max(iv.lo);
            hi = hi.min(iv.hi);
        }
        CurveSource::Leaf(kind) => {
            if let Some(p) = ev.pole(*kind, Basis::TWO)? {
                lo = lo.max(-p.abscissa);
                hi = hi.min(p.abscissa);
            }
        }
        CurveSource::Integral(kind) => {
            if let Some(p) = ev.pole(kind.integrand(), Basis::TWO)? {
                lo = lo.max(-p.abscissa);
                hi = hi.min(p.abscissa);
            }
        }
        CurveSource::RootOnePlusCleafhSq => {
            let p = ev.constants().eta2;
            lo = lo.max(-p);
            hi = hi.min(p);
        }
        _ => {}
    }
    if hi <= lo {
        return Ok(None);
    }
    let mid = 0.5 * (lo + hi);
    sample(source, mid, ev)?;
    Ok(Some((last_good(source, mid, lo, ev), last_good(source, mid, hi, ev))))
}

impl FigureData {
    pub fn build(id: u8, ev: &LeafEvaluator) -> Result<FigureData> {
        let spec = FigureSpec::get(id, 0.5 * ev.constants().pi2)?;
        let mut curves = Vec::with_capacity(spec.curves.len());
        for c in &spec.curves {
            let Some((lo, hi)) = span(&c.source, spec.window, ev)? else {
                curves.push(CurveSamples { label: c.label.clone(), t: Vec::new(), x: Vec::new() });
                continue;
            };
            let step = (hi - lo) / (POINTS_PER_CURVE - 1) as f64;
            let t: Vec<f64> = (0..POINTS_PER_CURVE)
                .map(|i| if i + 1 == POINTS_PER_CURVE { hi } else { lo + step * i as f64 })
                .collect();
            let x = t.iter().map(|&t| sample(&c.source, t, ev)).collect::<Result<Vec<_>>>()?;
            curves.push(CurveSamples { label: c.label.clone(), t, x });
        }
        Ok(FigureData { id, caption: spec.caption.to_string(), curves })
    }
}
