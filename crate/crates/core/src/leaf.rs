//! Leaf functions `sleaf_n`, `cleaf_n` and hyperbolic leaf functions
//! `sleafh_n`, `cleafh_n`.
//!
//! All four are defined by initial value problems
//!
//! ```text
//! x'' = -n x^(2n-1)   (sleaf, cleaf)
//! x'' = +n x^(2n-1)   (sleafh, cleafh)
//! ```
//!
//! with `(x, x') = (0, 1)` for the s-kinds and `(1, 0)` for the c-kinds. Each
//! (kind, n) pair is integrated once from `t = 0` outward and the accepted
//! steps are kept for later queries. The running integral `∫₀ᵗ x` is carried
//! as a third state component.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ode::{self, Path, Tolerance};
use crate::quadrature;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LeafKind {
    Sleaf,
    Cleaf,
    Sleafh,
    Cleafh,
}

impl LeafKind {
    pub const ALL: [LeafKind; 4] = [LeafKind::Sleaf, LeafKind::Cleaf, LeafKind::Sleafh, LeafKind::Cleafh];

    pub fn is_hyperbolic(self) -> bool {
        matches!(self, LeafKind::Sleafh | LeafKind::Cleafh)
    }

    /// Sine-like kinds are odd functions of t, cosine-like kinds are even.
    pub fn is_odd(self) -> bool {
        matches!(self, LeafKind::Sleaf | LeafKind::Sleafh)
    }

    pub fn stem(self) -> &'static str {
        match self {
            LeafKind::Sleaf => "sleaf",
            LeafKind::Cleaf => "cleaf",
            LeafKind::Sleafh => "sleafh",
            LeafKind::Cleafh => "cleafh",
        }
    }

    fn initial(self) -> (f64, f64) {
        if self.is_odd() {
            (0.0, 1.0)
        } else {
            (1.0, 0.0)
        }
    }
}

impl fmt::Display for LeafKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.stem())
    }
}

impl FromStr for LeafKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sleaf" => Ok(LeafKind::Sleaf),
            "cleaf" => Ok(LeafKind::Cleaf),
            "sleafh" => Ok(LeafKind::Sleafh),
            "cleafh" => Ok(LeafKind::Cleafh),
            other => Err(Error::UnknownId(format!("leaf kind '{other}'"))),
        }
    }
}

/// Parses names such as `sleafh2` or `cleaf3` into a kind and a basis.
pub fn parse_leaf_name(name: &str) -> Result<(LeafKind, Basis)> {
    let split = name
        .find(|c: char| c.is_ascii_digit() || c == '-')
        .ok_or_else(|| Error::UnknownId(format!("'{name}' has no basis suffix, e.g. sleafh2")))?;
    let kind: LeafKind = name[..split].parse()?;
    let n: i64 = name[split..].parse().map_err(|_| Error::UnknownId(format!("'{name}' has a malformed basis")))?;
    Ok((kind, Basis::new(n)?))
}

/// The integer exponent parameter n of the defining equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub struct Basis(u32);

impl Basis {
    pub const ONE: Basis = Basis(1);
    pub const TWO: Basis = Basis(2);

    pub fn new(n: i64) -> Result<Self> {
        if n < 1 || n > i64::from(u32::MAX) {
            return Err(Error::InvalidBasis(n));
        }
        Ok(Basis(n as u32))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl TryFrom<i64> for Basis {
    type Error = Error;

    fn try_from(n: i64) -> Result<Self> {
        Basis::new(n)
    }
}

impl From<Basis> for i64 {
    fn from(b: Basis) -> i64 {
        i64::from(b.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub pole_guard: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig { abs_tol: 1e-12, rel_tol: 1e-10, pole_guard: 1e-3 }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("abs_tol", self.abs_tol), ("rel_tol", self.rel_tol), ("pole_guard", self.pole_guard)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidConfig(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(())
    }

    // The integrator runs two orders tighter than the requested accuracy so
    // that accumulated global error stays inside it.
    fn step_tolerance(&self) -> Tolerance {
        Tolerance { abs: self.abs_tol * 1e-2, rel: self.rel_tol * 1e-2 }
    }

    fn quadrature_tolerance(&self) -> (f64, f64) {
        (self.abs_tol * 1e-2, self.rel_tol * 1e-3)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LeafConstants {
    /// Pole of sleafh₂.
    pub zeta2: f64,
    /// Pole of cleafh₂, also the quarter period of sleaf₂ and cleaf₂.
    pub eta2: f64,
    /// Period constant, `2 * eta2`.
    pub pi2: f64,
}

/// Computes ζ₂ and η₂ by quadrature.
///
/// ζ₂ = ∫₀^∞ du/√(1+u⁴) becomes ∫₀^{π/2} dθ/√(cos⁴θ + sin⁴θ) under u = tan θ.
/// η₂ = ∫₁^∞ du/√(u⁴−1) becomes ∫₀¹ dv/√(1−v⁴) under u = 1/v, and the
/// endpoint singularity at v = 1 is removed by v = 1 − w².
pub fn constants(cfg: &EvalConfig) -> Result<LeafConstants> {
    cfg.validate()?;
    let (abs, rel) = cfg.quadrature_tolerance();
    let zeta2 = quadrature::integrate(
        |th: f64| {
            let (s, c) = th.sin_cos();
            1.0 / (c.powi(4) + s.powi(4)).sqrt()
        },
        0.0,
        std::f64::consts::FRAC_PI_2,
        abs,
        rel,
    )?
    .value;
    let eta2 = quarter_period_integral(2, abs, rel)?;
    Ok(LeafConstants { zeta2, eta2, pi2: 2.0 * eta2 })
}

/// Q_n = ∫₀¹ du/√(1−u^{2n}), the quarter period of sleaf_n and cleaf_n.
fn quarter_period_integral(n: u32, abs: f64, rel: f64) -> Result<f64> {
    // With u = 1 − w², du = −2w dw and 1 − u^{2n} = −expm1(2n·ln(1 − w²)),
    // which vanishes like 2n·w², so the integrand stays bounded at w = 0.
    let two_n = 2.0 * f64::from(n);
    let f = |w: f64| {
        let a = w * w;
        let gap = -(two_n * (-a).ln_1p()).exp_m1();
        2.0 * w / gap.sqrt()
    };
    Ok(quadrature::integrate(f, 0.0, 1.0, abs, rel)?.value)
}

/// A blow-up abscissa of a hyperbolic leaf function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Pole {
    pub abscissa: f64,
    /// True when the abscissa comes from integration escape rather than
    /// from a closed-form integral.
    pub approximate: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LeafState {
    pub value: f64,
    pub derivative: f64,
    /// ∫₀ᵗ of the function.
    pub integral: f64,
}

// Past this magnitude n = 2 hyperbolic trajectories continue in y = 1/x.
const RECIPROCAL_SWITCH: f64 = 2.0;
// Escape magnitude used to locate blow-up for n >= 3.
const ESCAPE: f64 = 1e8;
// sinh/cosh never blow up; this only bounds how far the cache reaches.
const HORIZON_N1: f64 = 1e30;
const MAX_STEPS: usize = 2_000_000;

#[derive(Debug, Clone, Copy)]
enum Phase {
    /// State (x, x', ∫x) under x'' = ±n x^(2n−1).
    Direct { n: u32, sign: f64 },
    /// State (y, y', ∫x) with y = 1/x under y'' = 2C y³, C = x'² − x⁴.
    Reciprocal { c: f64 },
}

impl Phase {
    fn rhs(self) -> impl Fn(f64, &[f64; 3]) -> [f64; 3] {
        move |_t, s| match self {
            Phase::Direct { n, sign } => {
                let p = (2 * n - 1) as i32;
                [s[1], sign * f64::from(n) * s[0].powi(p), s[0]]
            }
            Phase::Reciprocal { c } => [s[1], 2.0 * c * s[0].powi(3), 1.0 / s[0]],
        }
    }

    fn decode(self, s: [f64; 3]) -> LeafState {
        match self {
            Phase::Direct { .. } => LeafState { value: s[0], derivative: s[1], integral: s[2] },
            Phase::Reciprocal { .. } => {
                LeafState { value: 1.0 / s[0], derivative: -s[1] / (s[0] * s[0]), integral: s[2] }
            }
        }
    }
}

#[derive(Debug)]
struct Segment {
    phase: Phase,
    path: Path<3>,
}

/// Cached forward solution on `[0, reach]` for one (kind, n).
#[derive(Debug)]
struct Trajectory {
    kind: LeafKind,
    segments: Vec<Segment>,
    quarter: Option<f64>,
    pole: Option<Pole>,
    reach: f64,
}

impl Trajectory {
    fn build(kind: LeafKind, n: u32, consts: &LeafConstants, cfg: &EvalConfig) -> Result<Self> {
        let tol = cfg.step_tolerance();
        let (x0, v0) = kind.initial();
        let sign = if kind.is_hyperbolic() { 1.0 } else { -1.0 };
        let direct = Phase::Direct { n, sign };
        let y0 = [x0, v0, 0.0];

        if !kind.is_hyperbolic() {
            let quarter = if n == 2 {
                consts.eta2
            } else {
                let (abs, rel) = cfg.quadrature_tolerance();
                quarter_period_integral(n, abs, rel)?
            };
            let end = quarter * 1.01;
            let path = ode::integrate(&direct.rhs(), 0.0, y0, end, tol, |_, _| false, MAX_STEPS)?;
            return Ok(Trajectory {
                kind,
                segments: vec![Segment { phase: direct, path }],
                quarter: Some(quarter),
                pole: None,
                reach: quarter,
            });
        }

        if n == 2 {
            let pole = if kind == LeafKind::Sleafh { consts.zeta2 } else { consts.eta2 };
            let near =
                ode::integrate(&direct.rhs(), 0.0, y0, pole, tol, |_, s| s[0].abs() >= RECIPROCAL_SWITCH, MAX_STEPS)?;
            let start = *near.last();
            let (x, v, q) = (start.y[0], start.y[1], start.y[2]);
            // The first integral x'² − x⁴ is fixed by the initial data.
            let c = v0 * v0 - x0.powi(4);
            let far = Phase::Reciprocal { c };
            let end = pole - 0.5 * cfg.pole_guard;
            let path =
                ode::integrate(&far.rhs(), start.t, [1.0 / x, -v / (x * x), q], end, tol, |_, _| false, MAX_STEPS)?;
            return Ok(Trajectory {
                kind,
                segments: vec![Segment { phase: direct, path: near }, Segment { phase: far, path }],
                quarter: None,
                pole: Some(Pole { abscissa: pole, approximate: false }),
                reach: end,
            });
        }

        let escape = if n == 1 { HORIZON_N1 } else { ESCAPE };
        let path = ode::integrate(
            &direct.rhs(),
            0.0,
            y0,
            f64::INFINITY,
            tol,
            |t, s| {
                let a = s[0].abs();
                // In double precision t cannot resolve the last stretch before
                // the pole once the remaining time ~ a^(1−n)/(n−1) is below
                // a few ulps, so stop there as well.
                a > escape || (n >= 3 && a > 1.0 && a.powi(1 - n as i32) / f64::from(n - 1) < 1e-12 * (1.0 + t))
            },
            MAX_STEPS,
        )?;
        let last = path.last().t;
        let pole = (n >= 3).then_some(Pole { abscissa: last, approximate: true });
        Ok(Trajectory { kind, segments: vec![Segment { phase: direct, path }], quarter: None, pole, reach: last })
    }

    /// State at `0 <= t <= reach`.
    fn forward(&self, t: f64) -> LeafState {
        let seg = self
            .segments
            .iter()
            .find(|s| t <= s.path.last().t)
            .unwrap_or_else(|| &self.segments[self.segments.len() - 1]);
        seg.phase.decode(seg.path.at(&seg.phase.rhs(), t))
    }

    fn check_reach(&self, t: f64, guard: f64) -> Result<()> {
        let a = t.abs();
        match self.pole {
            Some(p) => {
                if a >= p.abscissa {
                    Err(Error::DomainExceeded { t, pole: p.abscissa })
                } else if a > p.abscissa - guard {
                    Err(Error::PoleProximity { t, pole: p.abscissa, guard })
                } else {
                    Ok(())
                }
            }
            None if a > self.reach => {
                Err(Error::IntegrationFailure(format!("|t| = {a} lies beyond the integration horizon {}", self.reach)))
            }
            None => Ok(()),
        }
    }

    fn state(&self, t: f64, guard: f64) -> Result<LeafState> {
        match self.quarter {
            Some(q) => Ok(self.periodic(t, q)),
            None => {
                self.check_reach(t, guard)?;
                let s = self.forward(t.abs());
                let neg = t < 0.0;
                Ok(match (neg, self.kind.is_odd()) {
                    (false, _) => s,
                    // Odd function: value and integral flip parity accordingly.
                    (true, true) => LeafState { value: -s.value, derivative: s.derivative, integral: s.integral },
                    (true, false) => LeafState { value: s.value, derivative: -s.derivative, integral: -s.integral },
                })
            }
        }
    }

    /// Periodic kinds: reduce modulo 4Q, then fold onto [0, Q] using the
    /// half-period sign flip and the quarter-period mirror.
    fn periodic(&self, t: f64, q: f64) -> LeafState {
        let value_and_slope = |r: f64| -> (f64, f64) {
            let mut r = r.rem_euclid(4.0 * q);
            let mut sign = 1.0;
            if r >= 2.0 * q {
                r -= 2.0 * q;
                sign = -1.0;
            }
            if r <= q {
                let s = self.forward(r);
                return (sign * s.value, sign * s.derivative);
            }
            let s = self.forward(2.0 * q - r);
            if self.kind.is_odd() {
                (sign * s.value, -sign * s.derivative)
            } else {
                (-sign * s.value, sign * s.derivative)
            }
        };
        let (value, derivative) = value_and_slope(t);
        LeafState { value, derivative, integral: self.periodic_integral(t, q) }
    }

    fn periodic_integral(&self, t: f64, q: f64) -> f64 {
        let at = |r: f64| self.forward(r).integral;
        if self.kind.is_odd() {
            // Even, period 4Q, symmetric about 2Q; sleaf is mirror symmetric about Q.
            let mut r = t.abs().rem_euclid(4.0 * q);
            if r > 2.0 * q {
                r = 4.0 * q - r;
            }
            if r <= q {
                at(r)
            } else {
                2.0 * at(q) - at(2.0 * q - r)
            }
        } else {
            // Odd, antiperiodic with period 2Q, mirror symmetric about Q.
            let sign = t.signum();
            let mut r = t.abs().rem_euclid(4.0 * q);
            let mut flip = 1.0;
            if r >= 2.0 * q {
                r -= 2.0 * q;
                flip = -1.0;
            }
            let v = if r <= q { at(r) } else { at(2.0 * q - r) };
            sign * flip * v
        }
    }
}

/// Leaf function evaluator with per-(kind, n) caches built on first use.
///
/// Caches are immutable once built; construction happens under a write lock
/// so concurrent readers only ever see complete trajectories.
#[derive(Debug)]
pub struct LeafEvaluator {
    cfg: EvalConfig,
    constants: LeafConstants,
    cache: RwLock<HashMap<(LeafKind, u32), Arc<Trajectory>>>,
}

impl LeafEvaluator {
    pub fn new(cfg: EvalConfig) -> Result<Self> {
        let constants = constants(&cfg)?;
        Ok(LeafEvaluator { cfg, constants, cache: RwLock::new(HashMap::new()) })
    }

    pub fn config(&self) -> &EvalConfig {
        &self.cfg
    }

    pub fn constants(&self) -> &LeafConstants {
        &self.constants
    }

    fn trajectory(&self, kind: LeafKind, n: Basis) -> Result<Arc<Trajectory>> {
        let key = (kind, n.get());
        if let Some(t) = self.cache.read().unwrap_or_else(|e| e.into_inner()).get(&key) {
            return Ok(Arc::clone(t));
        }
        let mut cache = self.cache.write().unwrap_or_else(|e| e.into_inner());
        if let Some(t) = cache.get(&key) {
            return Ok(Arc::clone(t));
        }
        let built = Arc::new(Trajectory::build(kind, n.get(), &self.constants, &self.cfg)?);
        cache.insert(key, Arc::clone(&built));
        Ok(built)
    }

    /// Value, slope and running integral at `t`.
    pub fn state(&self, kind: LeafKind, n: Basis, t: f64) -> Result<LeafState> {
        if !t.is_finite() {
            return Err(Error::InvalidSpec(format!("t must be finite, got {t}")));
        }
        self.trajectory(kind, n)?.state(t, self.cfg.pole_guard)
    }

    pub fn value(&self, kind: LeafKind, n: Basis, t: f64) -> Result<f64> {
        Ok(self.state(kind, n, t)?.value)
    }

    pub fn derivative(&self, kind: LeafKind, n: Basis, t: f64) -> Result<f64> {
        Ok(self.state(kind, n, t)?.derivative)
    }

    pub fn integral(&self, kind: LeafKind, n: Basis, t: f64) -> Result<f64> {
        Ok(self.state(kind, n, t)?.integral)
    }

    /// Positive blow-up abscissa, or `None` for kinds without one.
    pub fn pole(&self, kind: LeafKind, n: Basis) -> Result<Option<Pole>> {
        if !kind.is_hyperbolic() || n.get() == 1 {
            return Ok(None);
        }
        if n.get() == 2 {
            let abscissa = if kind == LeafKind::Sleafh { self.constants.zeta2 } else { self.constants.eta2 };
            return Ok(Some(Pole { abscissa, approximate: false }));
        }
        Ok(self.trajectory(kind, n)?.pole)
    }
}

/// Shared evaluator for a configuration. Evaluators are created once per
/// distinct configuration and live for the rest of the process.
pub fn evaluator(cfg: &EvalConfig) -> Result<Arc<LeafEvaluator>> {
    static POOL: OnceLock<Mutex<Vec<Arc<LeafEvaluator>>>> = OnceLock::new();
    cfg.validate()?;
    let pool = POOL.get_or_init(|| Mutex::new(Vec::new()));
    let mut pool = pool.lock().unwrap_or_else(|e| e.into_inner());
    if let Some(ev) = pool.iter().find(|e| e.cfg == *cfg) {
        return Ok(Arc::clone(ev));
    }
    let ev = Arc::new(LeafEvaluator::new(*cfg)?);
    pool.push(Arc::clone(&ev));
    Ok(ev)
}

pub fn eval_leaf(kind: LeafKind, n: Basis, t: f64, cfg: &EvalConfig) -> Result<f64> {
    evaluator(cfg)?.value(kind, n, t)
}

pub fn eval_leaf_derivative(kind: LeafKind, n: Basis, t: f64, cfg: &EvalConfig) -> Result<f64> {
    evaluator(cfg)?.derivative(kind, n, t)
}

pub fn pole_of(kind: LeafKind, n: Basis, cfg: &EvalConfig) -> Result<Option<Pole>> {
    evaluator(cfg)?.pole(kind, n)
}
