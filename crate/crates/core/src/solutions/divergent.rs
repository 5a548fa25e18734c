//! Types VIII, IX and X: hyperbolic and circular functions of the integral
//! functions CLH₂ and SL₂ at phase u = ωt + φ. All three diverge at |u| = η₂.

use std::f64::consts::{FRAC_PI_4, SQRT_2};

use super::{Domain, DuffingCoefficients, ExactSolution, Interval, Jet, SolutionSpec, SolutionType};
use crate::error::Result;
use crate::leaf::{Basis, LeafConstants, LeafEvaluator, LeafKind, LeafState};

fn phase_domain(spec: &SolutionSpec, consts: &LeafConstants) -> Domain {
    let a = (-consts.eta2 - spec.phi) / spec.omega;
    let b = (consts.eta2 - spec.phi) / spec.omega;
    Domain::with_pole_ends(vec![Interval { lo: a.min(b), hi: a.max(b) }])
}

fn cleafh(ev: &LeafEvaluator, u: f64) -> Result<LeafState> {
    ev.state(LeafKind::Cleafh, Basis::TWO, u)
}

fn sleaf(ev: &LeafEvaluator, u: f64) -> Result<LeafState> {
    ev.state(LeafKind::Sleaf, Basis::TWO, u)
}

/// x = A cosh(CLH₂(ωt+φ)).
pub struct TypeVIII;

impl ExactSolution for TypeVIII {
    fn tag(&self) -> SolutionType {
        SolutionType::VIII
    }

    fn coefficients(&self, spec: &SolutionSpec) -> Result<DuffingCoefficients> {
        let w = spec.omega;
        Ok(DuffingCoefficients { delta: 0.0, alpha: 3.0 * w * w, beta: -4.0 * (w / spec.a).powi(2), forcing: 0.0 })
    }

    fn domain(&self, spec: &SolutionSpec, consts: &LeafConstants) -> Result<Domain> {
        Ok(phase_domain(spec, consts))
    }

    fn jet(&self, spec: &SolutionSpec, t: f64, ev: &LeafEvaluator) -> Result<Jet> {
        let (a, w) = (spec.a, spec.omega);
        let c = cleafh(ev, w * t + spec.phi)?;
        let (ch, sh) = (c.integral.cosh(), c.integral.sinh());
        Ok(Jet { x: a * ch, dx: a * w * sh * c.value, ddx: a * w * w * (ch * c.value * c.value + sh * c.derivative) })
    }

    fn initial_state(&self, spec: &SolutionSpec, ev: &LeafEvaluator) -> Result<(f64, f64)> {
        let clh = ev.clh2_closed_form(spec.phi)?;
        let c = ev.value(LeafKind::Cleafh, Basis::TWO, spec.phi)?;
        Ok((spec.a * clh.cosh(), spec.a * clh.sinh() * spec.omega * c))
    }
}

/// x = A sinh(CLH₂(ωt+φ)).
pub struct TypeIX;

impl ExactSolution for TypeIX {
    fn tag(&self) -> SolutionType {
        SolutionType::IX
    }

    fn coefficients(&self, spec: &SolutionSpec) -> Result<DuffingCoefficients> {
        let w = spec.omega;
        Ok(DuffingCoefficients { delta: 0.0, alpha: -3.0 * w * w, beta: -4.0 * (w / spec.a).powi(2), forcing: 0.0 })
    }

    fn domain(&self, spec: &SolutionSpec, consts: &LeafConstants) -> Result<Domain> {
        Ok(phase_domain(spec, consts))
    }

    fn jet(&self, spec: &SolutionSpec, t: f64, ev: &LeafEvaluator) -> Result<Jet> {
        let (a, w) = (spec.a, spec.omega);
        let c = cleafh(ev, w * t + spec.phi)?;
        let (ch, sh) = (c.integral.cosh(), c.integral.sinh());
        Ok(Jet { x: a * sh, dx: a * w * ch * c.value, ddx: a * w * w * (sh * c.value * c.value + ch * c.derivative) })
    }

    fn initial_state(&self, spec: &SolutionSpec, ev: &LeafEvaluator) -> Result<(f64, f64)> {
        let clh = ev.clh2_closed_form(spec.phi)?;
        let c = ev.value(LeafKind::Cleafh, Basis::TWO, spec.phi)?;
        Ok((spec.a * clh.sinh(), spec.a * clh.cosh() * spec.omega * c))
    }
}

/// x = A cos(SL₂(u)) − A sin(SL₂(u)) + √2 A cosh(CLH₂(u)), u = ωt+φ.
pub struct TypeX;

impl ExactSolution for TypeX {
    fn tag(&self) -> SolutionType {
        SolutionType::X
    }

    fn coefficients(&self, spec: &SolutionSpec) -> Result<DuffingCoefficients> {
        let w = spec.omega;
        Ok(DuffingCoefficients {
            delta: 0.0,
            alpha: 3.0 * w * w * (1.0 + 2.0 * SQRT_2),
            beta: -2.0 * (w / spec.a).powi(2),
            forcing: 0.0,
        })
    }

    fn domain(&self, spec: &SolutionSpec, consts: &LeafConstants) -> Result<Domain> {
        Ok(phase_domain(spec, consts))
    }

    fn jet(&self, spec: &SolutionSpec, t: f64, ev: &LeafEvaluator) -> Result<Jet> {
        let (a, w) = (spec.a, spec.omega);
        let u = w * t + spec.phi;
        let c = cleafh(ev, u)?;
        let s = sleaf(ev, u)?;
        let (ch, sh) = (c.integral.cosh(), c.integral.sinh());
        let (sn, cs) = s.integral.sin_cos();
        Ok(Jet {
            x: a * (cs - sn) + SQRT_2 * a * ch,
            dx: a * w * (-(sn + cs) * s.value + SQRT_2 * sh * c.value),
            ddx: a
                * w
                * w
                * ((sn - cs) * s.value * s.value - (sn + cs) * s.derivative
                    + SQRT_2 * (ch * c.value * c.value + sh * c.derivative)),
        })
    }

    fn initial_state(&self, spec: &SolutionSpec, ev: &LeafEvaluator) -> Result<(f64, f64)> {
        let (a, w, phi) = (spec.a, spec.omega, spec.phi);
        let sl = ev.leaf_integral(crate::IntegralKind::SL2, phi)?;
        let clh = ev.clh2_closed_form(phi)?;
        let s = ev.value(LeafKind::Sleaf, Basis::TWO, phi)?;
        let c = ev.value(LeafKind::Cleafh, Basis::TWO, phi)?;
        let x0 = SQRT_2 * a * ((sl + FRAC_PI_4).cos() + clh.cosh());
        let v0 = -a * sl.sin() * w * s - a * sl.cos() * w * s + SQRT_2 * a * clh.sinh() * w * c;
        Ok((x0, v0))
    }
}
