//! Types XI–XIV: x = A e^{ωt} f(B e^{ωt} + φ) with f one of sleafh₂,
//! cleafh₂ (divergent, XI/XII) or sleaf₂, cleaf₂ (damped, XIII/XIV).

use super::{Domain, DuffingCoefficients, ExactSolution, Interval, Jet, SolutionSpec, SolutionType};
use crate::error::{Error, Result};
use crate::leaf::{Basis, LeafConstants, LeafEvaluator, LeafKind};

pub struct Modulated {
    tag: SolutionType,
    leaf: LeafKind,
}

impl Modulated {
    pub fn new(tag: SolutionType) -> Self {
        let leaf = match tag {
            SolutionType::XI => LeafKind::Sleafh,
            SolutionType::XII => LeafKind::Cleafh,
            SolutionType::XIII => LeafKind::Sleaf,
            SolutionType::XIV => LeafKind::Cleaf,
            other => panic!("type {other} is not exponentially modulated"),
        };
        Modulated { tag, leaf }
    }

    /// Sign s in f'' = 2s f³.
    fn curvature_sign(&self) -> f64 {
        if self.leaf.is_hyperbolic() {
            1.0
        } else {
            -1.0
        }
    }

    /// |f'| from the first integral of the n = 2 equation.
    fn radical(&self, f: f64) -> f64 {
        let f4 = f.powi(4);
        match self.leaf {
            LeafKind::Sleafh => (1.0 + f4).sqrt(),
            LeafKind::Cleafh => (f4 - 1.0).max(0.0).sqrt(),
            LeafKind::Sleaf | LeafKind::Cleaf => (1.0 - f4).max(0.0).sqrt(),
        }
    }
}

impl ExactSolution for Modulated {
    fn tag(&self) -> SolutionType {
        self.tag
    }

    fn coefficients(&self, spec: &SolutionSpec) -> Result<DuffingCoefficients> {
        let b = spec.b_or_missing()?;
        let w = spec.omega;
        Ok(DuffingCoefficients {
            delta: -3.0 * w,
            alpha: 2.0 * w * w,
            beta: -2.0 * self.curvature_sign() * (b * w / spec.a).powi(2),
            forcing: 0.0,
        })
    }

    fn domain(&self, spec: &SolutionSpec, consts: &LeafConstants) -> Result<Domain> {
        let b = spec.b_or_missing()?;
        let pole = match self.leaf {
            LeafKind::Sleafh => consts.zeta2,
            LeafKind::Cleafh => consts.eta2,
            _ => return Ok(Domain::real_line()),
        };
        // −P < B·E + φ < P with E = e^{ωt} > 0.
        let e1 = (-pole - spec.phi) / b;
        let e2 = (pole - spec.phi) / b;
        let (lo, hi) = (e1.min(e2).max(0.0), e1.max(e2));
        if hi <= lo {
            return Ok(Domain { intervals: Vec::new(), poles: Vec::new() });
        }
        let w = spec.omega;
        let (t1, t2) = (lo.ln() / w, hi.ln() / w);
        Ok(Domain::with_pole_ends(vec![Interval { lo: t1.min(t2), hi: t1.max(t2) }]))
    }

    fn jet(&self, spec: &SolutionSpec, t: f64, ev: &LeafEvaluator) -> Result<Jet> {
        let b = spec.b_or_missing()?;
        let (a, w) = (spec.a, spec.omega);
        let e = (w * t).exp();
        let f = ev.state(self.leaf, Basis::TWO, b * e + spec.phi)?;
        let f2 = 2.0 * self.curvature_sign() * f.value.powi(3);
        Ok(Jet {
            x: a * e * f.value,
            dx: a * w * e * (f.value + b * e * f.derivative),
            ddx: a * w * w * e * (f.value + 3.0 * b * e * f.derivative + b * b * e * e * f2),
        })
    }

    fn initial_state(&self, spec: &SolutionSpec, ev: &LeafEvaluator) -> Result<(f64, f64)> {
        let b = spec.b_or_missing()?;
        let (a, w) = (spec.a, spec.omega);
        let f = ev.state(self.leaf, Basis::TWO, b + spec.phi)?;
        if !f.value.is_finite() {
            return Err(Error::IntegrationFailure(format!("non-finite leaf value at {}", b + spec.phi)));
        }
        // The printed velocity uses a bare radical; its sign follows the
        // direction the leaf function is travelling at B + φ.
        let slope = self.radical(f.value).copysign(f.derivative);
        Ok((a * f.value, a * w * f.value + a * b * w * slope))
    }
}
