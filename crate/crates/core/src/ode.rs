//! Dormand–Prince 5(4) integrator with re-stepping dense output.
//!
//! The integrator keeps every accepted node. A query between two nodes is
//! answered by one fresh Runge–Kutta step from the node on the left, which has
//! a local error no larger than the accepted step it subdivides.

use crate::error::{Error, Result};

const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;

const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;

const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;

// Fifth minus fourth order weights.
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

#[derive(Debug, Clone, Copy)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct Node<const N: usize> {
    pub t: f64,
    pub y: [f64; N],
}

fn axpy<const N: usize>(y: &[f64; N], h: f64, terms: &[(f64, &[f64; N])]) -> [f64; N] {
    let mut out = *y;
    for (i, o) in out.iter_mut().enumerate() {
        let mut acc = 0.0;
        for (c, k) in terms {
            acc += c * k[i];
        }
        *o += h * acc;
    }
    out
}

/// One Dormand–Prince step. Returns the fifth-order solution and the
/// embedded error vector.
pub fn step<const N: usize, F>(f: &F, t: f64, y: &[f64; N], h: f64) -> ([f64; N], [f64; N])
where
    F: Fn(f64, &[f64; N]) -> [f64; N],
{
    let k1 = f(t, y);
    let k2 = f(t + C2 * h, &axpy(y, h, &[(A21, &k1)]));
    let k3 = f(t + C3 * h, &axpy(y, h, &[(A31, &k1), (A32, &k2)]));
    let k4 = f(t + C4 * h, &axpy(y, h, &[(A41, &k1), (A42, &k2), (A43, &k3)]));
    let k5 = f(t + C5 * h, &axpy(y, h, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)]));
    let k6 = f(t + h, &axpy(y, h, &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)]));
    let y5 = axpy(y, h, &[(B1, &k1), (B3, &k3), (B4, &k4), (B5, &k5), (B6, &k6)]);
    let k7 = f(t + h, &y5);
    let mut err = [0.0; N];
    for i in 0..N {
        err[i] = h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
    }
    (y5, err)
}

fn error_norm<const N: usize>(y: &[f64; N], y_new: &[f64; N], err: &[f64; N], tol: Tolerance) -> f64 {
    let mut sum = 0.0;
    for i in 0..N {
        let scale = tol.abs + tol.rel * y[i].abs().max(y_new[i].abs());
        sum += (err[i] / scale).powi(2);
    }
    (sum / N as f64).sqrt()
}

/// Accepted nodes of one forward integration.
#[derive(Debug, Clone)]
pub struct Path<const N: usize> {
    nodes: Vec<Node<N>>,
}

impl<const N: usize> Path<N> {
    pub fn first(&self) -> &Node<N> {
        &self.nodes[0]
    }

    pub fn last(&self) -> &Node<N> {
        &self.nodes[self.nodes.len() - 1]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn covers(&self, t: f64) -> bool {
        t >= self.first().t && t <= self.last().t
    }

    /// State at `t`, re-stepping from the nearest node at or before `t`.
    pub fn at<F>(&self, f: &F, t: f64) -> [f64; N]
    where
        F: Fn(f64, &[f64; N]) -> [f64; N],
    {
        let i = self.nodes.partition_point(|n| n.t <= t).saturating_sub(1);
        let node = &self.nodes[i];
        let h = t - node.t;
        if h == 0.0 {
            return node.y;
        }
        step(f, node.t, &node.y, h).0
    }
}

/// Integrates forward from `t0` until `t_end` or until `stop` returns true on
/// an accepted state, whichever comes first.
pub fn integrate<const N: usize, F, S>(
    f: &F,
    t0: f64,
    y0: [f64; N],
    t_end: f64,
    tol: Tolerance,
    stop: S,
    max_steps: usize,
) -> Result<Path<N>>
where
    F: Fn(f64, &[f64; N]) -> [f64; N],
    S: Fn(f64, &[f64; N]) -> bool,
{
    let mut nodes = vec![Node { t: t0, y: y0 }];
    let mut t = t0;
    let mut y = y0;
    let mut h = ((t_end - t0) * 1e-3).min(1e-3);
    let mut steps = 0;
    while t < t_end && !stop(t, &y) {
        steps += 1;
        if steps > max_steps {
            return Err(Error::IntegrationFailure(format!("step limit {max_steps} reached at t = {t}")));
        }
        let last = t + h >= t_end;
        if last {
            h = t_end - t;
        }
        let (y_new, err) = step(f, t, &y, h);
        let norm = error_norm(&y, &y_new, &err, tol);
        if norm.is_finite() && norm <= 1.0 {
            t = if last { t_end } else { t + h };
            y = y_new;
            nodes.push(Node { t, y });
        }
        let factor = if norm == 0.0 {
            5.0
        } else if norm.is_finite() {
            (0.9 * norm.powf(-0.2)).clamp(0.2, 5.0)
        } else {
            0.1
        };
        h *= factor;
        if h < 1e-15 * (1.0 + t.abs()) && t < t_end {
            return Err(Error::IntegrationFailure(format!("step size underflow at t = {t}")));
        }
    }
    Ok(Path { nodes })
}
