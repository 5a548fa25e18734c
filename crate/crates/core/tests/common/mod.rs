//! Reference values that share no code with the library: the n = 2 leaf
//! functions by inverting their incomplete integrals (Gauss–Legendre
//! quadrature plus bisection), and the solution families built on top.
#![allow(dead_code)]

use std::f64::consts::PI;
use std::sync::OnceLock;

use leafwave::SolutionType;

const ORDER: usize = 20;
const PANELS: usize = 8;

fn legendre_rule() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = ORDER;
        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        for i in 0..n {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            nodes.push(x);
            weights.push(2.0 / ((1.0 - x * x) * dp * dp));
        }
        (nodes, weights)
    })
}

/// Composite Gauss–Legendre quadrature of a smooth integrand.
pub fn quad(f: impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    let (nodes, weights) = legendre_rule();
    let h = (b - a) / PANELS as f64;
    let mut sum = 0.0;
    for p in 0..PANELS {
        let mid = a + h * (p as f64 + 0.5);
        for (x, w) in nodes.iter().zip(weights) {
            sum += w * f(mid + 0.5 * h * x);
        }
    }
    0.5 * h * sum
}

/// Root of an increasing or decreasing `g - target` on [lo, hi].
fn bisect(g: impl Fn(f64) -> f64, target: f64, mut lo: f64, mut hi: f64) -> f64 {
    let rising = g(hi) > g(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if (g(mid) < target) == rising {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// ∫ 2 dv / √((2 − v²)(1 + (1 − v²)²)): the sleaf₂ first integral after u = 1 − v².
fn sleaf_integrand(v: f64) -> f64 {
    let u = 1.0 - v * v;
    2.0 / ((2.0 - v * v) * (1.0 + u * u)).sqrt()
}

fn sleafh_integrand(u: f64) -> f64 {
    1.0 / (1.0 + u.powi(4)).sqrt()
}

/// Time for sleaf₂ to climb from 1 − w² to 1.
fn time_to_peak(w: f64) -> f64 {
    quad(sleaf_integrand, 0.0, w)
}

/// π₂/2 = ∫₀¹ du/√(1 − u⁴).
pub fn quarter() -> f64 {
    static Q: OnceLock<f64> = OnceLock::new();
    *Q.get_or_init(|| quad(sleaf_integrand, 0.0, 1.0))
}

/// ζ₂ = 2∫₀¹ du/√(1 + u⁴), using the symmetry u → 1/u of the tail.
pub fn zeta() -> f64 {
    static Z: OnceLock<f64> = OnceLock::new();
    *Z.get_or_init(|| 2.0 * quad(sleafh_integrand, 0.0, 1.0))
}

pub fn pi2() -> f64 {
    2.0 * quarter()
}

/// sleaf₂ and its derivative on the rising quarter 0 ≤ τ ≤ π₂/2.
fn sleaf_rising(tau: f64) -> (f64, f64) {
    // tau = ∫₀^x du/√(1 − u⁴) = Q − ∫₀^w (...) dv with x = 1 − w².
    let q = quarter();
    let w = bisect(time_to_peak, q - tau, 0.0, 1.0);
    let x = 1.0 - w * w;
    (x, w * ((1.0 + x) * (1.0 + x * x)).sqrt())
}

/// sleaf₂(t) and its derivative.
pub fn sleaf(t: f64) -> (f64, f64) {
    let q = quarter();
    let period = 4.0 * q;
    let mut tau = t - period * (t / period).round();
    let sign = if tau < 0.0 { -1.0 } else { 1.0 };
    tau = tau.abs();
    let (x, d) = if tau <= q {
        sleaf_rising(tau)
    } else {
        let (x, d) = sleaf_rising(2.0 * q - tau);
        (x, -d)
    };
    (sign * x, d)
}

pub fn cleaf(t: f64) -> (f64, f64) {
    let (x, d) = sleaf(quarter() - t);
    (x, -d)
}

/// sleafh₂ for 0 ≤ t ≤ ζ₂/2, where the value stays below 1.
fn sleafh_small(t: f64) -> f64 {
    bisect(|x| quad(sleafh_integrand, 0.0, x), t, 0.0, 1.0)
}

/// sleafh₂(t) and its derivative, |t| < ζ₂.
pub fn sleafh(t: f64) -> (f64, f64) {
    let z = zeta();
    let a = t.abs();
    assert!(a < z, "sleafh oracle called at {t}, beyond the pole");
    // Past the midpoint use u → 1/u: sleafh₂(t) = 1/sleafh₂(ζ₂ − t).
    let x = if a <= 0.5 * z { sleafh_small(a) } else { 1.0 / sleafh_small(z - a) };
    (x.copysign(t), (1.0 + x.powi(4)).sqrt())
}

/// cleafh₂(t) = 1/sleaf₂(η₂ − |t|) and its derivative, |t| < η₂.
pub fn cleafh(t: f64) -> (f64, f64) {
    let q = quarter();
    let a = t.abs();
    assert!(a < q, "cleafh oracle called at {t}, beyond the pole");
    let (s, ds) = sleaf_rising(q - a);
    (1.0 / s, (ds / (s * s)).copysign(t))
}

/// SL₂(t) = ∫₀ᵗ sleaf₂, from sin 2SL₂ = s² and cos 2SL₂ = s'.
pub fn sl2(t: f64) -> f64 {
    let p = pi2();
    let mut tau = (t - 2.0 * p * (t / (2.0 * p)).round()).abs();
    if tau > p {
        tau = 2.0 * p - tau;
    }
    let (s, ds) = sleaf(tau);
    0.5 * (s * s).atan2(ds)
}

/// SLH₂(t) = ½ asinh(sleafh₂(t)²).
pub fn slh2(t: f64) -> f64 {
    0.5 * sleafh(t).0.powi(2).asinh()
}

/// CLH₂(t) = ½ acosh(cleafh₂(t)²), odd in t.
pub fn clh2(t: f64) -> f64 {
    let (c, dc) = cleafh(t);
    // acosh(c²) = ln(c² + √(c⁴ − 1)) and √(c⁴ − 1) = |c'|.
    (0.5 * (c * c + dc.abs()).ln()).copysign(t)
}

/// x, x' and x'' of a solution, by the chain rule on the oracle functions.
pub fn solution(kind: SolutionType, a: f64, omega: f64, phi: f64, b: f64, t: f64) -> (f64, f64, f64) {
    use SolutionType::*;
    let w = omega;
    let p = w * t + phi;
    match kind {
        VIII | IX => {
            let (c, dc) = cleafh(p);
            let g = clh2(p);
            let (ch, sh) = (g.cosh(), g.sinh());
            if kind == VIII {
                (a * ch, a * w * sh * c, a * w * w * (ch * c * c + sh * dc))
            } else {
                (a * sh, a * w * ch * c, a * w * w * (sh * c * c + ch * dc))
            }
        }
        X => {
            let (s, ds) = sleaf(p);
            let (c, dc) = cleafh(p);
            let (u, g) = (sl2(p), clh2(p));
            let root2 = 2f64.sqrt();
            let x = a * (u.cos() - u.sin()) + root2 * a * g.cosh();
            let dx = a * w * (-(u.sin() + u.cos()) * s + root2 * g.sinh() * c);
            let ddx = a
                * w
                * w
                * ((u.sin() - u.cos()) * s * s - (u.sin() + u.cos()) * ds + root2 * (g.cosh() * c * c + g.sinh() * dc));
            (x, dx, ddx)
        }
        XI | XII | XIII | XIV => {
            let e = (w * t).exp();
            let q = b * e + phi;
            let (f, df, curv) = match kind {
                XI => {
                    let (f, df) = sleafh(q);
                    (f, df, 2.0)
                }
                XII => {
                    let (f, df) = cleafh(q);
                    (f, df, 2.0)
                }
                XIII => {
                    let (f, df) = sleaf(q);
                    (f, df, -2.0)
                }
                _ => {
                    let (f, df) = cleaf(q);
                    (f, df, -2.0)
                }
            };
            let ddf = curv * f.powi(3);
            let x = a * e * f;
            let dx = a * w * e * (f + b * e * df);
            let ddx = a * w * w * e * (f + 3.0 * b * e * df + b * b * e * e * ddf);
            (x, dx, ddx)
        }
    }
}

/// Zero of x' for the canonical XIII/XIV spec near `t0`, by bisection.
pub fn extremum_near(kind: SolutionType, t0: f64) -> (f64, f64) {
    let b = quarter();
    let slope = |t: f64| solution(kind, 1.0, 1.0, 0.0, b, t).1;
    let (mut lo, mut hi) = (t0 - 0.02, t0 + 0.02);
    let rising = slope(lo) < 0.0;
    assert!((slope(lo) < 0.0) != (slope(hi) < 0.0), "no sign change of x' near {t0}");
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if (slope(mid) < 0.0) == rising {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let t = 0.5 * (lo + hi);
    (t, solution(kind, 1.0, 1.0, 0.0, b, t).0)
}

/// Arithmetic-geometric mean, for π₂ = π / agm(1, √2).
pub fn agm(mut a: f64, mut b: f64) -> f64 {
    for _ in 0..64 {
        let (m, g) = (0.5 * (a + b), (a * b).sqrt());
        a = m;
        b = g;
        if (a - b).abs() <= f64::EPSILON * a {
            break;
        }
    }
    0.5 * (a + b)
}

/// Ends of the interval containing t = 0 (or the first finite interval) on
/// which a solution stays finite, from |phase| < pole.
pub fn domain_ends(kind: SolutionType, omega: f64, phi: f64, b: f64) -> (f64, f64) {
    use SolutionType::*;
    let pole = match kind {
        VIII | IX | X | XII => quarter(),
        XI => zeta(),
        XIII | XIV => return (f64::NEG_INFINITY, f64::INFINITY),
    };
    let (lo, hi) = match kind {
        // |ωt + φ| < pole
        VIII | IX | X => ((-pole - phi) / omega, (pole - phi) / omega),
        // −pole < B e^{ωt} + φ < pole, with e^{ωt} > 0
        _ => {
            let to_t = |p: f64| {
                let e = (p - phi) / b;
                if e <= 0.0 {
                    if (b > 0.0) == (omega > 0.0) {
                        f64::NEG_INFINITY
                    } else {
                        f64::INFINITY
                    }
                } else {
                    e.ln() / omega
                }
            };
            (to_t(-pole), to_t(pole))
        }
    };
    (lo.min(hi), lo.max(hi))
}

/// Value of one column of a printed golden row, recomputed by the oracle.
/// Columns follow the printed tables: t, then x, x³, x'' for solutions.
pub fn solution_column(kind: SolutionType, a: f64, omega: f64, phi: f64, b: f64, t: f64, column: usize) -> f64 {
    let (x, _, ddx) = solution(kind, a, omega, phi, b, t);
    match column {
        1 => x,
        2 => x.powi(3),
        3 => ddx,
        _ => panic!("solution tables have three value columns, not {column}"),
    }
}

/// sleafh₂, cleafh₂ and their integrals, as in the first printed table.
pub fn leaf_column(t: f64, column: usize) -> f64 {
    match column {
        1 => sleafh(t).0,
        2 => cleafh(t).0,
        3 => slh2(t),
        4 => clh2(t),
        _ => panic!("leaf table has four value columns, not {column}"),
    }
}

/// One unit in the last printed place of a decimal string.
pub fn printed_ulp(s: &str) -> f64 {
    let decimals = s.split_once('.').map_or(0, |(_, frac)| frac.len());
    10f64.powi(-(decimals as i32))
}
