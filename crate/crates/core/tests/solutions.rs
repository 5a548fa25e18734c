mod common;

use leafwave::analysis::{interior_grid, parameter_sweep};
use leafwave::{
    coefficients, derivative, domain, evaluate, evaluator, initial_state, registry, second_derivative, Basis, Error,
    EvalConfig, LeafEvaluator, LeafKind, SolutionSpec, SolutionType,
};
use std::sync::Arc;

use SolutionType::*;

fn cfg() -> EvalConfig {
    EvalConfig::default()
}

fn ev() -> Arc<LeafEvaluator> {
    evaluator(&cfg()).unwrap()
}

fn spec(kind: SolutionType, a: f64, omega: f64, phi: f64, b: Option<f64>) -> SolutionSpec {
    SolutionSpec::new(kind, a, omega, phi, b)
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * (1.0 + b.abs())
}

#[test]
fn examples() {
    let c = cfg();
    let cases = [
        (spec(VIII, 1.0, 1.0, 0.0, None), 0.5, 1.152322184),
        (spec(IX, 1.0, 1.0, 0.0, None), 0.0, 0.0),
        (spec(X, 1.0, 1.0, 0.0, None), 0.0, 1.0 + 2f64.sqrt()),
        (spec(XI, 1.0, 1.0, -1.0, Some(1.0)), 0.0, 0.0),
        (spec(XIII, 1.0, 1.0, -1.0, Some(1.0)), 1.0, 2.301435961),
        (spec(XIV, 1.0, 1.0, -1.0, Some(1.0)), 1.0, -1.103990273),
    ];
    for (s, t, want) in cases {
        let got = evaluate(&s, t, &c).unwrap();
        assert!(close(got, want, 1e-6), "{} t={t}: {got} vs {want}", s.kind);
    }
    assert_eq!(derivative(&spec(VIII, 1.0, 1.0, 0.0, None), 0.0, &c).unwrap(), 0.0);
    assert!(close(derivative(&spec(XI, 1.0, 1.0, -1.0, Some(1.0)), 0.0, &c).unwrap(), 1.0, 1e-10));
    assert!(derivative(&spec(X, 1.0, 1.0, 0.0, None), 0.0, &c).unwrap().abs() < 1e-12);
    assert!(close(second_derivative(&spec(VIII, 1.0, 1.0, 0.0, None), 0.0, &c).unwrap(), 1.0, 1e-10));
    assert!(close(second_derivative(&spec(XI, 1.0, 1.0, -1.0, Some(1.0)), 0.0, &c).unwrap(), 3.0, 1e-9));
    assert!(close(second_derivative(&spec(X, 1.0, 1.0, 0.0, None), 0.0, &c).unwrap(), 2f64.sqrt() - 1.0, 1e-10));
}

#[test]
fn coefficient_examples_and_signs() {
    let c = coefficients(&spec(VIII, 1.0, 1.0, 0.0, None)).unwrap();
    assert_eq!((c.delta, c.alpha, c.beta, c.forcing), (0.0, 3.0, -4.0, 0.0));
    let c = coefficients(&spec(XIII, 1.0, 1.0, 0.0, Some(1.0))).unwrap();
    assert_eq!((c.delta, c.alpha, c.beta), (-3.0, 2.0, 2.0));
    let c = coefficients(&spec(XI, 2.0, 1.0, 0.0, Some(1.0))).unwrap();
    assert_eq!((c.delta, c.alpha, c.beta), (-3.0, 2.0, -0.5));

    for kind in SolutionType::ALL {
        for s in parameter_sweep(kind) {
            let c = coefficients(&s).unwrap();
            assert_eq!(c.forcing, 0.0);
            if kind.uses_b() {
                assert_eq!(c.delta, -3.0 * s.omega);
            } else {
                assert_eq!(c.delta, 0.0);
            }
            if kind >= XIII {
                assert!(c.beta > 0.0, "{kind}");
            } else {
                assert!(c.beta < 0.0, "{kind}");
            }
        }
    }
}

#[test]
fn spec_validation() {
    let c = cfg();
    assert!(matches!(evaluate(&spec(XI, 1.0, 1.0, 0.0, None), 0.0, &c), Err(Error::MissingB("XI"))));
    assert!(matches!(coefficients(&spec(XIV, 1.0, 1.0, 0.0, None)), Err(Error::MissingB(_))));
    assert!(matches!(evaluate(&spec(VIII, 0.0, 1.0, 0.0, None), 0.0, &c), Err(Error::InvalidSpec(_))));
    assert!(matches!(evaluate(&spec(VIII, 1.0, 0.0, 0.0, None), 0.0, &c), Err(Error::InvalidSpec(_))));
    assert!(matches!(evaluate(&spec(XII, 1.0, 1.0, 0.0, Some(0.0)), 0.0, &c), Err(Error::InvalidSpec(_))));
    assert!(matches!(evaluate(&spec(IX, 1.0, 1.0, 0.0, Some(1.0)), 0.0, &c), Err(Error::InvalidSpec(_))));
}

#[test]
fn initial_state_examples() {
    let c = cfg();
    assert_eq!(initial_state(&spec(VIII, 1.0, 1.0, 0.0, None), &c).unwrap(), (1.0, 0.0));
    let (x0, v0) = initial_state(&spec(XII, 1.0, 1.0, -1.0, Some(1.0)), &c).unwrap();
    assert!(close(x0, 1.0, 1e-12) && close(v0, 1.0, 1e-12));
    let (x0, v0) = initial_state(&spec(XIII, 1.0, 1.0, -1.0, Some(1.0)), &c).unwrap();
    assert!(x0.abs() < 1e-12 && close(v0, 1.0, 1e-12));
    // B + φ past the pole puts t = 0 outside the domain.
    assert!(matches!(initial_state(&spec(XI, 1.0, 1.0, 1.0, Some(1.0)), &c), Err(Error::OutsideDomain { .. })));
}

#[test]
fn initial_state_matches_evaluation() {
    let ev = ev();
    let tol = 10.0 * cfg().rel_tol;
    for kind in SolutionType::ALL {
        for s in parameter_sweep(kind) {
            let Ok((x0, v0)) = ev.solution_initial_state(&s) else {
                assert!(!ev.solution_domain(&s).unwrap().contains(0.0));
                continue;
            };
            let j = ev.solution_jet(&s, 0.0).unwrap();
            assert!(close(x0, j.x, tol) && close(v0, j.dx, tol), "{s:?}: ({x0}, {v0}) vs ({}, {})", j.x, j.dx);
        }
    }
}

#[test]
fn jets_match_oracle() {
    let ev = ev();
    for kind in SolutionType::ALL {
        for s in parameter_sweep(kind) {
            let d = ev.solution_domain(&s).unwrap();
            for t in interior_grid(&d, s.omega, 12).unwrap() {
                let j = ev.solution_jet(&s, t).unwrap();
                let (x, dx, ddx) = common::solution(kind, s.a, s.omega, s.phi, s.b.unwrap_or(0.0), t);
                let scale = 1.0 + x.abs() + dx.abs() + ddx.abs();
                for (got, want) in [(j.x, x), (j.dx, dx), (j.ddx, ddx)] {
                    assert!((got - want).abs() <= 1e-8 * scale, "{s:?} t={t}: {got} vs {want}");
                }
            }
        }
    }
}

#[test]
fn derivatives_match_central_differences() {
    let ev = ev();
    let h = 1e-5;
    for kind in SolutionType::ALL {
        for s in parameter_sweep(kind) {
            let d = ev.solution_domain(&s).unwrap();
            for t in interior_grid(&d, s.omega, 30).unwrap() {
                let jet = |u: f64| ev.solution_jet(&s, u).unwrap();
                let (lo, mid, hi) = (jet(t - h), jet(t), jet(t + h));
                let dx = (hi.x - lo.x) / (2.0 * h);
                let ddx = (hi.dx - lo.dx) / (2.0 * h);
                assert!(close(dx, mid.dx, 1e-5), "{s:?} t={t}: x' {dx} vs {}", mid.dx);
                assert!(close(ddx, mid.ddx, 1e-5), "{s:?} t={t}: x'' {ddx} vs {}", mid.ddx);
            }
        }
    }
}

#[test]
fn type_x_decomposes_into_radicals() {
    let ev = ev();
    let eta = ev.constants().eta2;
    for s in parameter_sweep(X) {
        let d = ev.solution_domain(&s).unwrap();
        for t in interior_grid(&d, s.omega, 25).unwrap() {
            let p = s.omega * t + s.phi;
            assert!(p.abs() < eta);
            let sl = ev.value(LeafKind::Sleaf, Basis::TWO, p).unwrap();
            let ch = ev.value(LeafKind::Cleafh, Basis::TWO, p).unwrap();
            // cos SL₂ − sin SL₂ stays positive for |p| < η₂, so the root is taken positive.
            let want = s.a * ((1.0 - sl * sl).sqrt() + (1.0 + ch * ch).sqrt());
            let got = ev.solution_jet(&s, t).unwrap().x;
            assert!(close(got, want, 1e-9), "{s:?} t={t}: {got} vs {want}");
        }
    }
}

#[test]
fn domain_examples() {
    let k = *ev().constants();
    let d = domain(&spec(VIII, 1.0, 1.0, 0.0, None)).unwrap();
    assert_eq!((d.intervals[0].lo, d.intervals[0].hi), (-k.eta2, k.eta2));
    let d = domain(&spec(IX, 1.0, -2.0, 0.5, None)).unwrap();
    assert!(close(d.intervals[0].lo, (0.5 - k.eta2) / 2.0, 1e-15));
    assert!(close(d.intervals[0].hi, (0.5 + k.eta2) / 2.0, 1e-15));
    let d = domain(&spec(XI, 1.0, 1.0, -1.0, Some(1.0))).unwrap();
    assert_eq!(d.intervals[0].lo, f64::NEG_INFINITY);
    assert!(close(d.intervals[0].hi, (k.zeta2 + 1.0).ln(), 1e-15));
    assert!((d.intervals[0].hi - 1.0487).abs() < 5e-5);
    let d = domain(&spec(XI, 1.0, 1.0, -2.0, Some(2.0))).unwrap();
    assert!((d.intervals[0].lo - -2.617).abs() < 1e-3 && (d.intervals[0].hi - 0.655).abs() < 1e-3);
    let d = domain(&spec(XII, 1.0, 1.0, -1.0, Some(1.0))).unwrap();
    assert!((d.intervals[0].hi - 0.837693).abs() < 5e-7);
    let d = domain(&spec(XII, 1.0, 1.0, -2.0, Some(2.0))).unwrap();
    assert!(close(d.intervals[0].lo, ((2.0 - k.eta2) / 2.0).ln(), 1e-14));
    assert!(close(d.intervals[0].hi, ((2.0 + k.eta2) / 2.0).ln(), 1e-14));
    let d = domain(&spec(XIII, 1.0, 1.0, 0.0, Some(7.0))).unwrap();
    assert_eq!(d.intervals.len(), 1);
    assert_eq!((d.intervals[0].lo, d.intervals[0].hi), (f64::NEG_INFINITY, f64::INFINITY));
    assert!(d.poles.is_empty());
}

#[test]
fn solutions_blow_up_at_domain_ends() {
    let ev = ev();
    let guard = ev.config().pole_guard;
    let specs = [
        spec(VIII, 1.0, 1.0, 0.0, None),
        spec(IX, -1.0, 1.3, 1.0, None),
        spec(X, 1.0, -1.0, 0.0, None),
        spec(XI, 1.0, 1.0, -1.0, Some(1.0)),
        spec(XI, 1.0, 1.0, -2.0, Some(2.0)),
        spec(XII, 1.0, 1.0, -1.0, Some(1.0)),
        spec(XII, -1.0, 1.0, -2.0, Some(2.0)),
    ];
    for s in specs {
        let d = ev.solution_domain(&s).unwrap();
        let iv = d.intervals[0];
        for (end, inward) in [(iv.lo, 1.0), (iv.hi, -1.0)] {
            if !end.is_finite() {
                continue;
            }
            let near = ev.solution_jet(&s, end + inward * 10.0 * guard).unwrap().x.abs();
            let farther = ev.solution_jet(&s, end + inward * 20.0 * guard).unwrap().x.abs();
            assert!(near > 20.0, "{s:?} at {end}: |x| = {near}");
            assert!(near > 1.5 * farther, "{s:?} at {end}: {near} vs {farther}");
            let outside = ev.solution_jet(&s, end - inward * 0.01);
            assert!(matches!(outside, Err(Error::OutsideDomain { .. })), "{s:?} just past {end}: {outside:?}");
        }
    }
}

#[test]
fn registry_covers_every_family() {
    let r = registry();
    assert_eq!(r.names(), vec!["VIII", "IX", "X", "XI", "XII", "XIII", "XIV"]);
    for kind in SolutionType::ALL {
        assert_eq!(r.get(kind).unwrap().tag(), kind);
    }
    assert_eq!(r.by_name("13").unwrap().tag(), XIII);
    assert!(matches!(r.by_name("XV"), Err(Error::UnknownId(_))));
}

#[test]
fn spec_serializes_flat() {
    let s = spec(XIII, 1.0, 1.0, -1.0, Some(1.0));
    let text = serde_json::to_string(&s).unwrap();
    assert_eq!(text, r#"{"type":"XIII","A":1.0,"omega":1.0,"phi":-1.0,"B":1.0}"#);
    assert_eq!(serde_json::from_str::<SolutionSpec>(&text).unwrap(), s);
    let plain: SolutionSpec = serde_json::from_str(r#"{"type":"VIII","A":2,"omega":1}"#).unwrap();
    assert_eq!(plain, spec(VIII, 2.0, 1.0, 0.0, None));
}
