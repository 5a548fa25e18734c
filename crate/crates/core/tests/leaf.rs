mod common;

use leafwave::{constants, eval_leaf, eval_leaf_derivative, evaluator, pole_of, Basis, Error, EvalConfig, LeafKind};

type Reference = fn(f64) -> f64;
type Oracle = fn(f64) -> (f64, f64);

fn cfg() -> EvalConfig {
    EvalConfig::default()
}

fn grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

fn basis(n: i64) -> Basis {
    Basis::new(n).unwrap()
}

#[test]
fn examples() {
    let c = cfg();
    let sleafh = |t| eval_leaf(LeafKind::Sleafh, Basis::TWO, t, &c).unwrap();
    assert!((sleafh(0.5) - 0.503141363).abs() < 1e-9);
    assert!((sleafh(1.8) - 18.49292858).abs() < 1e-7);
    assert_eq!(eval_leaf(LeafKind::Cleafh, Basis::TWO, 0.0, &c).unwrap(), 1.0);
    let half_pi2 = 0.5 * constants(&c).unwrap().pi2;
    assert!((eval_leaf(LeafKind::Sleaf, Basis::TWO, half_pi2, &c).unwrap() - 1.0).abs() < 1e-10);
    assert!((eval_leaf(LeafKind::Sleaf, Basis::ONE, 1.0, &c).unwrap() - 1f64.sin()).abs() < 1e-10);

    assert!((eval_leaf_derivative(LeafKind::Sleaf, Basis::TWO, 0.0, &c).unwrap() - 1.0).abs() < 1e-12);
    assert_eq!(eval_leaf_derivative(LeafKind::Cleafh, Basis::TWO, 0.0, &c).unwrap(), 0.0);
    let d = eval_leaf_derivative(LeafKind::Sleafh, Basis::TWO, 0.5, &c).unwrap();
    assert!((d - (1.0 + 0.503141363f64.powi(4)).sqrt()).abs() < 1e-8);
}

#[test]
fn constants_match_oracle() {
    let k = constants(&cfg()).unwrap();
    assert!((k.zeta2 - common::zeta()).abs() < 1e-12);
    assert!((k.eta2 - common::quarter()).abs() < 1e-12);
    assert!((k.pi2 - std::f64::consts::PI / common::agm(1.0, 2f64.sqrt())).abs() < 1e-12);
    assert_eq!(k.pi2, 2.0 * k.eta2);
}

#[test]
fn poles() {
    let c = cfg();
    let k = constants(&c).unwrap();
    let p = pole_of(LeafKind::Sleafh, Basis::TWO, &c).unwrap().unwrap();
    assert_eq!((p.abscissa, p.approximate), (k.zeta2, false));
    assert_eq!(pole_of(LeafKind::Cleafh, Basis::TWO, &c).unwrap().unwrap().abscissa, k.eta2);
    assert_eq!(pole_of(LeafKind::Cleaf, Basis::TWO, &c).unwrap(), None);
    assert_eq!(pole_of(LeafKind::Sleafh, Basis::ONE, &c).unwrap(), None);
    assert!(pole_of(LeafKind::Sleafh, basis(3), &c).unwrap().unwrap().approximate);
}

#[test]
fn errors() {
    let c = cfg();
    assert_eq!(Basis::new(0), Err(Error::InvalidBasis(0)));
    let zeta = constants(&c).unwrap().zeta2;
    assert!(matches!(eval_leaf(LeafKind::Sleafh, Basis::TWO, zeta - 1e-4, &c), Err(Error::PoleProximity { .. })));
    assert!(matches!(eval_leaf(LeafKind::Sleafh, Basis::TWO, 1.9, &c), Err(Error::DomainExceeded { .. })));
    assert!(matches!(eval_leaf(LeafKind::Cleafh, Basis::TWO, -1.4, &c), Err(Error::DomainExceeded { .. })));
    let bad = EvalConfig { pole_guard: 0.0, ..c };
    assert!(matches!(eval_leaf(LeafKind::Sleaf, Basis::TWO, 0.1, &bad), Err(Error::InvalidConfig(_))));
}

#[test]
fn parity() {
    let ev = evaluator(&cfg()).unwrap();
    let tol = 10.0 * cfg().abs_tol;
    for n in [basis(1), Basis::TWO, basis(3)] {
        for kind in LeafKind::ALL {
            let reach = match ev.pole(kind, n).unwrap() {
                Some(p) => p.abscissa - 0.1,
                None => 5.0,
            };
            for t in grid(0.0, reach, 40) {
                let (a, b) = (ev.value(kind, n, t).unwrap(), ev.value(kind, n, -t).unwrap());
                let want = if kind.is_odd() { -a } else { a };
                assert!((b - want).abs() <= tol * (1.0 + a.abs()), "{kind:?} n={} t={t}: {a} vs {b}", n.get());
            }
        }
    }
}

#[test]
fn ode_residual_by_central_differences() {
    let ev = evaluator(&cfg()).unwrap();
    let h = 1e-4;
    for n in [basis(1), Basis::TWO, basis(3)] {
        let p = (2 * n.get() - 1) as i32;
        for kind in LeafKind::ALL {
            let sign = if kind.is_hyperbolic() { 1.0 } else { -1.0 };
            let reach = match ev.pole(kind, n).unwrap() {
                Some(p) => 0.6 * p.abscissa,
                None => 4.0,
            };
            for t in grid(-reach, reach, 31) {
                let x = |s: f64| ev.value(kind, n, s).unwrap();
                let ddx = (x(t + h) - 2.0 * x(t) + x(t - h)) / (h * h);
                let r = ddx - sign * f64::from(n.get()) * x(t).powi(p);
                assert!(r.abs() < 1e-5, "{kind:?} n={} t={t}: residual {r}", n.get());
            }
        }
    }
}

#[test]
fn first_integrals() {
    let ev = evaluator(&cfg()).unwrap();
    let tol = 10.0 * cfg().rel_tol;
    let k = ev.constants();
    for kind in LeafKind::ALL {
        let reach =
            if kind.is_hyperbolic() { ev.pole(kind, Basis::TWO).unwrap().unwrap().abscissa - 0.05 } else { 8.0 };
        for t in grid(-reach, reach, 60) {
            let x = ev.value(kind, Basis::TWO, t).unwrap();
            let d = ev.derivative(kind, Basis::TWO, t).unwrap();
            let x4 = x.powi(4);
            let rhs = match kind {
                LeafKind::Sleaf | LeafKind::Cleaf => 1.0 - x4,
                LeafKind::Sleafh => 1.0 + x4,
                LeafKind::Cleafh => x4 - 1.0,
            };
            let scale = 1.0 + x4;
            assert!((d * d - rhs).abs() <= tol * scale, "{kind:?} t={t}: {} vs {rhs}", d * d);
        }
    }
    assert!(k.zeta2 > k.eta2);
}

#[test]
fn basis_one_is_trigonometric() {
    let ev = evaluator(&cfg()).unwrap();
    let c = cfg();
    let classic: [(LeafKind, Reference); 4] = [
        (LeafKind::Sleaf, f64::sin),
        (LeafKind::Cleaf, f64::cos),
        (LeafKind::Sleafh, f64::sinh),
        (LeafKind::Cleafh, f64::cosh),
    ];
    for (kind, f) in classic {
        for t in grid(-3.0, 3.0, 61) {
            let x = ev.value(kind, Basis::ONE, t).unwrap();
            let want = f(t);
            assert!((x - want).abs() <= c.abs_tol.max(c.rel_tol * want.abs()), "{kind:?} t={t}: {x} vs {want}");
        }
    }
}

#[test]
fn periodicity() {
    let ev = evaluator(&cfg()).unwrap();
    let pi2 = ev.constants().pi2;
    for t in grid(-3.0, 3.0, 25) {
        for kind in [LeafKind::Sleaf, LeafKind::Cleaf] {
            let a = ev.value(kind, Basis::TWO, t).unwrap();
            let b = ev.value(kind, Basis::TWO, t + 2.0 * pi2).unwrap();
            assert!((a - b).abs() < 1e-10, "{kind:?} t={t}");
        }
    }
    for k in 1..=6 {
        let k = f64::from(k);
        let s = |t| ev.value(LeafKind::Sleaf, Basis::TWO, t).unwrap();
        let c = |t| ev.value(LeafKind::Cleaf, Basis::TWO, t).unwrap();
        assert!((s((4.0 * k - 3.0) * pi2 / 2.0) - 1.0).abs() < 1e-10);
        assert!((s((4.0 * k - 1.0) * pi2 / 2.0) + 1.0).abs() < 1e-10);
        assert!((c(2.0 * k * pi2) - 1.0).abs() < 1e-10);
        assert!((c((2.0 * k - 1.0) * pi2) + 1.0).abs() < 1e-10);
    }
}

#[test]
fn matches_integral_inversion() {
    let ev = evaluator(&cfg()).unwrap();
    let k = *ev.constants();
    let cases: [(LeafKind, f64, Oracle); 4] = [
        (LeafKind::Sleafh, k.zeta2 - 0.05, common::sleafh),
        (LeafKind::Cleafh, k.eta2 - 0.05, common::cleafh),
        (LeafKind::Sleaf, 2.0 * k.pi2, common::sleaf),
        (LeafKind::Cleaf, 2.0 * k.pi2, common::cleaf),
    ];
    for (kind, reach, oracle) in cases {
        for t in grid(0.0, reach, 30) {
            let (x, d) = oracle(t);
            let got = ev.value(kind, Basis::TWO, t).unwrap();
            let slope = ev.derivative(kind, Basis::TWO, t).unwrap();
            let scale = 1.0f64.max(x.abs());
            assert!((got - x).abs() <= 1e-8 * scale, "{kind:?} t={t}: {got} vs {x}");
            assert!((slope - d).abs() <= 1e-8 * scale * scale, "{kind:?}' t={t}: {slope} vs {d}");
        }
    }
}

#[test]
fn shared_evaluator_is_reused() {
    let a = evaluator(&cfg()).unwrap();
    let b = evaluator(&cfg()).unwrap();
    assert!(std::sync::Arc::ptr_eq(&a, &b));
    let handles: Vec<_> = (0..4)
        .map(|i| {
            let ev = a.clone();
            std::thread::spawn(move || ev.value(LeafKind::Sleafh, Basis::TWO, 0.3 * f64::from(i)).unwrap())
        })
        .collect();
    for (i, h) in handles.into_iter().enumerate() {
        let want = a.value(LeafKind::Sleafh, Basis::TWO, 0.3 * i as f64).unwrap();
        assert_eq!(h.join().unwrap(), want);
    }
}
