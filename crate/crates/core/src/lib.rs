pub mod analysis;
pub mod checks;
pub mod error;
pub mod figures;
pub mod format;
pub mod golden;
pub mod integrals;
pub mod leaf;
pub mod ode;
pub mod quadrature;
pub mod solutions;
pub mod tables;

pub use error::{Error, Result};
pub use integrals::{clh2_closed_form, eval_integral, IntegralKind};
pub use leaf::{
    constants, eval_leaf, eval_leaf_derivative, evaluator, parse_leaf_name, pole_of, Basis, EvalConfig, LeafConstants,
    LeafEvaluator, LeafKind, LeafState, Pole,
};
pub use solutions::{
    coefficients, derivative, domain, evaluate, initial_state, registry, second_derivative, Domain,
    DuffingCoefficients, ExactSolution, Interval, Jet, SolutionSpec, SolutionType,
};
