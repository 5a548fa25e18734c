//! Periods and extrema of the damped solutions, identity checks and Duffing
//! residual sweeps.

mod extrema;
mod identities;
mod periods;
mod residual;

pub(crate) use extrema::bracketed_root;
pub use extrema::{extrema, Convexity, ExtremumRecord};
pub use identities::{verify_identities, IdentityCheck, IdentityId, IdentityReport};
pub use periods::{periods, PeriodRecord};
pub use residual::{interior_grid, parameter_sweep, residual_sweep, ResidualReport};
