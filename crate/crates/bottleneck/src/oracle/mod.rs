//! Brute-force reference implementations for tests and cross-checks.
//!
//! Everything here is deliberately simple and structurally unrelated to the
//! solvers: subset enumeration instead of greedy removal, gift wrapping
//! instead of monotone chains, threshold searches instead of decremental
//! sweeps. Budgets are hard limits.

mod curves;
mod cycles;
mod geometry;
mod subset;

pub use curves::{curve_oracle, CurveOracleResult};
pub use cycles::{
    directed_cycle_oracle, mixed_cycle_oracle, regular_cycle_oracle, undirected_cycle_oracle,
};
pub use geometry::{
    gift_wrap_hull, girard_vertex_solid_angle, min_interior_angle, polygon_subset_oracle,
    polyhedron_subset_oracle,
};
pub use subset::bottleneck_subset_oracle;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance size {0} exceeds the oracle budget of {1}")]
    BudgetExceeded(usize, usize),
}
