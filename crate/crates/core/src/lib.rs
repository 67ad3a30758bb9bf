//! Explicit motion planning on Euclidean configuration spaces `F(R^n, k)`.
//!
//! The crate classifies configurations into strata by their level structure,
//! builds piecewise-linear collision-free plans with one continuous rule per
//! planning domain (`2k - 1` rules in total), verifies multi-point linear
//! motions exactly, computes retractions onto products of spheres and the
//! contraction paths of the level-count categorical cover.
//!
//! With the default `parallel` feature, batch work in [`par`] and [`batch`] is
//! spread over a rayon thread pool; without it the same functions run
//! sequentially.

pub mod batch;
pub mod collision;
pub mod complexity;
pub mod config_space;
mod error;
pub mod fixtures;
pub mod ls_cover;
pub mod par;
pub mod path;
pub mod planner;
pub mod retractions;
pub mod sampling;
pub mod svg;

pub use collision::{CollisionReport, Witness};
pub use config_space::{Configuration, LevelHeights, Partition, Permutation, StratumId};
pub use error::{Error, Result};
pub use path::{Breakpoint, PiecewisePath};
pub use planner::{PlanOptions, PlanResult, StackStrategy, TransferMode};
