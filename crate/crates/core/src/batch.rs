//! Batch planning and verification over many inputs.

use crate::collision::{verify_path_with, CollisionReport, DEFAULT_EPS};
use crate::config_space::Configuration;
use crate::error::Result;
use crate::ls_cover::contraction_path;
use crate::par;
use crate::path::PiecewisePath;
use crate::planner::{plan_with, PlanOptions, PlanResult};

/// Result of planning one pair and checking the plan.
#[derive(Debug, Clone)]
pub struct CheckedPlan {
    pub plan: PlanResult,
    pub report: CollisionReport,
}

impl CheckedPlan {
    /// Collision-free with clearance above `margin` and with bitwise-exact
    /// endpoints.
    pub fn is_sound(&self, x: &Configuration, y: &Configuration, margin: f64) -> bool {
        !self.report.colliding
            && self.report.min_clearance > margin
            && self.plan.path.start().as_flat() == x.as_flat()
            && self.plan.path.end().as_flat() == y.as_flat()
    }
}

pub fn plan_and_verify(
    x: &Configuration,
    y: &Configuration,
    options: &PlanOptions,
    eps: f64,
) -> Result<CheckedPlan> {
    let plan = plan_with(x, y, options)?;
    let report = verify_path_with(&plan.path, eps)?;
    Ok(CheckedPlan { plan, report })
}

pub fn plan_and_verify_batch(
    pairs: &[(Configuration, Configuration)],
    options: &PlanOptions,
) -> Vec<Result<CheckedPlan>> {
    par::map(pairs, |(x, y)| plan_and_verify(x, y, options, DEFAULT_EPS))
}

pub fn plan_and_verify_batch_seq(
    pairs: &[(Configuration, Configuration)],
    options: &PlanOptions,
) -> Vec<Result<CheckedPlan>> {
    par::map_seq(pairs, |(x, y)| plan_and_verify(x, y, options, DEFAULT_EPS))
}

pub fn verify_batch(paths: &[PiecewisePath], eps: f64) -> Vec<Result<CollisionReport>> {
    par::map(paths, |p| verify_path_with(p, eps))
}

pub fn verify_batch_seq(paths: &[PiecewisePath], eps: f64) -> Vec<Result<CollisionReport>> {
    par::map_seq(paths, |p| verify_path_with(p, eps))
}

/// Contraction paths and their reports.
pub fn contract_and_verify_batch(
    configs: &[Configuration],
) -> Vec<Result<(PiecewisePath, CollisionReport)>> {
    par::map(configs, |x| {
        let path = contraction_path(x)?;
        let report = verify_path_with(&path, DEFAULT_EPS)?;
        Ok((path, report))
    })
}
