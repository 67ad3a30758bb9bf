//! The categorical cover `W_i = {x : |A_x| = i}` and its contraction.
//!
//! Every configuration is carried to the fixed [`canonical_base`] by a path
//! that depends continuously on `x` within each stratum: stack onto a vertical
//! line, spread the stack to heights `0, 1, .., k - 1`, slide the line to
//! abscissa 1, then move the points one at a time onto the base line at
//! abscissa 0.

use serde::Serialize;

use crate::config_space::{level_count, sort_permutation, Configuration};
use crate::error::{Error, Result};
use crate::path::PiecewisePath;
use crate::planner::{approach_path, p_line, transfer_path, StackStrategy, TransferMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct CoverIndex(usize);

impl CoverIndex {
    pub fn get(self) -> usize {
        self.0
    }
}

pub fn cover_index(x: &Configuration) -> CoverIndex {
    CoverIndex(level_count(x))
}

/// `k` points on the last axis at heights `0, 1, .., k - 1`.
pub fn canonical_base(dim: usize, k: usize) -> Result<Configuration> {
    if dim < 2 || k < 1 {
        return Err(Error::Argument(format!(
            "canonical base needs dim >= 2 and k >= 1, got dim = {dim}, k = {k}"
        )));
    }
    let mut coords = vec![0.0; dim * k];
    for l in 0..k {
        coords[l * dim + dim - 1] = l as f64;
    }
    Configuration::from_flat(dim, coords)
}

fn on_line(heights: &[f64], dim: usize, abscissa: f64) -> Result<Configuration> {
    let mut coords = vec![0.0; dim * heights.len()];
    for (l, h) in heights.iter().enumerate() {
        coords[l * dim] = abscissa;
        coords[l * dim + dim - 1] = *h;
    }
    Configuration::from_flat(dim, coords)
}

pub fn contraction_path(x: &Configuration) -> Result<PiecewisePath> {
    contraction_path_with(x, StackStrategy::default_for(x.dim()))
}

pub fn contraction_path_with(x: &Configuration, strategy: StackStrategy) -> Result<PiecewisePath> {
    let (n, k) = (x.dim(), x.len());
    let abscissa = p_line(x, x)? + 1.0;
    let approach = approach_path(x, abscissa, strategy)?;
    let stacked = approach.end();

    let mut heights = vec![0.0; k];
    for (rank, &label) in sort_permutation(stacked).as_slice().iter().enumerate() {
        heights[label] = rank as f64;
    }
    let spread = PiecewisePath::segment(stacked.clone(), on_line(&heights, n, abscissa)?)?;
    let slide = PiecewisePath::segment(spread.end().clone(), on_line(&heights, n, 1.0)?)?;
    let reorder = transfer_path(
        slide.end(),
        &canonical_base(n, k)?,
        TransferMode::Sequential,
    )?;
    PiecewisePath::concat(&[&approach, &spread, &slide, &reorder])
}
