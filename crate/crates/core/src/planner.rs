//! The level-stacking motion planner.
//!
//! For a pair `(x, y)`, every point is first pushed along a straight line onto
//! a vertical line (parallel to the last axis) at abscissa `p(x, y) + 1`,
//! where `p` is the largest first coordinate among all `2k` points; each level
//! of `x` lands in its own height band below its original height. The same is
//! done for `y` on the line `p(x, y) + 2`. The two stacks are then joined by
//! moving one point at a time across the strip between the lines, and the
//! approach of `y` is run backwards. On each planning domain
//! `F_i = {|A_x| + |A_y| = i}` this rule depends continuously on `(x, y)`.

use serde::{Deserialize, Serialize};

use crate::config_space::{
    domain_index, levels_of, sort_permutation, stratum_of, Configuration, LevelHeights, Partition,
    Permutation, StratumId,
};
use crate::error::{Error, Result};
use crate::path::PiecewisePath;

/// How the points of a level are spread out on the target line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StackStrategy {
    /// The lowest level hangs below its height by each point's distance to the
    /// level's largest point; higher levels use [`Rank`](Self::Rank).
    Distance,
    /// Points are evenly spaced by rank between the midpoint to the level
    /// below and the level's own height. The lowest level uses a floor two
    /// units below it.
    Rank,
}

impl StackStrategy {
    /// `Distance` in the plane, `Rank` otherwise.
    pub fn default_for(dim: usize) -> Self {
        if dim == 2 {
            StackStrategy::Distance
        } else {
            StackStrategy::Rank
        }
    }
}

/// How the stacked configuration on the first line is carried to the second.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TransferMode {
    /// One point at a time, in the sorted order of the source stack.
    #[default]
    Sequential,
    /// All points at once. Collides whenever the two stacks order the labels
    /// differently.
    Simultaneous,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PlanOptions {
    /// `None` selects [`StackStrategy::default_for`] the ambient dimension.
    pub strategy: Option<StackStrategy>,
    pub transfer: TransferMode,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlanResult {
    pub path: PiecewisePath,
    pub domain: usize,
    pub strata: (StratumId, StratumId),
    pub line_abscissas: (f64, f64),
}

/// Largest first coordinate among the points of both configurations.
pub fn p_line(x: &Configuration, y: &Configuration) -> Result<f64> {
    x.check_compatible(y)?;
    Ok(x.points()
        .chain(y.points())
        .map(|p| p[0])
        .fold(f64::NEG_INFINITY, f64::max))
}

fn distance(p: &[f64], q: &[f64]) -> f64 {
    p.iter()
        .zip(q)
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt()
}

/// Target heights on the stacking line, indexed by label.
fn stack_heights(
    x: &Configuration,
    sigma: &Permutation,
    partition: &Partition,
    heights: &LevelHeights,
    strategy: StackStrategy,
) -> Vec<f64> {
    let h = heights.as_slice();
    let mut out = vec![0.0; x.len()];
    let mut start = 0;
    for (j, &size) in partition.parts().iter().enumerate() {
        let level = &sigma.as_slice()[start..start + size];
        let top = level[size - 1];
        for (m, &label) in level.iter().enumerate() {
            out[label] = if size == 1 {
                h[j]
            } else if j == 0 && strategy == StackStrategy::Distance {
                h[0] - distance(x.point(label), x.point(top))
            } else {
                let floor = if j == 0 { h[0] - 2.0 } else { h[j - 1] };
                let steps = (size - 1 - m) as f64;
                h[j] - steps * (h[j] - floor) / (2.0 * (size - 1) as f64)
            };
        }
        start += size;
    }
    out
}

/// Positions on the line `{z_1 = abscissa, z_2 = .. = z_{n-1} = 0}` that the
/// points of `x` are pushed to. Labels are preserved.
pub fn line_targets(
    x: &Configuration,
    abscissa: f64,
    strategy: StackStrategy,
) -> Result<Configuration> {
    if !abscissa.is_finite() {
        return Err(Error::Argument(format!(
            "abscissa {abscissa} is not finite"
        )));
    }
    if let Some(p) = x.points().find(|p| p[0] > abscissa) {
        return Err(Error::Argument(format!(
            "line at {abscissa} lies left of a point with first coordinate {}",
            p[0]
        )));
    }
    let sigma = sort_permutation(x);
    let (partition, heights) = levels_of(x, &sigma);
    let targets = stack_heights(x, &sigma, &partition, &heights, strategy);

    let mut sorted = targets.clone();
    sorted.sort_by(f64::total_cmp);
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Strategy(format!(
            "{strategy:?} stacking assigns equal heights to two points"
        )));
    }

    let n = x.dim();
    let mut coords = vec![0.0; x.len() * n];
    for (label, height) in targets.into_iter().enumerate() {
        coords[label * n] = abscissa;
        coords[label * n + n - 1] = height;
    }
    Configuration::from_flat(n, coords)
}

/// Straight-line motion of every point of `x` onto its stacking target.
pub fn approach_path(
    x: &Configuration,
    abscissa: f64,
    strategy: StackStrategy,
) -> Result<PiecewisePath> {
    let target = line_targets(x, abscissa, strategy)?;
    PiecewisePath::segment(x.clone(), target)
}

fn common_abscissa(c: &Configuration, what: &str) -> Result<f64> {
    let first = c.point(0)[0];
    if c.points().any(|p| p[0] != first) {
        return Err(Error::Argument(format!(
            "{what} configuration does not lie on one vertical line"
        )));
    }
    Ok(first)
}

/// Carries a configuration lying on one vertical line to a configuration on a
/// different parallel line, label by label.
///
/// In sequential mode the points move one per time slice, in the sorted order
/// of `from`. The moving point stays strictly between the two lines while all
/// other points sit on them, so no collision can occur.
pub fn transfer_path(
    from: &Configuration,
    to: &Configuration,
    mode: TransferMode,
) -> Result<PiecewisePath> {
    from.check_compatible(to)?;
    let c1 = common_abscissa(from, "source")?;
    let c2 = common_abscissa(to, "target")?;
    if c1 == c2 {
        return Err(Error::Argument(
            "source and target lines must be distinct".into(),
        ));
    }
    match mode {
        TransferMode::Simultaneous => PiecewisePath::segment(from.clone(), to.clone()),
        TransferMode::Sequential => {
            let n = from.dim();
            let mut current = from.as_flat().to_vec();
            let mut configs = vec![from.clone()];
            for &label in sort_permutation(from).as_slice() {
                current[label * n..(label + 1) * n].copy_from_slice(to.point(label));
                configs.push(Configuration::from_flat(n, current.clone())?);
            }
            PiecewisePath::from_uniform(configs)
        }
    }
}

pub fn plan(x: &Configuration, y: &Configuration) -> Result<PlanResult> {
    plan_with(x, y, &PlanOptions::default())
}

/// The full plan `Q_x . transfer . Q_y^-1`, with the approach on `[0, 1/4]`,
/// the transfer on `[1/4, 3/4]` and the reversed approach on `[3/4, 1]`.
pub fn plan_with(
    x: &Configuration,
    y: &Configuration,
    options: &PlanOptions,
) -> Result<PlanResult> {
    let p = p_line(x, y)?;
    let strategy = options
        .strategy
        .unwrap_or_else(|| StackStrategy::default_for(x.dim()));
    let (first, second) = (p + 1.0, p + 2.0);
    let qx = approach_path(x, first, strategy)?;
    let qy = approach_path(y, second, strategy)?;
    let transfer = transfer_path(qx.end(), qy.end(), options.transfer)?;
    let path =
        PiecewisePath::concat_weighted(&[(&qx, 1.0), (&transfer, 2.0), (&qy.reversed(), 1.0)])?;
    Ok(PlanResult {
        path,
        domain: domain_index(x, y)?,
        strata: (stratum_of(x), stratum_of(y)),
        line_abscissas: (first, second),
    })
}

/// Plans through every waypoint in turn; leg `j` of `m - 1` occupies the time
/// interval `[j / (m - 1), (j + 1) / (m - 1)]`.
pub fn plan_multi(waypoints: &[Configuration]) -> Result<PiecewisePath> {
    plan_multi_with(waypoints, &PlanOptions::default())
}

pub fn plan_multi_with(
    waypoints: &[Configuration],
    options: &PlanOptions,
) -> Result<PiecewisePath> {
    if waypoints.len() < 2 {
        return Err(Error::Argument(format!(
            "need at least two waypoints, got {}",
            waypoints.len()
        )));
    }
    let legs = waypoints
        .windows(2)
        .map(|w| plan_with(&w[0], &w[1], options).map(|r| r.path))
        .collect::<Result<Vec<_>>>()?;
    let refs: Vec<&PiecewisePath> = legs.iter().collect();
    PiecewisePath::concat(&refs)
}

/// Breakpoint times of a plan for `k` points.
pub fn plan_times(k: usize) -> Vec<f64> {
    let mut t = vec![0.0];
    t.extend((0..=k).map(|m| 0.25 + 0.5 * (m as f64 / k as f64)));
    t.push(1.0);
    t
}
